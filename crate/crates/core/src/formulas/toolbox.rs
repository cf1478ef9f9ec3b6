//! Elementary crossing counts for flattened clusters and the edges between them.

use num_bigint::BigUint;

use super::Quartic;
use crate::counter::BigCount;
use crate::exactgeom::Rational;

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

/// Binomial coefficient `C(n, k)`, exact.
pub fn binom(n: u64, k: u64) -> BigCount {
    if k > n {
        return BigCount::zero();
    }
    let k = k.min(n - k);
    let mut acc = big(1);
    for i in 0..k {
        acc = acc * big(n - i) / big(i + 1);
    }
    BigCount(acc)
}

/// Crossings created inside a flattened cluster of order `k` by one balanced
/// pair of edge bundles: `sum_{i=1..k} (i-1)(k-i)`.
pub fn f(k: u64) -> BigCount {
    BigCount((1..=k).map(|i| big(i - 1) * big(k - i)).sum())
}

/// `k^3/6 - k^2/2 + k/3`.
pub fn f_closed() -> Quartic {
    Quartic::in_n([Rational::zero(), Rational::frac(1, 6), Rational::frac(-1, 2), Rational::frac(1, 3), Rational::zero()])
}

/// Crossings inside a cluster edge between clusters of orders `p` and `k`.
pub fn i_cross(p: u64, k: u64) -> BigCount {
    binom(p, 2) * binom(k, 2)
}

/// Crossings where bundles of `p` and `j` edges merge at a cluster of order `k`:
/// `sum_{i=0..k-1} i p j`.
pub fn e_merge(k: u64, p: u64, j: u64) -> BigCount {
    BigCount((0..k).map(|i| big(i) * big(p) * big(j)).sum())
}

/// `p j k (k-1) / 2`.
pub fn e_merge_closed(k: u64, p: u64, j: u64) -> BigCount {
    BigCount(big(p) * big(j) * big(k) * big(k.saturating_sub(1)) / big(2))
}

/// Crossings between two cluster edges away from any cluster.
pub fn e_offvertex(p: u64, j: u64, k: u64, l: u64) -> BigCount {
    BigCount(big(p) * big(j) * big(k) * big(l))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_is_choose_three() {
        for k in 0..60u64 {
            let choose3 = if k < 3 { 0 } else { k * (k - 1) * (k - 2) / 6 };
            assert_eq!(f(k), choose3);
            assert_eq!(
                f_closed().eval_integer(k as i64, None).unwrap(),
                num_bigint::BigInt::from(choose3),
                "k={k}"
            );
        }
    }

    #[test]
    fn examples() {
        assert_eq!(f(2), 0u64);
        assert_eq!(f(3), 1u64);
        assert_eq!(f(9), 84u64);
        assert_eq!(i_cross(1, 7), 0u64);
        assert_eq!(i_cross(2, 2), 1u64);
        assert_eq!(i_cross(9, 9), 1296u64);
        assert_eq!(e_merge(1, 5, 5), 0u64);
        assert_eq!(e_merge(3, 3, 1), 9u64);
        assert_eq!(e_merge(7, 7, 7), 1029u64);
        assert_eq!(e_offvertex(5, 5, 5, 5), 625u64);
        assert_eq!(e_offvertex(0, 5, 5, 5), 0u64);
        assert_eq!(e_offvertex(1, 2, 3, 4), 24u64);
    }

    #[test]
    fn merge_sum_matches_closed() {
        for k in 0..20 {
            for p in 0..6 {
                for j in 0..6 {
                    assert_eq!(e_merge(k, p, j), e_merge_closed(k, p, j));
                }
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(81, 4), 1_663_740u64);
        assert_eq!(binom(4, 5), 0u64);
        assert_eq!(binom(9, 4), 126u64);
    }
}
