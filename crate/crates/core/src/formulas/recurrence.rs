//! Recursive counts for template constructions on `n = a^j` vertices.

use super::toolbox::{binom, e_merge, e_offvertex, f, i_cross};
use super::{FormulaError, Quartic};
use crate::counter::BigCount;
use crate::exactgeom::Rational;

/// Known rectilinear crossing numbers of small complete graphs.
#[derive(Clone, Copy, Debug)]
pub struct BaseCrossings;

impl BaseCrossings {
    const TABLE: [(u64, u64); 6] = [(3, 0), (4, 0), (5, 1), (7, 9), (9, 36), (10, 62)];

    pub fn get(a: u64) -> Option<u64> {
        Self::TABLE.iter().find(|&&(k, _)| k == a).map(|&(_, v)| v)
    }

    pub fn entries() -> &'static [(u64, u64)] {
        &Self::TABLE
    }
}

/// `Some(j)` with `j >= 1` if `n = base^j`.
pub fn power_of(n: u64, base: u64) -> Option<u32> {
    if base < 2 || n < base {
        return None;
    }
    let mut m = n;
    let mut j = 0;
    while m.is_multiple_of(base) {
        m /= base;
        j += 1;
    }
    (m == 1).then_some(j)
}

fn require_power(n: u64, base: u64) -> Result<u32, FormulaError> {
    power_of(n, base).ok_or(FormulaError::NotPowerOf { n, base })
}

fn odd_template(a: u64) -> Result<u64, FormulaError> {
    if a.is_multiple_of(2) {
        return Err(FormulaError::EvenTemplate(a));
    }
    BaseCrossings::get(a).ok_or(FormulaError::UnknownBase(a))
}

/// Per-level weights of the four top-level terms: `k f(k)`, `e(k,k,k)`,
/// `i(k,k)` and `k^4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct LevelWeights {
    docking: u64,
    merging: u64,
    internal: u64,
    offvertex: u64,
}

impl LevelWeights {
    fn odd(a: u64, cr: u64) -> Self {
        let half = (a - 1) / 2;
        let pairs = a * (a - 1) / 2;
        Self { docking: pairs, merging: 2 * a * (half * half.saturating_sub(1) / 2), internal: pairs, offvertex: cr }
    }

    fn four() -> Self {
        Self { docking: 6, merging: 4, internal: 6, offvertex: 0 }
    }

    fn level(&self, k: u64) -> BigCount {
        BigCount::from(k) * f(k) * self.docking
            + e_merge(k, k, k) * self.merging
            + i_cross(k, k) * self.internal
            + e_offvertex(k, k, k, k) * self.offvertex
    }

    /// The level term as a polynomial in `k`.
    fn level_poly(&self) -> [Rational; 5] {
        let w = |x: u64| Rational::integer(x as i64);
        // k f(k) = k^4/6 - k^3/2 + k^2/3; e(k,k,k) = k^4/2 - k^3/2;
        // i(k,k) = k^4/4 - k^3/2 + k^2/4.
        let kf = [Rational::frac(1, 6), Rational::frac(-1, 2), Rational::frac(1, 3)];
        let e = [Rational::frac(1, 2), Rational::frac(-1, 2), Rational::zero()];
        let i = [Rational::frac(1, 4), Rational::frac(-1, 2), Rational::frac(1, 4)];
        let mut out = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
        for d in 0..3 {
            out[d] = w(self.docking) * &kf[d] + w(self.merging) * &e[d] + w(self.internal) * &i[d];
        }
        out[0] += &w(self.offvertex);
        out
    }
}

fn run_recurrence(a: u64, n: u64, base: u64, weights: LevelWeights) -> BigCount {
    if n == a {
        return BigCount::from(base);
    }
    let k = n / a;
    run_recurrence(a, k, base, weights) * a + weights.level(k)
}

/// Count for the recursive construction on an odd template `K_a`, `n = a^j`.
pub fn c_recurrence(a: u64, n: u64) -> Result<BigCount, FormulaError> {
    let cr = odd_template(a)?;
    require_power(n, a)?;
    Ok(run_recurrence(a, n, cr, LevelWeights::odd(a, cr)))
}

/// Count for the recursive construction on the template `K_4`, `n = 4^j`.
pub fn c4_recurrence(n: u64) -> Result<BigCount, FormulaError> {
    require_power(n, 4)?;
    Ok(run_recurrence(4, n, 0, LevelWeights::four()))
}

/// The same count as [`c_recurrence`], unrolled into a sum over levels with
/// `k = n / a^j` at level `j`.
pub fn c_nonrecursive(a: u64, n: u64) -> Result<BigCount, FormulaError> {
    let cr = odd_template(a)?;
    let levels = require_power(n, a)?;
    let weights = LevelWeights::odd(a, cr);
    let mut total = BigCount::from(n / a) * cr;
    for j in 1..levels {
        let k = n / a.pow(j);
        total = total + weights.level(k) * a.pow(j - 1);
    }
    Ok(total)
}

/// Exact quartic solving `C(n) = a C(n/a) + P(n/a)` with `C(a) = base`.
///
/// The level term has no constant or linear part, so matching coefficients
/// gives `alpha_m (1 - a^(1-m)) = P_m / a^m` for `m = 2..4`, and the base case
/// fixes `alpha_1`.
fn solve(a: u64, base: u64, weights: LevelWeights) -> Quartic {
    let p = weights.level_poly();
    let ar = Rational::integer(a as i64);
    let mut alpha = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
    for m in 2..=4u32 {
        let pm = &p[(4 - m) as usize];
        let denom = ar.pow(m as i32) * (Rational::one() - ar.pow(1 - m as i32));
        alpha[(4 - m) as usize] = pm / denom;
    }
    let higher: Rational = (2..=4u32).map(|m| &alpha[(4 - m) as usize] * ar.pow(m as i32)).sum();
    alpha[3] = (Rational::integer(base as i64) - higher) / &ar;
    Quartic::in_n(alpha)
}

/// Closed form derived from the recurrence for an odd template.
pub fn derived_closed_form(a: u64) -> Result<Quartic, FormulaError> {
    let cr = odd_template(a)?;
    Ok(solve(a, cr, LevelWeights::odd(a, cr)))
}

/// Closed form derived from the `K_4` recurrence.
pub fn derived_closed_form_c4() -> Quartic {
    solve(4, 0, LevelWeights::four())
}

/// Crossings added when one new vertex docks above a flattened recursive
/// cluster of order `n = 3^j` (triangles pointing upward).
pub fn f_top(n: u64) -> Result<BigCount, FormulaError> {
    require_power(n, 3)?;
    Ok(docking_side(n, false))
}

/// As [`f_top`], for a vertex docking below the cluster.
pub fn f_bot(n: u64) -> Result<BigCount, FormulaError> {
    require_power(n, 3)?;
    Ok(docking_side(n, true))
}

fn docking_side(n: u64, below: bool) -> BigCount {
    if n == 3 {
        return BigCount::from(below as u64);
    }
    let k = n / 3;
    let extra = if below { BigCount::from(k * k * k) } else { BigCount::zero() };
    (docking_side(k, below) + e_merge(k, k, 1)) * 3 + extra
}

/// `n^3/16 - n^2/4 + 3n/16`.
pub fn f_top_closed() -> Quartic {
    Quartic::in_n([Rational::zero(), Rational::frac(1, 16), Rational::frac(-1, 4), Rational::frac(3, 16), Rational::zero()])
}

/// `5n^3/48 - n^2/4 + 7n/48`.
pub fn f_bot_closed() -> Quartic {
    Quartic::in_n([Rational::zero(), Rational::frac(5, 48), Rational::frac(-1, 4), Rational::frac(7, 48), Rational::zero()])
}

/// Share of the Singer count created at the top level of the recursion:
/// `(C3(n) - 3 C3(n/3)) / C3(n)`.
pub fn top_level_share(n: u64) -> Result<Rational, FormulaError> {
    require_power(n, 3)?;
    if n == 3 {
        return Err(FormulaError::TooSmall { n, min: 9 });
    }
    let whole = to_rational(&c_recurrence(3, n)?);
    let parts = to_rational(&c_recurrence(3, n / 3)?) * Rational::integer(3);
    Ok((&whole - parts) / whole)
}

pub(crate) fn to_rational(c: &BigCount) -> Rational {
    Rational::integer(num_bigint::BigInt::from(c.0.clone()))
}

/// `C(n, 4)` as a rational, for ratios.
pub(crate) fn choose4(n: u64) -> Rational {
    to_rational(&binom(n, 4))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recurrence_examples() {
        assert_eq!(c_recurrence(3, 9).unwrap(), 36u64);
        assert_eq!(c_recurrence(3, 27).unwrap(), 6264u64);
        assert_eq!(c_recurrence(5, 25).unwrap(), 4630u64);
        assert_eq!(c_recurrence(7, 49).unwrap(), 79_296u64);
        assert_eq!(c4_recurrence(4).unwrap(), 0u64);
        assert_eq!(c4_recurrence(16).unwrap(), 696u64);
    }

    #[test]
    fn recurrence_domain_errors() {
        assert_eq!(c_recurrence(4, 16), Err(FormulaError::EvenTemplate(4)));
        assert_eq!(c_recurrence(11, 121), Err(FormulaError::UnknownBase(11)));
        assert_eq!(c_recurrence(3, 10), Err(FormulaError::NotPowerOf { n: 10, base: 3 }));
        assert_eq!(c_recurrence(3, 1), Err(FormulaError::NotPowerOf { n: 1, base: 3 }));
        assert_eq!(c4_recurrence(8), Err(FormulaError::NotPowerOf { n: 8, base: 4 }));
    }

    #[test]
    fn unrolled_sum_matches_recurrence() {
        for a in [3u64, 5, 7, 9] {
            let mut n = a;
            while n <= 200_000 {
                assert_eq!(c_nonrecursive(a, n).unwrap(), c_recurrence(a, n).unwrap(), "a={a} n={n}");
                n *= a;
            }
        }
    }

    #[test]
    fn docking_sides() {
        assert_eq!(f_top(3).unwrap(), 0u64);
        assert_eq!(f_bot(3).unwrap(), 1u64);
        assert_eq!(f_top(9).unwrap(), 27u64);
        assert_eq!(f_bot(9).unwrap(), 57u64);
        assert!(f_top(10).is_err());
    }

    #[test]
    fn powers() {
        assert_eq!(power_of(81, 3), Some(4));
        assert_eq!(power_of(3, 3), Some(1));
        assert_eq!(power_of(1, 3), None);
        assert_eq!(power_of(18, 3), None);
    }
}
