//! Integer images of rational point sets.
//!
//! Multiplying every coordinate by the lcm of all denominators is a uniform
//! positive scaling, so orientation signs are unchanged. When every scaled
//! coordinate fits in 61 bits the determinant fits in an `i128`; otherwise
//! the fallback uses `BigInt`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use super::predicates::Violation;
use super::Point2;

const SMALL_LIMIT_BITS: u64 = 61;

#[derive(Clone, Debug)]
pub enum Lattice {
    Small(Vec<(i64, i64)>),
    Big(Vec<(BigInt, BigInt)>),
}

impl Lattice {
    pub fn from_points(points: &[Point2]) -> Self {
        let mut scale = BigInt::one();
        for p in points {
            scale = scale.lcm(p.x.denom());
            scale = scale.lcm(p.y.denom());
        }
        let lift = |r: &super::Rational| r.numer() * (&scale / r.denom());
        let big: Vec<(BigInt, BigInt)> = points.iter().map(|p| (lift(&p.x), lift(&p.y))).collect();
        let fits = big
            .iter()
            .all(|(x, y)| x.abs().bits() <= SMALL_LIMIT_BITS && y.abs().bits() <= SMALL_LIMIT_BITS);
        if fits {
            Lattice::Small(big.iter().map(|(x, y)| (x.to_i64().unwrap(), y.to_i64().unwrap())).collect())
        } else {
            Lattice::Big(big)
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Lattice::Small(v) => v.len(),
            Lattice::Big(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_small(&self) -> bool {
        matches!(self, Lattice::Small(_))
    }

    /// Largest coordinate magnitude in bits.
    pub fn max_bits(&self) -> u64 {
        match self {
            Lattice::Small(v) => v
                .iter()
                .map(|&(x, y)| 64 - x.unsigned_abs().max(y.unsigned_abs()).leading_zeros() as u64)
                .max()
                .unwrap_or(0),
            Lattice::Big(v) => v.iter().map(|(x, y)| x.bits().max(y.bits())).max().unwrap_or(0),
        }
    }

    /// Orientation sign of vertices `i`, `j`, `k`.
    #[inline]
    pub fn orient(&self, i: usize, j: usize, k: usize) -> i8 {
        match self {
            Lattice::Small(v) => {
                let (ax, ay) = v[i];
                let (bx, by) = v[j];
                let (cx, cy) = v[k];
                let det = (bx as i128 - ax as i128) * (cy as i128 - ay as i128)
                    - (by as i128 - ay as i128) * (cx as i128 - ax as i128);
                det.signum() as i8
            }
            Lattice::Big(v) => {
                let (ax, ay) = &v[i];
                let (bx, by) = &v[j];
                let (cx, cy) = &v[k];
                let det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
                match det.sign() {
                    num_bigint::Sign::Minus => -1,
                    num_bigint::Sign::NoSign => 0,
                    num_bigint::Sign::Plus => 1,
                }
            }
        }
    }

    fn same(&self, i: usize, j: usize) -> bool {
        match self {
            Lattice::Small(v) => v[i] == v[j],
            Lattice::Big(v) => v[i] == v[j],
        }
    }

    /// First coincident pair, else first collinear triple, in lexicographic order.
    pub fn check_general_position(&self) -> Result<(), Violation> {
        let n = self.len();
        for i in 0..n {
            for j in i + 1..n {
                if self.same(i, j) {
                    return Err(Violation::Coincident(i, j));
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if self.orient(i, j, k) == 0 {
                        return Err(Violation::Collinear(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Orientation signs of every increasing triple, packed by combinadic index.
#[derive(Clone, Debug)]
pub struct OrientationTable {
    n: usize,
    signs: Vec<i8>,
}

#[inline]
fn c2(x: usize) -> usize {
    if x < 2 { 0 } else { x * (x - 1) / 2 }
}

#[inline]
fn c3(x: usize) -> usize {
    if x < 3 { 0 } else { x * (x - 1) * (x - 2) / 6 }
}

impl OrientationTable {
    /// Builds the table, failing on the first coincident pair or collinear triple.
    pub fn build(lattice: &Lattice) -> Result<Self, Violation> {
        let n = lattice.len();
        for i in 0..n {
            for j in i + 1..n {
                if lattice.same(i, j) {
                    return Err(Violation::Coincident(i, j));
                }
            }
        }
        let mut signs = vec![0i8; c3(n)];
        // Fill in lexicographic order so the first zero found is the first violation.
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let s = lattice.orient(i, j, k);
                    if s == 0 {
                        return Err(Violation::Collinear(i, j, k));
                    }
                    signs[c3(k) + c2(j) + i] = s;
                }
            }
        }
        Ok(Self { n, signs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Sign for increasing indices `i < j < k`.
    #[inline]
    pub fn sorted(&self, i: usize, j: usize, k: usize) -> i8 {
        debug_assert!(i < j && j < k && k < self.n);
        self.signs[c3(k) + c2(j) + i]
    }

    /// Sign for distinct indices in any order.
    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> i8 {
        let (mut a, mut b, mut c) = (i, j, k);
        let mut s = 1i8;
        if a > b {
            std::mem::swap(&mut a, &mut b);
            s = -s;
        }
        if b > c {
            std::mem::swap(&mut b, &mut c);
            s = -s;
        }
        if a > b {
            std::mem::swap(&mut a, &mut b);
            s = -s;
        }
        s * self.sorted(a, b, c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::Rational;

    #[test]
    fn scaling_picks_lcm() {
        let pts = vec![
            Point2::new(Rational::frac(1, 2), Rational::frac(1, 3)),
            Point2::new(Rational::frac(1, 4), Rational::zero()),
        ];
        match Lattice::from_points(&pts) {
            Lattice::Small(v) => assert_eq!(v, vec![(6, 4), (3, 0)]),
            Lattice::Big(_) => panic!("expected small path"),
        }
    }

    #[test]
    fn big_path_agrees_with_small() {
        let tiny = Rational::integer(1) / Rational::integer(BigInt::one() << 80u32);
        let pts = vec![
            Point2::from_ints(0, 0),
            Point2::new(Rational::one(), tiny.clone()),
            Point2::new(Rational::integer(2), Rational::zero()),
            Point2::new(Rational::integer(2), -tiny),
        ];
        let l = Lattice::from_points(&pts);
        assert!(!l.is_small());
        assert_eq!(l.orient(0, 2, 1), 1);
        assert_eq!(l.orient(0, 1, 2), -1);
        assert_eq!(l.orient(0, 2, 3), -1);
    }

    #[test]
    fn table_permutation_signs() {
        let pts: Vec<Point2> = [(0, 0), (5, 1), (2, 7), (9, 4)].iter().map(|&(x, y)| Point2::from_ints(x, y)).collect();
        let l = Lattice::from_points(&pts);
        let t = OrientationTable::build(&l).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    if i != j && j != k && i != k {
                        assert_eq!(t.get(i, j, k), l.orient(i, j, k));
                    }
                }
            }
        }
    }
}
