use num_bigint::BigInt;
use num_traits::One;

use super::ConstructionError;
use crate::exactgeom::{Drawing, Point2, Rational};

/// Height bound for a flattened cluster.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlattenParams {
    epsilon: Rational,
}

impl FlattenParams {
    pub fn new(epsilon: Rational) -> Result<Self, ConstructionError> {
        if !epsilon.is_positive() {
            return Err(ConstructionError::NonPositiveEpsilon(epsilon));
        }
        Ok(Self { epsilon })
    }

    pub fn epsilon(&self) -> &Rational {
        &self.epsilon
    }
}

fn extent(values: impl Iterator<Item = Rational>) -> Option<(Rational, Rational)> {
    values.fold(None, |acc, v| match acc {
        None => Some((v.clone(), v)),
        Some((lo, hi)) => Some((lo.min(v.clone()), hi.max(v))),
    })
}

/// Smallest power of two that is at least `x`, for `x > 0`.
fn pow2_at_least(x: &Rational) -> Rational {
    let mut p = Rational::one();
    let two = Rational::integer(2);
    while &p < x {
        p *= &two;
    }
    p
}

/// Compresses the drawing vertically about its mid-height so that its
/// height is at most `epsilon`. The compression factor is `epsilon / 2^c`
/// with `2^c` the smallest power of two not below the current height (and
/// `c >= 0`), which keeps denominators dyadic. x-coordinates are unchanged.
pub fn flatten(d: &Drawing, p: &FlattenParams) -> Drawing {
    let Some((lo, hi)) = extent(d.points.iter().map(|q| q.y.clone())) else {
        return d.clone();
    };
    let height = &hi - &lo;
    if height.is_zero() {
        return d.clone();
    }
    let mid = (&lo + &hi) / Rational::integer(2);
    let factor = p.epsilon() / pow2_at_least(&height);
    let points = d
        .points
        .iter()
        .map(|q| Point2::new(q.x.clone(), &mid + (&q.y - &mid) * &factor))
        .collect();
    Drawing::new(points, d.label.clone())
}

/// Uniform scaling and translation taking the x-extent to `[-1, 1]` and the
/// mid-height to 0. Drawings of zero width are scaled by their height instead,
/// and a single point is moved to the origin.
pub fn normalize(d: &Drawing) -> Drawing {
    let (Some((xlo, xhi)), Some((ylo, yhi))) =
        (extent(d.points.iter().map(|q| q.x.clone())), extent(d.points.iter().map(|q| q.y.clone())))
    else {
        return d.clone();
    };
    let two = Rational::integer(2);
    let xmid = (&xlo + &xhi) / &two;
    let ymid = (&ylo + &yhi) / &two;
    let span = if xhi > xlo { &xhi - &xlo } else { &yhi - &ylo };
    let scale = if span.is_zero() { Rational::one() } else { &two / span };
    let points = d
        .points
        .iter()
        .map(|q| Point2::new((&q.x - &xmid) * &scale, (&q.y - &ymid) * &scale))
        .collect();
    Drawing::new(points, d.label.clone())
}

/// `normalize` followed by `flatten`: the standard cluster shape used by
/// every recursive generator.
pub fn flat_cluster(d: &Drawing, epsilon: &Rational) -> Drawing {
    let params = FlattenParams { epsilon: epsilon.clone() };
    flatten(&normalize(d), &params)
}

/// `2^-bits` as an exact rational.
pub(crate) fn dyadic(bits: u32) -> Rational {
    Rational::integer(1) / Rational::integer(BigInt::one() << bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn height_bound() {
        let d = Drawing::new(vec![Point2::from_ints(0, 0), Point2::from_ints(1, 5), Point2::from_ints(3, 1)], "t");
        let p = FlattenParams::new(Rational::frac(1, 100)).unwrap();
        let out = flatten(&d, &p);
        let (lo, hi) = extent(out.points.iter().map(|q| q.y.clone())).unwrap();
        assert!(&hi - &lo <= Rational::frac(1, 100));
        assert_eq!(out.points[0].x, d.points[0].x);
    }

    #[test]
    fn rejects_nonpositive_epsilon() {
        assert!(FlattenParams::new(Rational::zero()).is_err());
        assert!(FlattenParams::new(Rational::frac(-1, 2)).is_err());
    }

    #[test]
    fn single_point_is_unchanged() {
        let d = Drawing::new(vec![Point2::from_ints(3, 4)], "p");
        let out = flatten(&d, &FlattenParams::new(Rational::frac(1, 8)).unwrap());
        assert_eq!(out.points, d.points);
    }

    #[test]
    fn normalize_spans_unit_interval() {
        let d = Drawing::new(vec![Point2::from_ints(2, 0), Point2::from_ints(6, 3), Point2::from_ints(4, 9)], "t");
        let out = normalize(&d);
        assert_eq!(out.points[0].x, Rational::integer(-1));
        assert_eq!(out.points[1].x, Rational::integer(1));
        assert_eq!(out.points[2].y, Rational::frac(9, 4));
    }
}
