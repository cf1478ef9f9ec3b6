use thiserror::Error;

use super::{Drawing, Lattice, Point2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn as_i8(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }

    pub fn from_sign(s: i8) -> Self {
        match s.signum() {
            -1 => Orientation::Clockwise,
            0 => Orientation::Collinear,
            _ => Orientation::CounterClockwise,
        }
    }

    pub fn reversed(self) -> Self {
        Self::from_sign(-self.as_i8())
    }
}

/// A four-point predicate received three collinear (or coincident) points.
/// Indices refer to argument positions, 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
#[error("arguments {0:?} are collinear")]
pub struct DegenerateInput(pub [usize; 3]);

/// Sign of the cross product (b - a) x (c - a).
pub fn orientation(a: &Point2, b: &Point2, c: &Point2) -> Orientation {
    let det = (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x);
    Orientation::from_sign(det.signum())
}

fn first_collinear(pts: [&Point2; 4]) -> Option<[usize; 3]> {
    const TRIPLES: [[usize; 3]; 4] = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    TRIPLES
        .into_iter()
        .find(|t| orientation(pts[t[0]], pts[t[1]], pts[t[2]]) == Orientation::Collinear)
}

/// True iff the open segments `p1p2` and `q1q2` share exactly one point.
///
/// Segments that share an endpoint never cross. Otherwise the four points
/// must be in general position.
pub fn segments_properly_intersect(
    p1: &Point2,
    p2: &Point2,
    q1: &Point2,
    q2: &Point2,
) -> Result<bool, DegenerateInput> {
    if p1 == q1 || p1 == q2 || p2 == q1 || p2 == q2 {
        return Ok(false);
    }
    if let Some(t) = first_collinear([p1, p2, q1, q2]) {
        return Err(DegenerateInput(t));
    }
    Ok(crosses_by_sign(
        orientation(p1, p2, q1).as_i8(),
        orientation(p1, p2, q2).as_i8(),
        orientation(q1, q2, p1).as_i8(),
        orientation(q1, q2, p2).as_i8(),
    ))
}

/// Crossing test from the four endpoint orientations.
#[inline]
pub(crate) fn crosses_by_sign(o1: i8, o2: i8, o3: i8, o4: i8) -> bool {
    o1 * o2 < 0 && o3 * o4 < 0
}

/// True iff `p` lies strictly inside the triangle `abc`, given orientations
/// `abc`, `abp`, `bcp`, `cap`.
#[inline]
pub(crate) fn inside_by_sign(abc: i8, abp: i8, bcp: i8, cap: i8) -> bool {
    abp == abc && bcp == abc && cap == abc
}

/// Convex position of four points from an orientation oracle over indices
/// 0..4. No point may lie inside the triangle of the other three.
#[inline]
pub(crate) fn convex_by_orient(o: impl Fn(usize, usize, usize) -> i8) -> bool {
    const SPLITS: [(usize, [usize; 3]); 4] = [(3, [0, 1, 2]), (2, [0, 1, 3]), (1, [0, 2, 3]), (0, [1, 2, 3])];
    SPLITS.iter().all(|&(p, [a, b, c])| !inside_by_sign(o(a, b, c), o(a, b, p), o(b, c, p), o(c, a, p)))
}

/// True iff the four points are the vertices of a convex quadrilateral.
pub fn in_convex_position(a: &Point2, b: &Point2, c: &Point2, d: &Point2) -> Result<bool, DegenerateInput> {
    let pts = [a, b, c, d];
    if let Some(t) = first_collinear(pts) {
        return Err(DegenerateInput(t));
    }
    Ok(convex_by_orient(|i, j, k| orientation(pts[i], pts[j], pts[k]).as_i8()))
}

/// Why a drawing is not in general position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("vertices {0} and {1} coincide")]
    Coincident(usize, usize),
    #[error("vertices {0}, {1}, {2} are collinear")]
    Collinear(usize, usize, usize),
}

impl Violation {
    /// The offending vertex indices, in increasing order.
    pub fn indices(&self) -> Vec<usize> {
        match *self {
            Violation::Coincident(i, j) => vec![i, j],
            Violation::Collinear(i, j, k) => vec![i, j, k],
        }
    }
}

/// Checks that all vertices are distinct and no three are collinear.
/// Reports the lexicographically first violating pair, then triple.
pub fn validate_general_position(d: &Drawing) -> Result<(), Violation> {
    let lattice = Lattice::from_points(&d.points);
    lattice.check_general_position()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::Rational;

    fn p(x: i64, y: i64) -> Point2 {
        Point2::from_ints(x, y)
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(0, 1)), Orientation::CounterClockwise);
        assert_eq!(orientation(&p(0, 0), &p(1, 1), &p(2, 2)), Orientation::Collinear);
        assert_eq!(orientation(&p(0, 0), &p(0, 1), &p(1, 0)), Orientation::Clockwise);
    }

    #[test]
    fn segment_examples() {
        assert_eq!(segments_properly_intersect(&p(0, 0), &p(2, 2), &p(0, 2), &p(2, 0)), Ok(true));
        assert_eq!(segments_properly_intersect(&p(0, 0), &p(1, 0), &p(0, 0), &p(0, 1)), Ok(false));
        assert_eq!(segments_properly_intersect(&p(0, 0), &p(1, 0), &p(0, 1), &p(1, 1)), Ok(false));
        assert_eq!(
            segments_properly_intersect(&p(0, 0), &p(2, 0), &p(1, 0), &p(1, 1)),
            Err(DegenerateInput([0, 1, 2]))
        );
    }

    #[test]
    fn convex_examples() {
        assert_eq!(in_convex_position(&p(0, 0), &p(1, 0), &p(1, 1), &p(0, 1)), Ok(true));
        assert_eq!(in_convex_position(&p(0, 0), &p(4, 0), &p(0, 4), &p(1, 1)), Ok(false));
        assert!(in_convex_position(&p(0, 0), &p(1, 1), &p(2, 2), &p(5, 0)).is_err());
    }

    #[test]
    fn regular_octagon_subsets_are_convex() {
        // Rational points on the unit circle from Pythagorean triples, in angular order.
        let r = |x: i64, y: i64, d: i64| Point2::new(Rational::frac(x, d), Rational::frac(y, d));
        let octagon = [
            r(1, 0, 1),
            r(4, 3, 5),
            r(3, 4, 5),
            r(0, 1, 1),
            r(-4, 3, 5),
            r(-1, 0, 1),
            r(-3, -4, 5),
            r(4, -3, 5),
        ];
        for a in 0..8 {
            for b in a + 1..8 {
                for c in b + 1..8 {
                    for d in c + 1..8 {
                        let got = in_convex_position(&octagon[a], &octagon[b], &octagon[c], &octagon[d]);
                        assert_eq!(got, Ok(true), "{a} {b} {c} {d}");
                    }
                }
            }
        }
    }

    #[test]
    fn general_position_reports() {
        let tri = Drawing::new(vec![p(0, 0), p(1, 0), p(0, 1)], "t");
        assert_eq!(validate_general_position(&tri), Ok(()));
        let line = Drawing::new(vec![p(0, 0), p(1, 1), p(2, 2)], "l");
        assert_eq!(validate_general_position(&line), Err(Violation::Collinear(0, 1, 2)));
        let dup = Drawing::new(vec![p(0, 0), p(3, 1), p(0, 0)], "d");
        assert_eq!(validate_general_position(&dup), Err(Violation::Coincident(0, 2)));
    }
}
