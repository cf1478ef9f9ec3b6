use std::fmt;

use super::Rational;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point2 {
    pub x: Rational,
    pub y: Rational,
}

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Self::new(Rational::integer(x), Rational::integer(y))
    }

    pub fn translate(&self, dx: &Rational, dy: &Rational) -> Self {
        Self::new(&self.x + dx, &self.y + dy)
    }
}

impl fmt::Debug for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A rectilinear drawing of the complete graph on `points.len()` vertices.
///
/// Vertex `i` is `points[i]`; every pair of vertices is joined by a straight
/// segment. The label names the strategy that produced the drawing and is
/// not part of its geometric identity.
#[derive(Clone, Debug)]
pub struct Drawing {
    pub points: Vec<Point2>,
    pub label: String,
}

impl Drawing {
    pub fn new(points: Vec<Point2>, label: impl Into<String>) -> Self {
        Self { points, label: label.into() }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Applies `(x, y) -> (m00 x + m01 y + tx, m10 x + m11 y + ty)` to every vertex.
    pub fn map_affine(&self, m: [[&Rational; 2]; 2], t: [&Rational; 2]) -> Drawing {
        let points = self
            .points
            .iter()
            .map(|p| {
                Point2::new(
                    m[0][0] * &p.x + m[0][1] * &p.y + t[0],
                    m[1][0] * &p.x + m[1][1] * &p.y + t[1],
                )
            })
            .collect();
        Drawing::new(points, self.label.clone())
    }
}
