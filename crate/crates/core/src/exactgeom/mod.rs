//! Exact rationals, points, drawings and orientation predicates.

mod lattice;
mod point;
mod predicates;
mod rational;

pub use lattice::{Lattice, OrientationTable};
pub use point::{Drawing, Point2};
pub use predicates::{
    in_convex_position, orientation, segments_properly_intersect, validate_general_position, DegenerateInput,
    Orientation, Violation,
};
pub(crate) use predicates::{convex_by_orient, crosses_by_sign};
pub use rational::{Rational, RationalError};
