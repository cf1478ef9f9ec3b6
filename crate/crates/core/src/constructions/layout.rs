//! Three-cluster pinwheel layout shared by the Singer-type generators.
//!
//! The reference triangle has vertices `(0,0)`, `(2,0)`, `(1,2)`. Each slot
//! sits on the extension of one side, just past a triangle vertex:
//!
//! - slot 0 (right) on line `(0,0)-(2,0)` beyond `(2,0)`,
//! - slot 1 (peak) on line `(2,0)-(1,2)` beyond `(1,2)`,
//! - slot 2 (left) on line `(1,2)-(0,0)` beyond `(0,0)`.
//!
//! A flattened cluster with x in `[-1, 1]` is laid along its slot's axis
//! `u`, centered at `origin + CENTER u`, with half-length `HALF |u|`.
//! Its y-axis maps to a slot-specific normal.

use crate::exactgeom::{Drawing, Point2, Rational};

const CENTER: (i64, i64) = (3, 8);
const HALF: (i64, i64) = (1, 8);

#[derive(Clone, Debug)]
pub struct SlotFrame {
    pub origin: (Rational, Rational),
    pub axis: (Rational, Rational),
    /// Normal used inside the recursion: the cluster's top side faces the
    /// slot listed in `TOP_NEIGHBOR`.
    pub recursive_normal: (Rational, Rational),
    /// Normal pointing into the reference triangle, used at the top level
    /// of the slide and asymmetric constructions.
    pub inward_normal: (Rational, Rational),
}

fn pair(x: i64, y: i64) -> (Rational, Rational) {
    (Rational::integer(x), Rational::integer(y))
}

pub fn slot_frame(slot: usize) -> SlotFrame {
    match slot {
        0 => SlotFrame { origin: pair(2, 0), axis: pair(2, 0), recursive_normal: pair(0, 1), inward_normal: pair(0, 1) },
        1 => SlotFrame { origin: pair(1, 2), axis: pair(-1, 2), recursive_normal: pair(2, 1), inward_normal: pair(-2, -1) },
        2 => SlotFrame { origin: pair(0, 0), axis: pair(-1, -2), recursive_normal: pair(-2, 1), inward_normal: pair(2, -1) },
        _ => panic!("slot index {slot} out of range"),
    }
}

/// Slot whose side line is crossed when the cluster in `slot` slides.
pub const SLIDE_ACROSS: [usize; 3] = [1, 2, 0];

fn cross(u: &(Rational, Rational), v: &(Rational, Rational)) -> Rational {
    &u.0 * &v.1 - &u.1 * &v.0
}

/// Places a normalized, flattened cluster into `slot` with the given normal.
pub fn place(cluster: &Drawing, slot: usize, normal: &(Rational, Rational)) -> Vec<Point2> {
    let frame = slot_frame(slot);
    let t = Rational::frac(CENTER.0, CENTER.1);
    let h = Rational::frac(HALF.0, HALF.1);
    let cx = &frame.origin.0 + &t * &frame.axis.0;
    let cy = &frame.origin.1 + &t * &frame.axis.1;
    let hx = &h * &frame.axis.0;
    let hy = &h * &frame.axis.1;
    cluster
        .points
        .iter()
        .map(|p| Point2::new(&cx + &p.x * &hx + &p.y * &normal.0, &cy + &p.x * &hy + &p.y * &normal.1))
        .collect()
}

/// Translates a placed cluster backwards along its axis until exactly
/// `moved` of its vertices have crossed the side line of `SLIDE_ACROSS[slot]`.
///
/// With `sigma_i` the translation at which vertex `i` reaches that line,
/// the shift is the midpoint of the `moved`-th and next smallest `sigma`,
/// or a margin past the largest when every vertex moves.
pub fn slide_cluster(points: &[Point2], slot: usize, moved: usize) -> Vec<Point2> {
    if moved == 0 || points.is_empty() {
        return points.to_vec();
    }
    let frame = slot_frame(slot);
    let line = slot_frame(SLIDE_ACROSS[slot]);
    let cu = cross(&line.axis, &frame.axis);
    let mut sigma: Vec<Rational> = points
        .iter()
        .map(|p| cross(&line.axis, &(&p.x - &line.origin.0, &p.y - &line.origin.1)) / &cu)
        .collect();
    sigma.sort();
    let k = sigma.len();
    let delta = if moved < k {
        (&sigma[moved - 1] + &sigma[moved]) / Rational::integer(2)
    } else {
        let (lo, hi) = (&sigma[0], &sigma[k - 1]);
        hi + (hi - lo) / Rational::integer(k as i64)
    };
    let dx = &delta * &frame.axis.0;
    let dy = &delta * &frame.axis.1;
    points.iter().map(|p| Point2::new(&p.x - &dx, &p.y - &dy)).collect()
}
