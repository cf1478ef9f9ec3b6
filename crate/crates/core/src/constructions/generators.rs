//! Raw generators: each builds one drawing for a fixed flattening height,
//! without checking its crossing count.

use std::sync::OnceLock;

use super::flatten::flat_cluster;
use super::layout::{place, slide_cluster, slot_frame};
use super::ConstructionError;
use crate::cli::format;
use crate::counter::{count_crossings, Method};
use crate::exactgeom::{Drawing, Point2, Rational};
use crate::formulas::{BaseCrossings, ThirdsTable};

/// `n` points on the parabola `y = x^2`.
pub fn convex_points(n: usize) -> Drawing {
    let points = (0..n as i64).map(|i| Point2::from_ints(i, i * i)).collect();
    Drawing::new(points, format!("convex({n})"))
}

/// Generalized-thirds drawing: clusters of the sizes chosen by `table`
/// placed in the pinwheel slots, recursively.
pub fn thirds(n: usize, table: &ThirdsTable, epsilon: &Rational) -> Drawing {
    let points = match n {
        0 => Vec::new(),
        1 => vec![Point2::from_ints(0, 0)],
        2 => vec![Point2::from_ints(-1, 0), Point2::from_ints(1, 0)],
        _ => {
            let sizes = table.slot_sizes(n).expect("sizes for n >= 3");
            let mut pts = Vec::with_capacity(n);
            for (slot, &size) in sizes.iter().enumerate() {
                let sub = flat_cluster(&thirds(size, table, epsilon), epsilon);
                pts.extend(place(&sub, slot, &slot_frame(slot).recursive_normal));
            }
            pts
        }
    };
    Drawing::new(points, format!("thirds({n})"))
}

/// `k` points on the arc `y = 1 - x^2`, `x` evenly spaced in `[-1, 1]`.
pub fn cap(k: usize) -> Drawing {
    let points = if k == 1 {
        vec![Point2::from_ints(0, 0)]
    } else {
        (0..k as i64)
            .map(|i| {
                let x = Rational::frac(2 * i - (k as i64 - 1), k as i64 - 1);
                let y = Rational::one() - &x * &x;
                Point2::new(x, y)
            })
            .collect()
    };
    Drawing::new(points, format!("cap({k})"))
}

/// Three copies of `cluster` in the pinwheel with inward normals; the first
/// `moved_slots` of them slide so that `moved` vertices each change side.
fn top_level(cluster: &Drawing, moved_slots: usize, moved: usize, label: String) -> Drawing {
    let mut pts = Vec::with_capacity(3 * cluster.len());
    for slot in 0..3 {
        let placed = place(cluster, slot, &slot_frame(slot).inward_normal);
        let moved_here = if slot < moved_slots { moved } else { 0 };
        pts.extend(slide_cluster(&placed, slot, moved_here));
    }
    Drawing::new(pts, label)
}

/// Slide construction on `n = 3k` vertices: recursive clusters of order `k`,
/// `variant` of them translated so that `k - a` vertices each change side.
///
/// Inner levels are flattened to `epsilon`, the top-level clusters to
/// `epsilon^2`, because moved vertices pass close to a neighbour's axis.
pub fn slide_raw(variant: u8, n: usize, a: usize, epsilon: &Rational) -> Drawing {
    let k = n / 3;
    let table = ThirdsTable::up_to(k.max(2));
    let sub = flat_cluster(&thirds(k, &table, epsilon), &(epsilon * epsilon));
    top_level(&sub, variant as usize, k - a, format!("s{variant}({n},{a})"))
}

/// Maximally asymmetric construction: three convex arcs of order `k = n/3`,
/// each slid so that `k - a` vertices change side.
pub fn max_asym_raw(n: usize, a: usize, epsilon: &Rational) -> Drawing {
    let k = n / 3;
    let sub = flat_cluster(&cap(k), &(epsilon * epsilon));
    top_level(&sub, 3, k - a, format!("max_asym({n},{a})"))
}

const TEMPLATE_SOURCES: [(u64, &str); 4] = [
    (4, include_str!("../../fixtures/k4.rcn")),
    (5, include_str!("../../fixtures/k5.rcn")),
    (7, include_str!("../../fixtures/k7.rcn")),
    (9, include_str!("../../fixtures/k9.rcn")),
];

/// Bundled optimal drawing of `K_a`, checked against its known crossing
/// number on first use.
pub fn template(a: u64) -> Result<&'static Drawing, ConstructionError> {
    static LOADED: OnceLock<Vec<(u64, Result<Drawing, String>)>> = OnceLock::new();
    let loaded = LOADED.get_or_init(|| TEMPLATE_SOURCES.iter().map(|&(a, src)| (a, load_template(a, src))).collect());
    let (_, entry) = loaded.iter().find(|(k, _)| *k == a).ok_or(ConstructionError::NoTemplate(a))?;
    entry.as_ref().map_err(|e| ConstructionError::BadTemplate { a, reason: e.clone() })
}

fn load_template(a: u64, src: &str) -> Result<Drawing, String> {
    let d = format::parse(src, &format!("K{a}")).map_err(|e| e.to_string())?;
    let expected = BaseCrossings::get(a).ok_or("no known crossing number")?;
    let got = count_crossings(&d, Method::Quads, 1).map_err(|e| e.to_string())?;
    if got != expected || d.len() as u64 != a {
        return Err(format!("fixture has {} vertices and {got} crossings, expected {a} and {expected}", d.len()));
    }
    Ok(d)
}

type Dir = (Rational, Rational);

fn cross(u: &Dir, v: &Dir) -> Rational {
    &u.0 * &v.1 - &u.1 * &v.0
}

/// For each template vertex, a cluster axis `d` that splits the other
/// vertices as evenly as the template allows, and the number of them on the
/// left of `d`.
///
/// Candidates are sums of angularly consecutive unit (L1) directions
/// `±(Q - P)`; among those with the required split, the one maximizing the
/// smallest squared sine to any `Q - P` wins, the first found on ties.
fn template_axes(t: &Drawing) -> Vec<(Dir, usize)> {
    let a = t.len();
    t.points
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let vs: Vec<Dir> = t
                .points
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, q)| (&q.x - &p.x, &q.y - &p.y))
                .collect();
            let dirs: Vec<Dir> = vs
                .iter()
                .cloned()
                .chain(vs.iter().map(|(x, y)| (-x, -y)))
                .map(|(x, y)| {
                    let l1 = x.abs() + y.abs();
                    (&x / &l1, &y / &l1)
                })
                .collect();
            let mut best: Option<(Rational, Dir, usize)> = None;
            for w1 in &dirs {
                for w2 in &dirs {
                    if !cross(w1, w2).is_positive() {
                        continue;
                    }
                    if dirs.iter().any(|w| cross(w1, w).is_positive() && cross(w, w2).is_positive()) {
                        continue;
                    }
                    let d = (&w1.0 + &w2.0, &w1.1 + &w2.1);
                    let left = vs.iter().filter(|v| cross(&d, v).is_positive()).count();
                    let ok = if a % 2 == 1 { left == (a - 1) / 2 } else { left == 1 || left == 2 };
                    if !ok {
                        continue;
                    }
                    let dd = &d.0 * &d.0 + &d.1 * &d.1;
                    let score = vs
                        .iter()
                        .map(|v| {
                            let c = cross(&d, v);
                            &c * &c / (&dd * (&v.0 * &v.0 + &v.1 * &v.1))
                        })
                        .min()
                        .expect("at least one other vertex");
                    if best.as_ref().is_none_or(|(m, _, _)| score > *m) {
                        best = Some((score, d, left));
                    }
                }
            }
            let (_, d, left) = best.expect("template admits a halving axis");
            (d, left)
        })
        .collect()
}

/// Recursive drawing of `K_{a^j}` on a bundled template.
///
/// Every template vertex is replaced by a flattened copy of the level below,
/// laid along its axis. For odd `a` the top side faces the left of the axis.
/// For `a = 4` clusters 0 and 1 turn their top toward the side with two
/// template neighbours and clusters 2 and 3 toward the side with one.
pub fn base_a_raw(a: u64, j: u32, epsilon: &Rational) -> Result<Drawing, ConstructionError> {
    let t = template(a)?;
    if j <= 1 {
        let mut d = t.clone();
        d.label = format!("base_a({a},1)");
        return Ok(d);
    }
    let sub = flat_cluster(&base_a_raw(a, j - 1, epsilon)?, epsilon);
    let h = Rational::frac(1, 8);
    let mut pts = Vec::with_capacity(sub.len() * t.len());
    for (i, (p, (d, left))) in t.points.iter().zip(template_axes(t)).enumerate() {
        let mut normal = (-&d.1, d.0.clone());
        if a == 4 && (left == 2) != (i < 2) {
            normal = (-&normal.0, -&normal.1);
        }
        for q in &sub.points {
            let x = &p.x + &h * (&q.x * &d.0 + &q.y * &normal.0);
            let y = &p.y + &h * (&q.x * &d.1 + &q.y * &normal.1);
            pts.push(Point2::new(x, y));
        }
    }
    Ok(Drawing::new(pts, format!("base_a({a},{j})")))
}
