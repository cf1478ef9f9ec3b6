//! Counting for the generalized-thirds construction on any `n`.
//!
//! A drawing on `n` vertices is split into three recursive clusters of
//! sizes `floor(n/3)`, `ceil(n/3)` and the remainder, placed in the three
//! slots of an upward triangle. A flattened cluster is described by three
//! numbers: its internal crossings `C`, and the crossings `T` (resp. `B`)
//! created when one external vertex joins all of it from the top (resp.
//! bottom) side. With slot `X` receiving its top-side edges from slot
//! `top(X)` and its bottom-side edges from `bot(X)`:
//!
//! ```text
//! C(n) = sum_X C(p_X) + sum_X [p_top(X) T(p_X) + p_bot(X) B(p_X)] + sum_{X<Y} i(p_X, p_Y)
//! T(n) = sum_X [T(p_X) + e(p_X, p_top(X), 1)]
//! B(n) = sum_X [B(p_X) + e(p_X, p_bot(X), 1)] + p_A p_B p_C
//! ```
//!
//! Of the distinct slot assignments of the three sizes, the one with the
//! smallest `C` is used, ties broken by smaller `T + B`, then by the first
//! assignment in lexicographic order.

/// Slot index: 0 = right, 1 = peak, 2 = left.
pub const SLOTS: usize = 3;

/// Slot whose cluster docks on the top side of slot `x`.
pub const TOP_NEIGHBOR: [usize; 3] = [1, 0, 1];
/// Slot whose cluster docks on the bottom side of slot `x`.
pub const BOTTOM_NEIGHBOR: [usize; 3] = [2, 2, 0];

/// Counts describing one recursively built cluster.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct ThirdsProfile {
    pub crossings: u128,
    pub top: u128,
    pub bottom: u128,
}

/// The profile and chosen slot sizes for every order up to some bound.
#[derive(Clone, Debug)]
pub struct ThirdsTable {
    profiles: Vec<ThirdsProfile>,
    sizes: Vec<Option<[usize; 3]>>,
}

pub fn parts(n: usize) -> [usize; 3] {
    let lo = n / 3;
    let hi = n.div_ceil(3);
    [lo, hi, n - lo - hi]
}

fn i2(p: u128, k: u128) -> u128 {
    (p * p.saturating_sub(1) / 2) * (k * k.saturating_sub(1) / 2)
}

fn e1(k: u128, p: u128) -> u128 {
    p * k * k.saturating_sub(1) / 2
}

fn distinct_permutations(p: [usize; 3]) -> Vec<[usize; 3]> {
    const ORDERS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut out: Vec<[usize; 3]> = ORDERS.iter().map(|o| [p[o[0]], p[o[1]], p[o[2]]]).collect();
    out.sort();
    out.dedup();
    out
}

impl ThirdsTable {
    pub fn up_to(max_n: usize) -> Self {
        let mut profiles = vec![ThirdsProfile::default(); max_n.max(2) + 1];
        let mut sizes = vec![None; max_n.max(2) + 1];
        for n in 3..=max_n {
            let mut best: Option<(ThirdsProfile, [usize; 3])> = None;
            for asg in distinct_permutations(parts(n)) {
                let prof = Self::combine(&profiles, asg);
                let better = match &best {
                    None => true,
                    Some((b, _)) => (prof.crossings, prof.top + prof.bottom) < (b.crossings, b.top + b.bottom),
                };
                if better {
                    best = Some((prof, asg));
                }
            }
            let (prof, asg) = best.expect("at least one assignment");
            profiles[n] = prof;
            sizes[n] = Some(asg);
        }
        Self { profiles, sizes }
    }

    fn combine(profiles: &[ThirdsProfile], asg: [usize; 3]) -> ThirdsProfile {
        let p = asg.map(|x| x as u128);
        let mut out = ThirdsProfile::default();
        for x in 0..SLOTS {
            let sub = profiles[asg[x]];
            let (t, b) = (p[TOP_NEIGHBOR[x]], p[BOTTOM_NEIGHBOR[x]]);
            out.crossings += sub.crossings + t * sub.top + b * sub.bottom;
            out.top += sub.top + e1(p[x], t);
            out.bottom += sub.bottom + e1(p[x], b);
        }
        out.bottom += p[0] * p[1] * p[2];
        out.crossings += i2(p[0], p[1]) + i2(p[1], p[2]) + i2(p[0], p[2]);
        out
    }

    pub fn profile(&self, n: usize) -> ThirdsProfile {
        self.profiles[n]
    }

    /// Cluster sizes for the right, peak and left slots, or `None` for `n <= 2`.
    pub fn slot_sizes(&self, n: usize) -> Option<[usize; 3]> {
        self.sizes[n]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders_match_known_optima() {
        let t = ThirdsTable::up_to(12);
        let got: Vec<u128> = (3..=12).map(|n| t.profile(n).crossings).collect();
        assert_eq!(got, vec![0, 0, 1, 3, 9, 19, 36, 63, 102, 156]);
    }

    #[test]
    fn powers_of_three_use_equal_parts() {
        let t = ThirdsTable::up_to(27);
        assert_eq!(t.slot_sizes(9), Some([3, 3, 3]));
        assert_eq!(t.profile(27).crossings, 6264);
        // f_top + f_bot = f at powers of three.
        let p = t.profile(9);
        assert_eq!((p.top, p.bottom), (27, 57));
    }
}
