//! Exact crossing counts for rectilinear drawings of complete graphs.
//!
//! Two independent methods are provided. The pair method tests every pair of
//! vertex-disjoint edges directly on the integer lattice. The quad method
//! counts 4-subsets in convex position from a precomputed orientation table.
//! For a drawing in general position the two agree, and the test suite
//! relies on that.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::exactgeom::{convex_by_orient, crosses_by_sign, Drawing, Lattice, OrientationTable, Violation};

/// Exact nonnegative integer count.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BigCount(pub BigUint);

impl BigCount {
    pub fn zero() -> Self {
        Self(BigUint::zero())
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    /// Decimal digits grouped by thousands, e.g. `1,663,740`.
    pub fn grouped(&self) -> String {
        group_thousands(&self.0.to_string())
    }
}

pub(crate) fn group_thousands(digits: &str) -> String {
    let (sign, digits) = match digits.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", digits),
    };
    let mut out = String::with_capacity(digits.len() + digits.len() / 3);
    for (i, ch) in digits.chars().enumerate() {
        if i > 0 && (digits.len() - i) % 3 == 0 {
            out.push(',');
        }
        out.push(ch);
    }
    format!("{sign}{out}")
}

impl std::ops::Add for BigCount {
    type Output = BigCount;
    fn add(self, rhs: BigCount) -> BigCount {
        BigCount(self.0 + rhs.0)
    }
}

impl std::ops::Add<&BigCount> for BigCount {
    type Output = BigCount;
    fn add(self, rhs: &BigCount) -> BigCount {
        BigCount(self.0 + &rhs.0)
    }
}

impl std::ops::Mul for BigCount {
    type Output = BigCount;
    fn mul(self, rhs: BigCount) -> BigCount {
        BigCount(self.0 * rhs.0)
    }
}

impl std::ops::Mul<u64> for BigCount {
    type Output = BigCount;
    fn mul(self, rhs: u64) -> BigCount {
        BigCount(self.0 * rhs)
    }
}

impl std::iter::Sum for BigCount {
    fn sum<I: Iterator<Item = BigCount>>(iter: I) -> Self {
        iter.fold(BigCount::zero(), |acc, x| acc + x)
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        Self(BigUint::from(v))
    }
}

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        Self(v)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl PartialEq<u64> for BigCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl PartialOrd<u64> for BigCount {
    fn partial_cmp(&self, other: &u64) -> Option<std::cmp::Ordering> {
        Some(self.0.cmp(&BigUint::from(*other)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Pairs,
    Quads,
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pairs" => Ok(Method::Pairs),
            "quads" => Ok(Method::Quads),
            other => Err(format!("unknown counting method {other:?} (expected pairs or quads)")),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Pairs => "pairs",
            Method::Quads => "quads",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("drawing is not in general position: {0}")]
    GeneralPosition(#[from] Violation),
    #[error("jobs must be at least 1")]
    ZeroJobs,
}

pub fn count_crossings_pairs(d: &Drawing) -> Result<BigCount, CountError> {
    count_crossings(d, Method::Pairs, 1)
}

pub fn count_crossings_quads(d: &Drawing) -> Result<BigCount, CountError> {
    count_crossings(d, Method::Quads, 1)
}

/// Counts proper crossings with `jobs` worker threads.
///
/// Work is split into contiguous index ranges of roughly equal cost; each
/// worker returns a partial sum, and the sums are added in range order.
pub fn count_crossings(d: &Drawing, method: Method, jobs: usize) -> Result<BigCount, CountError> {
    if jobs == 0 {
        return Err(CountError::ZeroJobs);
    }
    let lattice = Lattice::from_points(&d.points);
    let total = match method {
        Method::Pairs => {
            lattice.check_general_position()?;
            pairs_parallel(&lattice, jobs)
        }
        Method::Quads => {
            let table = OrientationTable::build(&lattice)?;
            quads_parallel(&table, jobs)
        }
    };
    Ok(BigCount::from(total))
}

/// Splits `0..weights.len()` into at most `parts` contiguous ranges of
/// similar total weight.
fn balanced_ranges(weights: &[u64], parts: usize) -> Vec<std::ops::Range<usize>> {
    let total: u128 = weights.iter().map(|&w| w as u128).sum();
    let parts = parts.max(1).min(weights.len().max(1));
    let mut ranges = Vec::with_capacity(parts);
    let mut start = 0;
    let mut acc: u128 = 0;
    for (idx, &w) in weights.iter().enumerate() {
        acc += w as u128;
        let done = ranges.len() as u128 + 1;
        if ranges.len() + 1 < parts && acc * parts as u128 >= total * done {
            ranges.push(start..idx + 1);
            start = idx + 1;
        }
    }
    ranges.push(start..weights.len());
    ranges
}

fn run_ranges<F>(weights: &[u64], jobs: usize, work: F) -> u64
where
    F: Fn(std::ops::Range<usize>) -> u64 + Sync,
{
    let ranges = balanced_ranges(weights, jobs);
    if ranges.len() == 1 {
        return work(ranges.into_iter().next().unwrap());
    }
    std::thread::scope(|s| {
        let handles: Vec<_> = ranges.into_iter().map(|r| s.spawn(|| work(r))).collect();
        handles.into_iter().map(|h| h.join().expect("counting worker panicked")).sum()
    })
}

fn pairs_parallel(lattice: &Lattice, jobs: usize) -> u64 {
    let n = lattice.len();
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    let m = edges.len();
    let weights: Vec<u64> = (0..m).map(|e| (m - e) as u64).collect();
    run_ranges(&weights, jobs, |range| {
        let mut count = 0u64;
        for e1 in range {
            let (a, b) = edges[e1];
            for &(c, d) in &edges[e1 + 1..] {
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                let o1 = lattice.orient(a, b, c);
                let o2 = lattice.orient(a, b, d);
                if o1 * o2 > 0 {
                    continue;
                }
                let o3 = lattice.orient(c, d, a);
                let o4 = lattice.orient(c, d, b);
                if crosses_by_sign(o1, o2, o3, o4) {
                    count += 1;
                }
            }
        }
        count
    })
}

fn quads_parallel(table: &OrientationTable, jobs: usize) -> u64 {
    let n = table.n();
    let weights: Vec<u64> = (0..n)
        .map(|i| {
            let r = (n - 1 - i) as u64;
            r * r.saturating_sub(1) * r.saturating_sub(2) / 6
        })
        .collect();
    run_ranges(&weights, jobs, |range| {
        let mut count = 0u64;
        for i in range {
            for j in i + 1..n {
                for k in j + 1..n {
                    for l in k + 1..n {
                        let idx = [i, j, k, l];
                        if convex_by_orient(|x, y, z| table.get(idx[x], idx[y], idx[z])) {
                            count += 1;
                        }
                    }
                }
            }
        }
        count
    })
}
