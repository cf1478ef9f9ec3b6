//! Exact-coordinate generators for low-crossing drawings.
//!
//! Every generator is driven by a flattening height. [`build`] produces a
//! drawing, restores general position if a symmetric placement created a
//! collinear triple, counts its crossings and compares against the formula.
//! On a mismatch the height shrinks and the drawing is rebuilt.

mod flatten;
mod generators;
pub mod layout;

use std::fmt;

use thiserror::Error;

use crate::counter::{count_crossings, BigCount, CountError, Method};
use crate::exactgeom::{Drawing, Lattice, Point2, Rational, Violation};
use crate::formulas::{self, binom, c3g, c4_recurrence, c_recurrence, power_of, FormulaError, StrategyId};

pub use flatten::{flat_cluster, flatten, normalize, FlattenParams};
pub use generators::{cap, template};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("flattening height must be positive, got {0}")]
    NonPositiveEpsilon(Rational),
    #[error("invalid construction: {0}")]
    InvalidSpec(String),
    #[error("no bundled template for K_{0}")]
    NoTemplate(u64),
    #[error("template K_{a} is corrupt: {reason}")]
    BadTemplate { a: u64, reason: String },
    #[error("{label}: counted {achieved} crossings, expected {expected}")]
    ValidationFailed { label: String, achieved: BigCount, expected: BigCount },
    #[error("{label}: no height in the schedule reached {expected} crossings (last attempt counted {achieved})")]
    ScheduleExhausted { label: String, achieved: BigCount, expected: BigCount },
    #[error("{0}: could not restore general position")]
    Degenerate(String),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Count(#[from] CountError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    Convex,
    Singer,
    GeneralThirds,
    BaseA(u64),
    MaxAsym,
    /// Number of translated top-level clusters, 1 to 3.
    Slide(u8),
}

impl Construction {
    /// Formula strategy whose value the drawing must reach.
    pub fn strategy(self) -> StrategyId {
        match self {
            Construction::Convex => StrategyId::Convex,
            Construction::Singer => StrategyId::C3,
            Construction::GeneralThirds => StrategyId::C3g,
            Construction::BaseA(4) => StrategyId::C4,
            Construction::BaseA(a) => StrategyId::Ca(a).normalized(),
            Construction::MaxAsym => StrategyId::Cm,
            Construction::Slide(1) => StrategyId::Cs1,
            Construction::Slide(2) => StrategyId::Cs2,
            Construction::Slide(_) => StrategyId::Cs3,
        }
    }

    /// Inverse of [`Construction::strategy`] for strategies with a generator.
    pub fn for_strategy(s: StrategyId) -> Option<Self> {
        Some(match s.normalized() {
            StrategyId::Convex => Construction::Convex,
            StrategyId::C3 => Construction::Singer,
            StrategyId::C3g => Construction::GeneralThirds,
            StrategyId::C4 => Construction::BaseA(4),
            StrategyId::C5 => Construction::BaseA(5),
            StrategyId::C7 => Construction::BaseA(7),
            StrategyId::C9 => Construction::BaseA(9),
            StrategyId::Cm => Construction::MaxAsym,
            StrategyId::Cs1 => Construction::Slide(1),
            StrategyId::Cs2 => Construction::Slide(2),
            StrategyId::Cs3 => Construction::Slide(3),
            _ => return None,
        })
    }

    pub fn takes_a(self) -> bool {
        matches!(self, Construction::MaxAsym | Construction::Slide(_))
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Construction::Convex => write!(f, "convex"),
            Construction::Singer => write!(f, "singer"),
            Construction::GeneralThirds => write!(f, "general-thirds"),
            Construction::BaseA(a) => write!(f, "base-{a}"),
            Construction::MaxAsym => write!(f, "max-asym"),
            Construction::Slide(v) => write!(f, "slide-s{v}"),
        }
    }
}

/// Flattening heights tried by [`build`]: `start`, `start * shrink`, ...
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonSchedule {
    pub start: Rational,
    pub shrink: Rational,
    pub attempts: u32,
}

impl Default for EpsilonSchedule {
    fn default() -> Self {
        Self { start: Rational::frac(1, 64), shrink: Rational::frac(1, 4), attempts: 6 }
    }
}

impl EpsilonSchedule {
    fn heights(&self) -> impl Iterator<Item = Rational> + '_ {
        (0..self.attempts).scan(self.start.clone(), |eps, _| {
            let current = eps.clone();
            *eps = &*eps * &self.shrink;
            Some(current)
        })
    }

    fn validate(&self) -> Result<(), ConstructionError> {
        if !self.start.is_positive() {
            return Err(ConstructionError::NonPositiveEpsilon(self.start.clone()));
        }
        if !self.shrink.is_positive() || self.shrink >= Rational::one() {
            return Err(ConstructionError::InvalidSpec(format!("shrink factor {} is not in (0, 1)", self.shrink)));
        }
        if self.attempts == 0 {
            return Err(ConstructionError::InvalidSpec("empty epsilon schedule".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionSpec {
    pub construction: Construction,
    pub n: u64,
    /// Vertices per moved cluster that keep their docking side; defaults to
    /// the rounded formula minimizer.
    pub a: Option<u64>,
    pub schedule: EpsilonSchedule,
    /// Worker threads for the validation count.
    pub jobs: usize,
}

impl ConstructionSpec {
    pub fn new(construction: Construction, n: u64) -> Self {
        Self { construction, n, a: None, schedule: EpsilonSchedule::default(), jobs: 1 }
    }

    pub fn with_a(mut self, a: u64) -> Self {
        self.a = Some(a);
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    /// Validates `n` and `a` for the construction and resolves the default `a`.
    fn resolve(&self) -> Result<Resolved, ConstructionError> {
        self.schedule.validate()?;
        let n = self.n;
        let invalid = |msg: String| Err(ConstructionError::InvalidSpec(msg));
        let mut a = None;
        match self.construction {
            Construction::Convex | Construction::GeneralThirds if n < 3 => {
                return invalid(format!("{} needs n >= 3, got {n}", self.construction))
            }
            Construction::Convex | Construction::GeneralThirds => {}
            Construction::Singer => {
                power_of(n, 3).ok_or_else(|| ConstructionError::InvalidSpec(format!("{n} is not a power of 3")))?;
            }
            Construction::BaseA(t) => {
                if ![4, 5, 7, 9].contains(&t) {
                    return Err(ConstructionError::NoTemplate(t));
                }
                power_of(n, t)
                    .ok_or_else(|| ConstructionError::InvalidSpec(format!("{n} is not a power of {t}")))?;
            }
            Construction::MaxAsym | Construction::Slide(_) => {
                if let Construction::Slide(v) = self.construction {
                    if !(1..=3).contains(&v) {
                        return invalid(format!("slide variant must be 1, 2 or 3, got {v}"));
                    }
                    if power_of(n, 3).is_none() || n < 9 {
                        return invalid(format!("slides need n = 3^j with j >= 2, got {n}"));
                    }
                } else if n < 3 || !n.is_multiple_of(3) {
                    return invalid(format!("max-asym needs n a positive multiple of 3, got {n}"));
                }
                let k = n / 3;
                let value = match self.a {
                    Some(a) => a,
                    None => default_a(self.construction.strategy(), n)?,
                };
                if value > k {
                    return Err(FormulaError::SlideOutOfRange { a: value, k }.into());
                }
                a = Some(value);
            }
        }
        Ok(Resolved { construction: self.construction, n, a })
    }
}

struct Resolved {
    construction: Construction,
    n: u64,
    a: Option<u64>,
}

impl Resolved {
    fn label(&self) -> String {
        match self.a {
            Some(a) => format!("{}({}, a={a})", self.construction, self.n),
            None => format!("{}({})", self.construction, self.n),
        }
    }

    fn expected(&self) -> Result<BigCount, ConstructionError> {
        let n = self.n;
        Ok(match self.construction {
            Construction::Convex => binom(n, 4),
            Construction::Singer => c_recurrence(3, n)?,
            Construction::GeneralThirds => c3g(n)?,
            Construction::BaseA(4) => c4_recurrence(n)?,
            Construction::BaseA(t) => c_recurrence(t, n)?,
            c => formulas::evaluate(c.strategy(), n, self.a)?,
        })
    }

    fn generate(&self, epsilon: &Rational) -> Result<Drawing, ConstructionError> {
        let n = self.n as usize;
        let mut d = match self.construction {
            Construction::Convex => generators::convex_points(n),
            Construction::Singer | Construction::GeneralThirds => {
                let table = formulas::ThirdsTable::up_to(n);
                generators::thirds(n, &table, epsilon)
            }
            Construction::BaseA(t) => {
                let j = power_of(self.n, t).expect("validated");
                generators::base_a_raw(t, j, epsilon)?
            }
            Construction::MaxAsym => generators::max_asym_raw(n, self.a.expect("validated") as usize, epsilon),
            Construction::Slide(v) => generators::slide_raw(v, n, self.a.expect("validated") as usize, epsilon),
        };
        d.label = self.label();
        Ok(d)
    }
}

/// Integer slide amount from the formula minimizer, clamped to `[0, n/3]`.
pub fn default_a(s: StrategyId, n: u64) -> Result<u64, ConstructionError> {
    let (_, rounded) = formulas::optimal_a(s, n)?;
    let k = n / 3;
    Ok(u64::try_from(rounded).unwrap_or(0).min(k))
}

#[derive(Clone, Debug)]
pub struct BuildResult {
    pub drawing: Drawing,
    pub achieved: BigCount,
    pub expected: BigCount,
    /// Flattening height of the successful attempt.
    pub epsilon: Rational,
    pub attempts: u32,
    pub a: Option<u64>,
}

/// Generates, validates and, if needed, regenerates with flatter clusters.
pub fn build(spec: &ConstructionSpec) -> Result<BuildResult, ConstructionError> {
    if spec.jobs == 0 {
        return Err(CountError::ZeroJobs.into());
    }
    let resolved = spec.resolve()?;
    let expected = resolved.expected()?;
    let mut last = None;
    for (attempt, epsilon) in spec.schedule.heights().enumerate() {
        let drawing = restore_general_position(resolved.generate(&epsilon)?)?;
        let achieved = count_crossings(&drawing, Method::Quads, spec.jobs)?;
        if achieved == expected {
            return Ok(BuildResult {
                drawing,
                achieved,
                expected,
                epsilon,
                attempts: attempt as u32 + 1,
                a: resolved.a,
            });
        }
        last = Some(achieved);
    }
    Err(ConstructionError::ScheduleExhausted {
        label: resolved.label(),
        achieved: last.expect("at least one attempt"),
        expected,
    })
}

/// Like [`build`] but turns an exhausted schedule into a plain mismatch.
fn build_strict(spec: ConstructionSpec) -> Result<Drawing, ConstructionError> {
    match build(&spec) {
        Ok(r) => Ok(r.drawing),
        Err(ConstructionError::ScheduleExhausted { label, achieved, expected }) => {
            Err(ConstructionError::ValidationFailed { label, achieved, expected })
        }
        Err(e) => Err(e),
    }
}

/// Shifts one vertex of each collinear triple (or coincident pair) by a
/// dyadic amount far below the drawing's resolution until none remain.
/// The validation count afterwards confirms no crossing changed.
fn restore_general_position(mut d: Drawing) -> Result<Drawing, ConstructionError> {
    const ROUNDS: usize = 256;
    for _ in 0..ROUNDS {
        let lattice = Lattice::from_points(&d.points);
        let (idx, horizontal) = match lattice.check_general_position() {
            Ok(()) => return Ok(d),
            Err(Violation::Coincident(_, j)) => (j, true),
            Err(Violation::Collinear(_, _, k)) => (k, false),
        };
        // The lattice spans at most 2^bits per unit denominator; stepping
        // 2^-(2 bits + 16) of the smallest unit keeps every nonzero
        // orientation's sign.
        let bits = 2 * lattice.max_bits() as u32 + 16 + max_denominator_bits(&d);
        let delta = flatten::dyadic(bits);
        let p = &d.points[idx];
        d.points[idx] = if horizontal {
            Point2::new(&p.x + &delta, p.y.clone())
        } else {
            Point2::new(p.x.clone(), &p.y + &delta)
        };
    }
    Err(ConstructionError::Degenerate(d.label.clone()))
}

fn max_denominator_bits(d: &Drawing) -> u32 {
    d.points.iter().flat_map(|p| [p.x.denom().bits(), p.y.denom().bits()]).max().unwrap_or(0) as u32
}

pub fn convex(n: u64) -> Result<Drawing, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::InvalidSpec(format!("convex needs n >= 3, got {n}")));
    }
    Ok(generators::convex_points(n as usize))
}

/// Recursive three-cluster drawing of `K_{3^j}`.
pub fn singer(j: u32) -> Result<Drawing, ConstructionError> {
    if j == 0 {
        return Err(ConstructionError::InvalidSpec("singer needs j >= 1".into()));
    }
    build_strict(ConstructionSpec::new(Construction::Singer, 3u64.pow(j)))
}

pub fn general_thirds(n: u64) -> Result<Drawing, ConstructionError> {
    build_strict(ConstructionSpec::new(Construction::GeneralThirds, n))
}

pub fn base_a(a: u64, j: u32) -> Result<Drawing, ConstructionError> {
    if j == 0 {
        return Err(ConstructionError::InvalidSpec("base_a needs j >= 1".into()));
    }
    build_strict(ConstructionSpec::new(Construction::BaseA(a), a.pow(j)))
}

pub fn max_asym(n: u64, a: u64) -> Result<Drawing, ConstructionError> {
    build_strict(ConstructionSpec::new(Construction::MaxAsym, n).with_a(a))
}

pub fn slide(variant: u8, n: u64, a: u64) -> Result<Drawing, ConstructionError> {
    build_strict(ConstructionSpec::new(Construction::Slide(variant), n).with_a(a))
}
