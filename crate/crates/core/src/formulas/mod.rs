//! Exact counting functions, recurrences, closed forms and limits.

mod quartic;
mod recurrence;
mod strategy;
pub mod thirds;
mod toolbox;

use thiserror::Error;

use crate::counter::BigCount;
use crate::exactgeom::Rational;

pub use quartic::Quartic;
pub use recurrence::{
    c4_recurrence, c_nonrecursive, c_recurrence, derived_closed_form, f_bot, f_bot_closed, f_top, f_top_closed,
    power_of, top_level_share, BaseCrossings,
};
pub use strategy::{
    asymptotic_limit, closed_form, closed_form_at_optimum, closed_form_c4_derived, cm_terms, evaluate,
    internal_limit, jen, optimal_a, optimal_a_with, ratio, ARounding, StrategyId,
};
pub use thirds::{ThirdsProfile, ThirdsTable};
pub use toolbox::{binom, e_merge, e_merge_closed, e_offvertex, f, f_closed, i_cross};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("{n} is not a positive power of {base}")]
    NotPowerOf { n: u64, base: u64 },
    #[error("template order {0} is even; only K_4 has a dedicated recurrence")]
    EvenTemplate(u64),
    #[error("no known crossing number for K_{0}")]
    UnknownBase(u64),
    #[error("{0} has no closed form; use the recurrence or the counter")]
    NoClosedForm(StrategyId),
    #[error("{0} has no slide parameter")]
    NoSlideParameter(StrategyId),
    #[error("closed form evaluated to the non-integer {0}")]
    NonInteger(Rational),
    #[error("closed form evaluated to the negative value {0}")]
    Negative(Rational),
    #[error("the form depends on a, but no value of a was given")]
    MissingA,
    #[error("the form is not quadratic in a with a linear minimizer")]
    NotQuadraticInA,
    #[error("n = {n} is below the minimum {min}")]
    TooSmall { n: u64, min: u64 },
    #[error("slide amount a = {a} exceeds the cluster order {k}")]
    SlideOutOfRange { a: u64, k: u64 },
    #[error("unknown strategy {0:?}")]
    UnknownStrategy(String),
}

/// Count for the generalized-thirds construction.
pub fn c3g(n: u64) -> Result<BigCount, FormulaError> {
    if n < 3 {
        return Err(FormulaError::TooSmall { n, min: 3 });
    }
    let table = ThirdsTable::up_to(n as usize);
    Ok(BigCount(table.profile(n as usize).crossings.into()))
}
