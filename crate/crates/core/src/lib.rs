//! Exact-arithmetic workbench for the rectilinear crossing number of complete graphs.
//!
//! - [`exactgeom`]: rationals, points and robust orientation predicates.
//! - [`counter`]: brute-force crossing counts by two independent methods.
//! - [`formulas`]: counting functions, recurrences, closed forms and limits.
//! - [`constructions`]: exact-coordinate generators for low-crossing drawings.
//! - [`cli`]: the `rcn` command-line interface and file formats.

pub mod cli;
pub mod constructions;
pub mod counter;
pub mod exactgeom;
pub mod formulas;
