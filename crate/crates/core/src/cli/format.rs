//! The `rcn-drawing v1` text format.
//!
//! ```text
//! rcn-drawing v1
//! n=3
//! 0/1 0/1
//! 1/2 -3/4
//! 5/1 7/3
//! ```
//!
//! Every coordinate is written as `numerator/denominator` in lowest terms
//! with a positive denominator, so a write-read round trip is exact.

use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::exactgeom::{Drawing, Point2, Rational};

pub const HEADER: &str = "rcn-drawing v1";

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

fn parse_error(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse { line, message: message.into() }
}

pub fn to_string(d: &Drawing) -> String {
    let mut out = format!("{HEADER}\nn={}\n", d.len());
    for p in &d.points {
        writeln!(out, "{}/{} {}/{}", p.x.numer(), p.x.denom(), p.y.numer(), p.y.denom()).unwrap();
    }
    out
}

fn parse_coordinate(token: &str, line: usize) -> Result<Rational, FormatError> {
    let (n, d) = token.split_once('/').ok_or_else(|| parse_error(line, format!("expected p/q, found {token:?}")))?;
    let numer: BigInt = n.parse().map_err(|_| parse_error(line, format!("bad numerator {n:?}")))?;
    let denom: BigInt = d.parse().map_err(|_| parse_error(line, format!("bad denominator {d:?}")))?;
    if denom <= BigInt::zero() {
        return Err(parse_error(line, format!("denominator must be positive in {token:?}")));
    }
    let value = Rational::new(numer.clone(), denom.clone()).expect("positive denominator");
    if value.numer() != &numer || value.denom() != &denom {
        return Err(parse_error(line, format!("{token:?} is not in lowest terms")));
    }
    Ok(value)
}

/// Parses a drawing; the label is taken from the caller.
pub fn parse(text: &str, label: &str) -> Result<Drawing, FormatError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end_matches('\r')));
    match lines.next() {
        Some((_, HEADER)) => {}
        Some((i, other)) => return Err(parse_error(i, format!("expected header {HEADER:?}, found {other:?}"))),
        None => return Err(parse_error(1, "empty input")),
    }
    let (i, count_line) = lines.next().ok_or_else(|| parse_error(2, "missing n= line"))?;
    let n: usize = count_line
        .strip_prefix("n=")
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| parse_error(i, format!("expected n=<integer>, found {count_line:?}")))?;
    let mut points = Vec::with_capacity(n);
    for (i, line) in lines {
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (Some(x), Some(y), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(parse_error(i, format!("expected two coordinates, found {line:?}")));
        };
        points.push(Point2::new(parse_coordinate(x, i)?, parse_coordinate(y, i)?));
    }
    if points.len() != n {
        return Err(parse_error(2, format!("header says n={n} but {} points follow", points.len())));
    }
    Ok(Drawing::new(points, label))
}

pub fn read(path: &Path) -> Result<Drawing, FormatError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| FormatError::Io { path: path.display().to_string(), source })?;
    let label = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    parse(&text, &label)
}

pub fn write(path: &Path, d: &Drawing) -> Result<(), FormatError> {
    std::fs::write(path, to_string(d)).map_err(|source| FormatError::Io { path: path.display().to_string(), source })
}
