//! The `rcn` command-line interface.
//!
//! Exit codes: 0 success, 1 usage, 2 validation or verification failure,
//! 3 I/O.

pub mod format;
mod render;
mod tables;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::constructions::{build, default_a, Construction, ConstructionError, ConstructionSpec};
use crate::counter::{count_crossings, BigCount, CountError, Method};
use crate::formulas::{self, StrategyId};
use format::FormatError;

pub use render::to_svg;
pub use tables::{render_table, TableName};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "rcn", version, about = "Exact drawings and crossing counts for complete graphs")]
pub struct Cli {
    /// Bare integers and tab-separated fields instead of formatted reports.
    #[arg(long, global = true)]
    pub porcelain: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a drawing, validate its count and write it to a file.
    Gen {
        #[arg(long, value_parser = parse_construction)]
        strategy: Construction,
        #[arg(long)]
        n: u64,
        /// Vertices per moved cluster that keep their side (slides, max-asym).
        #[arg(long)]
        a: Option<u64>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = default_jobs())]
        jobs: usize,
    },
    /// Count the crossings of a drawing file.
    Count {
        input: PathBuf,
        #[arg(long, default_value = "pairs")]
        method: Method,
        #[arg(long, default_value_t = default_jobs())]
        jobs: usize,
    },
    /// Build every in-domain n of a range and compare counts with formulas.
    Verify {
        #[arg(value_parser = parse_construction)]
        strategy: Construction,
        /// A single n or an inclusive range `lo..hi`.
        #[arg(value_parser = parse_range)]
        range: NRange,
        #[arg(long)]
        a: Option<u64>,
        #[arg(long, default_value_t = default_jobs())]
        jobs: usize,
    },
    /// Print a reproduction of one of the result tables.
    Table { name: TableName },
    /// Draw a drawing file as SVG.
    Render {
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 800)]
        width: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NRange {
    pub lo: u64,
    pub hi: u64,
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

/// Accepts construction names (`singer`, `convex`, `thirds`, `max-asym`,
/// `s1`..`s3`, `base-a`) and the matching formula names (`c3`, `cs1`, ...).
pub fn parse_construction(s: &str) -> Result<Construction, String> {
    let lower = s.to_ascii_lowercase();
    let by_name = match lower.as_str() {
        "singer" => Some(Construction::Singer),
        "convex" => Some(Construction::Convex),
        "thirds" | "general-thirds" | "general_thirds" => Some(Construction::GeneralThirds),
        "max-asym" | "max_asym" | "maxasym" => Some(Construction::MaxAsym),
        "s1" | "slide-s1" => Some(Construction::Slide(1)),
        "s2" | "slide-s2" => Some(Construction::Slide(2)),
        "s3" | "slide-s3" => Some(Construction::Slide(3)),
        _ => lower
            .strip_prefix("base-")
            .or_else(|| lower.strip_prefix("base"))
            .and_then(|a| a.parse().ok())
            .map(Construction::BaseA),
    };
    if let Some(c) = by_name {
        return Ok(c);
    }
    let id: StrategyId = s.parse().map_err(|e: formulas::FormulaError| e.to_string())?;
    Construction::for_strategy(id).ok_or_else(|| format!("{id} has no generator"))
}

fn parse_range(s: &str) -> Result<NRange, String> {
    let parse = |v: &str| v.trim().parse::<u64>().map_err(|_| format!("bad integer {v:?}"));
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (parse(lo)?, parse(hi.trim_start_matches('='))?),
        None => {
            let n = parse(s)?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok(NRange { lo, hi })
}

/// Error carrying its exit code and message.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Self { code, message: message.into() }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        let code = match e {
            FormatError::Io { .. } => EXIT_IO,
            FormatError::Parse { .. } => EXIT_VALIDATION,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        let code = match e {
            ConstructionError::InvalidSpec(_)
            | ConstructionError::NoTemplate(_)
            | ConstructionError::NonPositiveEpsilon(_)
            | ConstructionError::Formula(_)
            | ConstructionError::Count(CountError::ZeroJobs) => EXIT_USAGE,
            _ => EXIT_VALIDATION,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<CountError> for Failure {
    fn from(e: CountError) -> Self {
        let code = match e {
            CountError::ZeroJobs => EXIT_USAGE,
            CountError::GeneralPosition(_) => EXIT_VALIDATION,
        };
        Failure::new(code, e.to_string())
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure::new(EXIT_IO, e.to_string())
}

fn show(count: &BigCount, porcelain: bool) -> String {
    if porcelain { count.to_string() } else { count.grouped() }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "rcn: {}", f.message);
            f.code
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let porcelain = cli.porcelain;
    match &cli.command {
        Command::Gen { strategy, n, a, out: path, jobs } => {
            let mut spec = ConstructionSpec::new(*strategy, *n).with_jobs(*jobs);
            spec.a = *a;
            let r = build(&spec)?;
            format::write(path, &r.drawing)?;
            if porcelain {
                writeln!(out, "{}\t{}", r.achieved, r.expected).map_err(io_failure)?;
            } else {
                writeln!(
                    out,
                    "{}: {} vertices, {} crossings (expected {})",
                    r.drawing.label,
                    r.drawing.len(),
                    r.achieved.grouped(),
                    r.expected.grouped()
                )
                .map_err(io_failure)?;
                writeln!(out, "flattening height {} after {} attempt(s)", r.epsilon, r.attempts).map_err(io_failure)?;
                writeln!(out, "wrote {}", path.display()).map_err(io_failure)?;
            }
            Ok(EXIT_OK)
        }
        Command::Count { input, method, jobs } => {
            let d = format::read(input)?;
            let count = count_crossings(&d, *method, *jobs)?;
            let ratio = formulas::ratio(&count, d.len() as u64).ok().map(|q| q.to_decimal(6));
            let ratio_text = ratio.unwrap_or_else(|| "n/a".into());
            if porcelain {
                writeln!(out, "{count}\t{ratio_text}").map_err(io_failure)?;
            } else {
                writeln!(out, "{}: {} vertices", d.label, d.len()).map_err(io_failure)?;
                writeln!(out, "crossings: {}", count.grouped()).map_err(io_failure)?;
                writeln!(out, "ratio to C(n,4): {ratio_text}").map_err(io_failure)?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { strategy, range, a, jobs } => verify(*strategy, *range, *a, *jobs, porcelain, out),
        Command::Table { name } => {
            out.write_all(render_table(*name, porcelain).as_bytes()).map_err(io_failure)?;
            Ok(EXIT_OK)
        }
        Command::Render { input, out: path, width } => {
            if *width == 0 {
                return Err(Failure::new(EXIT_USAGE, "width must be positive"));
            }
            let d = format::read(input)?;
            std::fs::write(path, to_svg(&d, *width))
                .map_err(|e| Failure::new(EXIT_IO, format!("{}: {e}", path.display())))?;
            if !porcelain {
                writeln!(out, "wrote {} ({} vertices)", path.display(), d.len()).map_err(io_failure)?;
            }
            Ok(EXIT_OK)
        }
    }
}

/// Members of the range that the construction accepts.
fn domain(c: Construction, range: NRange) -> Vec<u64> {
    (range.lo..=range.hi)
        .filter(|&n| match c {
            Construction::Convex | Construction::GeneralThirds => n >= 3,
            Construction::Singer => formulas::power_of(n, 3).is_some(),
            Construction::BaseA(t) => formulas::power_of(n, t).is_some(),
            Construction::MaxAsym => n >= 3 && n % 3 == 0,
            Construction::Slide(_) => n >= 9 && formulas::power_of(n, 3).is_some(),
        })
        .collect()
}

fn verify(
    c: Construction,
    range: NRange,
    a: Option<u64>,
    jobs: usize,
    porcelain: bool,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let ns = domain(c, range);
    if ns.is_empty() {
        return Err(Failure::new(EXIT_USAGE, format!("no n in {}..{} is valid for {c}", range.lo, range.hi)));
    }
    let mut failures = 0;
    for n in ns {
        let a = match (c.takes_a(), a) {
            (true, Some(a)) => Some(a),
            (true, None) => Some(default_a(c.strategy(), n)?),
            (false, _) => None,
        };
        let mut spec = ConstructionSpec::new(c, n).with_jobs(jobs);
        spec.a = a;
        let a_text = a.map(|a| format!(" a={a}")).unwrap_or_default();
        let (status, achieved, expected) = match build(&spec) {
            Ok(r) => ("PASS", show(&r.achieved, porcelain), show(&r.expected, porcelain)),
            Err(ConstructionError::ScheduleExhausted { achieved, expected, .. }) => {
                ("FAIL", show(&achieved, porcelain), show(&expected, porcelain))
            }
            Err(e) => return Err(e.into()),
        };
        if status == "FAIL" {
            failures += 1;
        }
        if porcelain {
            writeln!(out, "{status}\t{n}\t{}\t{achieved}\t{expected}", a.map(|a| a.to_string()).unwrap_or_default())
        } else {
            writeln!(out, "{status} {c} n={n}{a_text}: counted {achieved}, formula {expected}")
        }
        .map_err(io_failure)?;
    }
    let verdict = if failures == 0 { "all passed".to_string() } else { format!("{failures} failed") };
    if !porcelain {
        writeln!(out, "{verdict}").map_err(io_failure)?;
    }
    Ok(if failures == 0 { EXIT_OK } else { EXIT_VALIDATION })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_names() {
        assert_eq!(parse_construction("singer").unwrap(), Construction::Singer);
        assert_eq!(parse_construction("C3").unwrap(), Construction::Singer);
        assert_eq!(parse_construction("s3").unwrap(), Construction::Slide(3));
        assert_eq!(parse_construction("cs2").unwrap(), Construction::Slide(2));
        assert_eq!(parse_construction("base-7").unwrap(), Construction::BaseA(7));
        assert_eq!(parse_construction("c4").unwrap(), Construction::BaseA(4));
        assert!(parse_construction("jensen").is_err());
        assert!(parse_construction("nope").is_err());
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..27").unwrap(), NRange { lo: 3, hi: 27 });
        assert_eq!(parse_range("3..=27").unwrap(), NRange { lo: 3, hi: 27 });
        assert_eq!(parse_range("81").unwrap(), NRange { lo: 81, hi: 81 });
        assert!(parse_range("9..3").is_err());
    }

    #[test]
    fn domain_filters() {
        assert_eq!(domain(Construction::Singer, NRange { lo: 3, hi: 27 }), vec![3, 9, 27]);
        assert_eq!(domain(Construction::Slide(1), NRange { lo: 1, hi: 100 }), vec![9, 27, 81]);
    }
}
