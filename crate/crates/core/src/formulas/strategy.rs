use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;

use super::recurrence::{choose4, derived_closed_form, derived_closed_form_c4, to_rational};
use super::toolbox::{e_merge, f, i_cross};
use super::{FormulaError, Quartic};
use crate::counter::BigCount;
use crate::exactgeom::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StrategyId {
    C3,
    C4,
    C5,
    C7,
    C9,
    /// Recursive construction on an odd template `K_a` with known crossing number.
    Ca(u64),
    C3g,
    Cm,
    Cs1,
    Cs2,
    Cs3,
    /// `Cs3` with `a` replaced by its real minimizer.
    Cs3opt,
    Jensen,
    Convex,
}

impl StrategyId {
    /// Canonicalizes `Ca(3)` to `C3` and so on.
    pub fn normalized(self) -> Self {
        match self {
            StrategyId::Ca(3) => StrategyId::C3,
            StrategyId::Ca(5) => StrategyId::C5,
            StrategyId::Ca(7) => StrategyId::C7,
            StrategyId::Ca(9) => StrategyId::C9,
            other => other,
        }
    }

    pub fn template(self) -> Option<u64> {
        match self.normalized() {
            StrategyId::C3 => Some(3),
            StrategyId::C4 => Some(4),
            StrategyId::C5 => Some(5),
            StrategyId::C7 => Some(7),
            StrategyId::C9 => Some(9),
            StrategyId::Ca(a) => Some(a),
            _ => None,
        }
    }

    pub fn takes_a(self) -> bool {
        matches!(self, StrategyId::Cm | StrategyId::Cs1 | StrategyId::Cs2 | StrategyId::Cs3)
    }

    /// Number of translated top-level clusters for the slide strategies.
    pub fn slide_variant(self) -> Option<u8> {
        match self {
            StrategyId::Cs1 => Some(1),
            StrategyId::Cs2 => Some(2),
            StrategyId::Cs3 => Some(3),
            _ => None,
        }
    }

    pub fn default_rounding(self) -> ARounding {
        match self {
            StrategyId::Cm => ARounding::Nearest,
            _ => ARounding::Ceiling,
        }
    }
}

impl fmt::Display for StrategyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StrategyId::C3 => f.write_str("C3"),
            StrategyId::C4 => f.write_str("C4"),
            StrategyId::C5 => f.write_str("C5"),
            StrategyId::C7 => f.write_str("C7"),
            StrategyId::C9 => f.write_str("C9"),
            StrategyId::Ca(a) => write!(f, "Ca({a})"),
            StrategyId::C3g => f.write_str("C3g"),
            StrategyId::Cm => f.write_str("Cm"),
            StrategyId::Cs1 => f.write_str("Cs1"),
            StrategyId::Cs2 => f.write_str("Cs2"),
            StrategyId::Cs3 => f.write_str("Cs3"),
            StrategyId::Cs3opt => f.write_str("Cs3opt"),
            StrategyId::Jensen => f.write_str("Jensen"),
            StrategyId::Convex => f.write_str("Convex"),
        }
    }
}

impl FromStr for StrategyId {
    type Err = FormulaError;

    /// Case-insensitive; `ca11` or `ca(11)` select a general odd template.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        let id = match lower.as_str() {
            "c3" => StrategyId::C3,
            "c4" => StrategyId::C4,
            "c5" => StrategyId::C5,
            "c7" => StrategyId::C7,
            "c9" => StrategyId::C9,
            "c3g" => StrategyId::C3g,
            "cm" => StrategyId::Cm,
            "cs1" => StrategyId::Cs1,
            "cs2" => StrategyId::Cs2,
            "cs3" => StrategyId::Cs3,
            "cs3opt" => StrategyId::Cs3opt,
            "jensen" | "jen" => StrategyId::Jensen,
            "convex" => StrategyId::Convex,
            other => {
                let digits = other
                    .strip_prefix("ca")
                    .map(|rest| rest.trim_start_matches('(').trim_end_matches(')'))
                    .ok_or_else(|| FormulaError::UnknownStrategy(s.to_string()))?;
                let a: u64 = digits.parse().map_err(|_| FormulaError::UnknownStrategy(s.to_string()))?;
                if a.is_multiple_of(2) {
                    return Err(FormulaError::EvenTemplate(a));
                }
                StrategyId::Ca(a).normalized()
            }
        };
        Ok(id)
    }
}

/// Integer rounding of the real minimizer `a_0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ARounding {
    Ceiling,
    /// Nearest integer, ties rounded up.
    Nearest,
}

fn q(p: i64, d: i64) -> Rational {
    Rational::frac(p, d)
}

fn z() -> Rational {
    Rational::zero()
}

/// The published closed form, or the one solved from the recurrence for
/// templates whose form is not printed. Slide and asymmetric strategies
/// are bivariate in `(n, a)`.
pub fn closed_form(s: StrategyId) -> Result<Quartic, FormulaError> {
    let s = s.normalized();
    let form = match s {
        StrategyId::C3 => Quartic::in_n([q(5, 312), q(-1, 8), q(7, 24), q(-19, 104), z()]),
        StrategyId::C4 => Quartic::in_n([q(1, 56), q(-2, 15), q(7, 24), q(-37, 210), z()]),
        StrategyId::C5 => Quartic::in_n([q(61, 3720), q(-1, 8), q(7, 24), q(-227, 1240), z()]),
        StrategyId::C7 | StrategyId::C9 | StrategyId::Ca(_) => derived_closed_form(s.template().unwrap())?,
        StrategyId::Cm => Quartic::from_terms([
            (4, 0, q(19, 648)),
            (3, 1, q(-5, 54)),
            (2, 2, q(1, 6)),
            (3, 0, q(-5, 36)),
            (2, 1, q(1, 6)),
            (1, 2, q(-1, 2)),
            (2, 0, q(17, 72)),
            (1, 1, q(1, 3)),
            (1, 0, q(-1, 4)),
        ]),
        StrategyId::Cs1 => Quartic::from_terms([
            (4, 0, q(137, 6318)),
            (3, 1, q(-23, 648)),
            (2, 2, q(1, 18)),
            (3, 0, q(-31, 216)),
            (2, 1, q(1, 9)),
            (1, 2, q(-1, 6)),
            (2, 0, q(8, 27)),
            (1, 1, q(-1, 72)),
            (1, 0, q(-19, 104)),
        ]),
        StrategyId::Cs2 => Quartic::from_terms([
            (4, 0, q(691, 25272)),
            (3, 1, q(-23, 324)),
            (2, 2, q(1, 9)),
            (3, 0, q(-35, 216)),
            (2, 1, q(2, 9)),
            (1, 2, q(-1, 3)),
            (2, 0, q(65, 216)),
            (1, 1, q(-1, 36)),
            (1, 0, q(-19, 104)),
        ]),
        StrategyId::Cs3 => Quartic::from_terms([
            (4, 0, q(139, 4212)),
            (3, 1, q(-23, 216)),
            (2, 2, q(1, 6)),
            (3, 0, q(-13, 72)),
            (2, 1, q(1, 3)),
            (1, 2, q(-1, 2)),
            (2, 0, q(11, 36)),
            (1, 1, q(-1, 24)),
            (1, 0, q(-19, 104)),
        ]),
        StrategyId::Cs3opt => Quartic::in_n([q(6467, 404352), q(-1297, 10368), q(1009, 3456), q(-2723, 14976), z()]),
        StrategyId::Convex => Quartic::in_n([q(1, 24), q(-1, 4), q(11, 24), q(-1, 4), z()]),
        StrategyId::C3g | StrategyId::Jensen => return Err(FormulaError::NoClosedForm(s)),
    };
    Ok(form)
}

/// The `K_4` closed form solved from its recurrence (cross-check for the printed one).
pub fn closed_form_c4_derived() -> Quartic {
    derived_closed_form_c4()
}

/// Closed form with `a` replaced by its real minimizer; univariate in `n`.
pub fn closed_form_at_optimum(s: StrategyId) -> Result<Quartic, FormulaError> {
    let form = closed_form(s)?;
    if !s.takes_a() {
        return Ok(form);
    }
    let (alpha, beta) = form.linear_minimizer_in_a()?;
    Ok(form.substitute_a(&alpha, &beta))
}

/// `lim count / C(n,4)`, that is 24 times the `n^4` coefficient, taken at
/// the real minimizer for strategies with a slide amount.
pub fn asymptotic_limit(s: StrategyId) -> Result<Rational, FormulaError> {
    Ok(closed_form_at_optimum(s)?.leading() * Rational::integer(24))
}

/// Limit share of crossings inside the three top-level clusters.
///
/// Singer-type strategies keep recursive clusters; the asymmetric one uses
/// convex clusters.
pub fn internal_limit(s: StrategyId) -> Result<Rational, FormulaError> {
    let per_cluster = match s {
        StrategyId::C3 | StrategyId::Cs1 | StrategyId::Cs2 | StrategyId::Cs3 | StrategyId::Cs3opt => {
            closed_form(StrategyId::C3)?.leading()
        }
        StrategyId::Cm => closed_form(StrategyId::Convex)?.leading(),
        other => return Err(FormulaError::NoClosedForm(other)),
    };
    // Three clusters of n/3 vertices each.
    Ok(per_cluster * Rational::integer(3) / Rational::integer(81) * Rational::integer(24))
}

/// Real minimizer `a_0(n)` and its integer rounding.
pub fn optimal_a(s: StrategyId, n: u64) -> Result<(Rational, BigInt), FormulaError> {
    optimal_a_with(s, n, s.default_rounding())
}

pub fn optimal_a_with(s: StrategyId, n: u64, rounding: ARounding) -> Result<(Rational, BigInt), FormulaError> {
    if !s.takes_a() {
        return Err(FormulaError::NoSlideParameter(s));
    }
    let (alpha, beta) = closed_form(s)?.linear_minimizer_in_a()?;
    let real = alpha * Rational::integer(n as i64) + beta;
    let int = match rounding {
        ARounding::Ceiling => real.ceil(),
        ARounding::Nearest => real.round_half_up(),
    };
    Ok((real, int))
}

/// Exact value of a strategy's closed form at integer arguments.
pub fn evaluate(s: StrategyId, n: u64, a: Option<u64>) -> Result<BigCount, FormulaError> {
    let form = closed_form(s)?;
    let value = match (s.takes_a(), a) {
        (true, Some(a)) => form.eval_integer(n as i64, Some(a as i64))?,
        (true, None) => return Err(FormulaError::MissingA),
        (false, _) => form.eval_integer(n as i64, None)?,
    };
    value.to_biguint().map(BigCount).ok_or(FormulaError::Negative(Rational::integer(value)))
}

/// `count / C(n, 4)`.
pub fn ratio(count: &BigCount, n: u64) -> Result<Rational, FormulaError> {
    if n < 4 {
        return Err(FormulaError::TooSmall { n, min: 4 });
    }
    Ok(to_rational(count) / choose4(n))
}

/// Crossing count of Jensen's construction:
/// `floor((7n^4 - 56n^3 + 128n^2 + 48n floor((n-7)/3) + 108) / 432)`.
pub fn jen(n: u64) -> BigCount {
    let n = BigInt::from(n);
    let inner = (&n - BigInt::from(7)).div_floor(&BigInt::from(3));
    let num = BigInt::from(7) * n.pow(4) - BigInt::from(56) * n.pow(3) + BigInt::from(128) * n.pow(2)
        + BigInt::from(48) * &n * inner
        + BigInt::from(108);
    let value = num.div_floor(&BigInt::from(432));
    BigCount(value.to_biguint().unwrap_or_default())
}

/// Term-by-term count of the maximally asymmetric construction with split
/// `a + b = k = n/3`.
pub fn cm_terms(n: u64, a: u64) -> Result<BigCount, FormulaError> {
    if !n.is_multiple_of(3) {
        return Err(FormulaError::NotPowerOf { n, base: 3 });
    }
    let k = n / 3;
    if a > k {
        return Err(FormulaError::SlideOutOfRange { a, k });
    }
    let b = k - a;
    let inner = super::toolbox::binom(k, 4)
        + f(k) * a
        + i_cross(a, a)
        + i_cross(b, b)
        + i_cross(a, b) * 2
        + e_merge(a, b, b)
        + e_merge(a, a, b) * 2
        + e_merge(b, b, b)
        + e_merge(b, a, b) * 2
        + BigCount::from(a * b * b * b)
        + BigCount::from(a * a * b * b);
    Ok(inner * 3)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_names() {
        assert_eq!("cs3".parse::<StrategyId>().unwrap(), StrategyId::Cs3);
        assert_eq!("Ca(7)".parse::<StrategyId>().unwrap(), StrategyId::C7);
        assert_eq!("ca11".parse::<StrategyId>().unwrap(), StrategyId::Ca(11));
        assert!("ca4".parse::<StrategyId>().is_err());
        assert!("bogus".parse::<StrategyId>().is_err());
    }

    #[test]
    fn jen_small_values() {
        assert_eq!(jen(7), 9u64);
        assert_eq!(jen(81), 630_786u64);
        // floor((n-7)/3) is negative below 7.
        assert_eq!(jen(4), 0u64);
    }

    #[test]
    fn no_closed_form() {
        assert_eq!(closed_form(StrategyId::C3g), Err(FormulaError::NoClosedForm(StrategyId::C3g)));
        assert!(asymptotic_limit(StrategyId::Jensen).is_err());
    }

    #[test]
    fn optimal_a_examples() {
        assert_eq!(optimal_a(StrategyId::Cs3, 81).unwrap(), (Rational::frac(155, 6), BigInt::from(26)));
        assert_eq!(optimal_a(StrategyId::Cm, 18).unwrap(), (Rational::frac(16, 3), BigInt::from(5)));
        assert_eq!(optimal_a(StrategyId::Cs1, 81).unwrap().1, BigInt::from(26));
        assert!(optimal_a(StrategyId::C3, 81).is_err());
    }

    #[test]
    fn ratio_examples() {
        assert_eq!(ratio(&BigCount::from(1_663_740), 81).unwrap(), Rational::one());
        assert_eq!(ratio(&BigCount::from(36), 9).unwrap(), Rational::frac(2, 7));
        assert_eq!(ratio(&BigCount::from(623_916), 81).unwrap().to_decimal(6), "0.375008");
        assert!(ratio(&BigCount::from(0), 3).is_err());
    }
}
