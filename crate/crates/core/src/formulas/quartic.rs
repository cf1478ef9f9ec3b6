use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use super::FormulaError;
use crate::exactgeom::Rational;

/// Polynomial of total degree at most four in `n` and an optional second
/// variable `a`, with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Quartic {
    /// `(deg_n, deg_a) -> coefficient`; zero coefficients are never stored.
    terms: BTreeMap<(u32, u32), Rational>,
}

impl Quartic {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Univariate `c4 n^4 + c3 n^3 + c2 n^2 + c1 n + c0`.
    pub fn in_n(coeffs: [Rational; 5]) -> Self {
        let mut q = Self::zero();
        for (i, c) in coeffs.into_iter().enumerate() {
            q.add_term(4 - i as u32, 0, c);
        }
        q
    }

    /// Builds from `(deg_n, deg_a, coefficient)` triples; repeated monomials add up.
    pub fn from_terms(terms: impl IntoIterator<Item = (u32, u32, Rational)>) -> Self {
        let mut q = Self::zero();
        for (i, j, c) in terms {
            q.add_term(i, j, c);
        }
        q
    }

    fn add_term(&mut self, i: u32, j: u32, c: Rational) {
        assert!(i + j <= 4, "degree {} exceeds 4", i + j);
        let entry = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    /// Coefficient of `n^i a^j`.
    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn uses_a(&self) -> bool {
        self.terms.keys().any(|&(_, j)| j > 0)
    }

    pub fn degree_in_a(&self) -> u32 {
        self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    /// Coefficient of `n^4`.
    pub fn leading(&self) -> Rational {
        self.coeff(4, 0)
    }

    /// Univariate coefficients `[c4, c3, c2, c1, c0]`, or `None` if `a` occurs.
    pub fn univariate(&self) -> Option<[Rational; 5]> {
        if self.uses_a() {
            return None;
        }
        Some([4, 3, 2, 1, 0].map(|i| self.coeff(i, 0)))
    }

    pub fn eval(&self, n: &Rational, a: &Rational) -> Rational {
        self.terms.iter().map(|(&(i, j), c)| c * n.pow(i as i32) * a.pow(j as i32)).sum()
    }

    /// Evaluation of a univariate form; `a` must not occur.
    pub fn eval_n(&self, n: &Rational) -> Result<Rational, FormulaError> {
        if self.uses_a() {
            return Err(FormulaError::MissingA);
        }
        Ok(self.eval(n, &Rational::zero()))
    }

    /// Evaluation at integers where the result must be an integer.
    pub fn eval_integer(&self, n: i64, a: Option<i64>) -> Result<BigInt, FormulaError> {
        let n = Rational::integer(n);
        let value = match a {
            Some(a) => self.eval(&n, &Rational::integer(a)),
            None => self.eval_n(&n)?,
        };
        value.to_integer().ok_or(FormulaError::NonInteger(value))
    }

    /// Substitutes `a = alpha n + beta`, giving a univariate quartic in `n`.
    pub fn substitute_a(&self, alpha: &Rational, beta: &Rational) -> Quartic {
        let mut out = Quartic::zero();
        for (&(i, j), c) in &self.terms {
            // (alpha n + beta)^j expanded binomially.
            let mut binom = Rational::one();
            for t in 0..=j {
                let coeff = c * &binom * alpha.pow(t as i32) * beta.pow((j - t) as i32);
                out.add_term(i + t, 0, coeff);
                binom = binom * Rational::integer((j - t) as i64) / Rational::integer(t as i64 + 1);
            }
        }
        out
    }

    /// For a form quadratic in `a`, the minimizer `-B(n) / 2A(n)` written as
    /// `alpha n + beta`. Fails unless the division is exact and linear.
    pub fn linear_minimizer_in_a(&self) -> Result<(Rational, Rational), FormulaError> {
        if self.degree_in_a() != 2 {
            return Err(FormulaError::NotQuadraticInA);
        }
        let quad: Vec<Rational> = (0..=4).map(|i| self.coeff(i, 2) * Rational::integer(2)).collect();
        let lin: Vec<Rational> = (0..=4).map(|i| -self.coeff(i, 1)).collect();
        let (q, r) = poly_divmod(&lin, &quad);
        if r.iter().any(|c| !c.is_zero()) || q.len() > 2 {
            return Err(FormulaError::NotQuadraticInA);
        }
        let beta = q.first().cloned().unwrap_or_else(Rational::zero);
        let alpha = q.get(1).cloned().unwrap_or_else(Rational::zero);
        Ok((alpha, beta))
    }
}

/// Univariate polynomial division, coefficients in increasing degree.
fn poly_divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let trim = |v: &[Rational]| {
        let mut v = v.to_vec();
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        v
    };
    let mut rem = trim(num);
    let den = trim(den);
    assert!(!den.is_empty(), "division by the zero polynomial");
    if rem.len() < den.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - den.len() + 1];
    let lead = den.last().unwrap().clone();
    while rem.len() >= den.len() && !rem.is_empty() {
        let shift = rem.len() - den.len();
        let factor = rem.last().unwrap() / &lead;
        for (k, d) in den.iter().enumerate() {
            let sub = &factor * d;
            rem[shift + k] -= &sub;
        }
        quot[shift] = factor;
        rem = trim(&rem);
    }
    (quot, rem)
}

impl fmt::Display for Quartic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // Highest total degree first, then higher powers of n.
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|k| std::cmp::Reverse((k.0 + k.1, k.0)));
        for (idx, key) in keys.iter().enumerate() {
            let c = &self.terms[key];
            let (sign, mag) = if c.is_negative() { ("-", c.abs()) } else { ("+", c.clone()) };
            if idx == 0 {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mono = monomial(key.0, key.1);
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == Rational::one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{mag} {mono}")?;
            }
        }
        Ok(())
    }
}

fn monomial(i: u32, j: u32) -> String {
    let var = |v: &str, p: u32| match p {
        0 => String::new(),
        1 => v.to_string(),
        _ => format!("{v}^{p}"),
    };
    [var("n", i), var("a", j)].into_iter().filter(|s| !s.is_empty()).collect::<Vec<_>>().join(" ")
}

impl fmt::Debug for Quartic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
