//! Finitely supported sieve weights `g(1..=Q)` and their Ramanujan
//! coefficients.
//!
//! A weight vector models the coefficients of `f = g * 1`. The essential
//! bound `B >= max |g(q)|` travels with the data so analytic envelopes can
//! be evaluated without re-deriving it; the Ramanujan coefficient of `f`
//! at frequency `ell` is the exact rational
//! `R_ell = (1/ell) * sum_{n <= Q/ell} g(ell n)/n`, zero past the support.

use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq)]
pub struct SieveWeights {
    label: String,
    coeffs: Vec<Rational>,
    essential_bound: Rational,
}

impl SieveWeights {
    /// Wraps explicit coefficients `g(1), ..., g(Q)`. The essential bound
    /// defaults to `max(1, max |g(q)|)` so it is always positive.
    pub fn new(label: impl Into<String>, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain("weight support must be positive".into()));
        }
        let max_abs = coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .expect("nonempty coefficient list");
        let essential_bound = max_abs.max(Rational::one());
        Ok(SieveWeights { label: label.into(), coeffs, essential_bound })
    }

    /// Same, with an explicit essential bound `B`; rejects `B` below the
    /// actual coefficient maximum or nonpositive.
    pub fn with_bound(
        label: impl Into<String>,
        coeffs: Vec<Rational>,
        bound: Rational,
    ) -> Result<Self> {
        let mut w = Self::new(label, coeffs)?;
        if !bound.is_positive() {
            return Err(Error::Domain("essential bound must be positive".into()));
        }
        if w.coeffs.iter().any(|c| c.abs() > bound) {
            return Err(Error::Domain(
                "essential bound is below a coefficient magnitude".into(),
            ));
        }
        w.essential_bound = bound;
        Ok(w)
    }

    /// The constant weight `g = 1` on `1..=support`.
    pub fn ones(label: impl Into<String>, support: u64) -> Result<Self> {
        if support == 0 {
            return Err(Error::Domain("weight support must be positive".into()));
        }
        Self::new(label, vec![Rational::one(); support as usize])
    }

    /// The delta weight concentrated at q = 1, so `f = g * 1` is constant 1.
    pub fn delta(label: impl Into<String>) -> Self {
        Self::new(label, vec![Rational::one()]).expect("nonempty")
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn support(&self) -> u64 {
        self.coeffs.len() as u64
    }

    /// `g(q)`, which is zero past the support.
    pub fn coeff(&self, q: u64) -> Rational {
        if q == 0 || q > self.support() {
            Rational::zero()
        } else {
            self.coeffs[(q - 1) as usize].clone()
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn essential_bound(&self) -> &Rational {
        &self.essential_bound
    }

    /// Theorem-grade weights have every coefficient at least 1 on the
    /// support; several lower-bound functionals require this.
    pub fn is_theorem_mode(&self) -> bool {
        self.coeffs.iter().all(|c| *c >= Rational::one())
    }

    /// Clears denominators: returns `(a_1..a_Q, L)` with `g(q) = a_q / L`.
    /// Integer windows can then be accumulated in `i128` and divided once.
    pub fn scaled_integer_coeffs(&self) -> Result<(Vec<i128>, i128)> {
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = num_integer::lcm(lcm, c.denom().clone());
        }
        let denom = lcm
            .to_i128()
            .ok_or(Error::Overflow("weight common denominator"))?;
        let scaled = self
            .coeffs
            .iter()
            .map(|c| {
                let s = c.numer() * (&lcm / c.denom());
                s.to_i128().ok_or(Error::Overflow("scaled weight"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((scaled, denom))
    }

    /// Writes the `q,numerator,denominator` CSV form.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "q,numerator,denominator")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            writeln!(w, "{},{},{}", i + 1, c.numer(), c.denom())?;
        }
        Ok(())
    }

    pub fn save_csv(&self, path: &Path) -> Result<()> {
        let file = std::fs::File::create(path)?;
        self.write_csv(std::io::BufWriter::new(file))
    }

    /// Reads the `q,numerator,denominator` CSV form, rows covering
    /// `1..=support` in order.
    pub fn read_csv<R: std::io::Read>(label: impl Into<String>, r: R) -> Result<Self> {
        let reader = BufReader::new(r);
        let mut lines = reader.lines();
        match lines.next() {
            Some(Ok(h)) if h.trim() == "q,numerator,denominator" => {}
            _ => return Err(Error::Format("expected header 'q,numerator,denominator'".into())),
        }
        let mut coeffs = Vec::new();
        for (row, line) in lines.enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 3 {
                return Err(Error::Format(format!(
                    "row {}: expected q,numerator,denominator",
                    row + 2
                )));
            }
            let q: u64 = fields[0]
                .trim()
                .parse()
                .map_err(|_| Error::Format(format!("row {}: bad q", row + 2)))?;
            if q != coeffs.len() as u64 + 1 {
                return Err(Error::Format(format!(
                    "row {}: expected q = {}, found {q}",
                    row + 2,
                    coeffs.len() + 1
                )));
            }
            let numer: BigInt = fields[1]
                .trim()
                .parse()
                .map_err(|_| Error::Format(format!("row {}: bad numerator", row + 2)))?;
            let denom: BigInt = fields[2]
                .trim()
                .parse()
                .map_err(|_| Error::Format(format!("row {}: bad denominator", row + 2)))?;
            if denom.is_zero() {
                return Err(Error::Format(format!("row {}: zero denominator", row + 2)));
            }
            coeffs.push(Rational::new(numer, denom));
        }
        Self::new(label, coeffs)
    }

    pub fn load_csv(label: impl Into<String>, path: &Path) -> Result<Self> {
        let file = std::fs::File::open(path)?;
        Self::read_csv(label, file)
    }
}

/// Exact Ramanujan coefficient of `f = g * 1` at frequency `ell`:
/// `(1/ell) * sum_{n <= Q/ell} g(ell n) / n`. Zero once `ell` exceeds the
/// support, reflecting the finite expansion.
pub fn ramanujan_coefficient(g: &SieveWeights, ell: u64) -> Result<Rational> {
    if ell == 0 {
        return Err(Error::Domain("frequency ell must be positive".into()));
    }
    let mut total = Rational::zero();
    let mut n = 1u64;
    while ell * n <= g.support() {
        total += g.coeff(ell * n) / Rational::from_integer(n.into());
        n += 1;
    }
    Ok(total / Rational::from_integer(ell.into()))
}
