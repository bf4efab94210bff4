//! Dense tables of integer-valued arithmetic functions on `1..=limit`,
//! plus the sieves that build the stock ones.
//!
//! Tables carry `i64` values and every sieve uses checked arithmetic, so
//! an overflow surfaces as an error instead of wrapping. Desk-scale runs
//! (limits of a few million, `k <= 8`) stay far below the 64-bit line;
//! squared accumulations downstream widen to `i128` before summing.

use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::rational::Rational;

use super::weights::SieveWeights;

/// Values of one arithmetic function on an initial segment `1..=limit`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionTable {
    label: String,
    values: Vec<i64>,
}

impl FunctionTable {
    /// Wraps explicit values; `values[i]` is the value at `n = i + 1`.
    pub fn from_values(label: impl Into<String>, values: Vec<i64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Domain("table limit must be positive".into()));
        }
        Ok(FunctionTable { label: label.into(), values })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn limit(&self) -> u64 {
        self.values.len() as u64
    }

    /// Value at `n`; panics off the table, which is a caller bug.
    pub fn value(&self, n: u64) -> i64 {
        assert!(
            n >= 1 && n <= self.limit(),
            "n = {n} outside table {} (limit {})",
            self.label,
            self.limit()
        );
        self.values[(n - 1) as usize]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Prefix sums `P[m] = sum_{n <= m} f(n)` for `m = 0..=limit`, widened
    /// to `i128` so window sums of squares can be accumulated safely.
    pub fn prefix_sums(&self) -> Vec<i128> {
        let mut out = Vec::with_capacity(self.values.len() + 1);
        out.push(0i128);
        let mut acc = 0i128;
        for &v in &self.values {
            acc += v as i128;
            out.push(acc);
        }
        out
    }

    /// Pointwise difference, used to audit `I_{f-f1}` against its expansion.
    pub fn difference(&self, other: &FunctionTable) -> Result<FunctionTable> {
        if self.limit() != other.limit() {
            return Err(Error::Domain(format!(
                "table limits differ: {} vs {}",
                self.limit(),
                other.limit()
            )));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.checked_sub(*b).ok_or(Error::Overflow("table difference")))
            .collect::<Result<Vec<_>>>()?;
        FunctionTable::from_values(format!("{}-{}", self.label, other.label), values)
    }

    /// Writes the `n,value` CSV form.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "n,value")?;
        for (i, v) in self.values.iter().enumerate() {
            writeln!(w, "{},{}", i + 1, v)?;
        }
        Ok(())
    }

    pub fn save_csv(&self, path: &Path) -> Result<()> {
        let file = std::fs::File::create(path)?;
        self.write_csv(std::io::BufWriter::new(file))
    }

    /// Reads the `n,value` CSV form; rows must cover `1..=limit` in order.
    pub fn read_csv<R: std::io::Read>(label: impl Into<String>, r: R) -> Result<Self> {
        let reader = BufReader::new(r);
        let mut lines = reader.lines();
        match lines.next() {
            Some(Ok(header)) if header.trim() == "n,value" => {}
            _ => return Err(Error::Format("expected header 'n,value'".into())),
        }
        let mut values = Vec::new();
        for (row, line) in lines.enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let (n_str, v_str) = line
                .split_once(',')
                .ok_or_else(|| Error::Format(format!("row {}: expected n,value", row + 2)))?;
            let n: u64 = n_str
                .trim()
                .parse()
                .map_err(|_| Error::Format(format!("row {}: bad n {n_str:?}", row + 2)))?;
            if n != values.len() as u64 + 1 {
                return Err(Error::Format(format!(
                    "row {}: expected n = {}, found {n}",
                    row + 2,
                    values.len() + 1
                )));
            }
            let v: i64 = v_str
                .trim()
                .parse()
                .map_err(|_| Error::Format(format!("row {}: bad value {v_str:?}", row + 2)))?;
            values.push(v);
        }
        FunctionTable::from_values(label, values)
    }

    pub fn load_csv(label: impl Into<String>, path: &Path) -> Result<Self> {
        let file = std::fs::File::open(path)?;
        Self::read_csv(label, file)
    }
}

/// Moebius function on `1..=limit` by the linear sieve: every composite is
/// struck exactly once through its least prime factor.
pub fn sieve_mobius(limit: u64) -> Result<FunctionTable> {
    if limit == 0 {
        return Err(Error::Domain("sieve limit must be positive".into()));
    }
    let n = limit as usize;
    let mut mu = vec![0i64; n + 1];
    mu[1] = 1;
    let mut is_composite = vec![false; n + 1];
    let mut primes: Vec<usize> = Vec::new();
    for i in 2..=n {
        if !is_composite[i] {
            primes.push(i);
            mu[i] = -1;
        }
        for &p in &primes {
            let m = i * p;
            if m > n {
                break;
            }
            is_composite[m] = true;
            if i % p == 0 {
                mu[m] = 0;
                break;
            }
            mu[m] = -mu[i];
        }
    }
    FunctionTable::from_values("mobius", mu[1..].to_vec())
}

/// `k`-fold divisor function `d_k` on `1..=limit` by iterated Dirichlet
/// convolution with the constant function 1. `d_1` is identically 1.
pub fn sieve_divisor_k(k: u32, limit: u64) -> Result<FunctionTable> {
    if k == 0 {
        return Err(Error::Domain("divisor order k must be >= 1".into()));
    }
    if limit == 0 {
        return Err(Error::Domain("sieve limit must be positive".into()));
    }
    let n = limit as usize;
    let mut current = vec![1i64; n];
    for _ in 1..k {
        current = convolve_unit_integral(&current)?;
    }
    FunctionTable::from_values(format!("d_{k}"), current)
}

/// One Dirichlet convolution with 1: `out(m) = sum_{d | m} in(d)`.
fn convolve_unit_integral(values: &[i64]) -> Result<Vec<i64>> {
    let n = values.len();
    let mut out = vec![0i64; n];
    for d in 1..=n {
        let v = values[d - 1];
        if v == 0 {
            continue;
        }
        let mut m = d;
        while m <= n {
            out[m - 1] = out[m - 1]
                .checked_add(v)
                .ok_or(Error::Overflow("divisor sieve"))?;
            m += d;
        }
    }
    Ok(out)
}

/// Table of `f = g * 1`, i.e. `f(n) = sum_{d | n, d <= support} g(d)`,
/// computed exactly. The weights may be rational as long as every table
/// entry comes out an integer; a non-integer entry is reported, since
/// tables are integral by contract.
pub fn convolve_with_unit(weights: &SieveWeights, limit: u64) -> Result<FunctionTable> {
    if limit == 0 {
        return Err(Error::Domain("table limit must be positive".into()));
    }
    let (scaled, denom) = weights.scaled_integer_coeffs()?;
    let n = limit as usize;
    let mut acc = vec![0i128; n];
    for (idx, &s) in scaled.iter().enumerate() {
        if s == 0 {
            continue;
        }
        let d = idx + 1;
        if d > n {
            break;
        }
        let mut m = d;
        while m <= n {
            acc[m - 1] = acc[m - 1]
                .checked_add(s)
                .ok_or(Error::Overflow("weight convolution"))?;
            m += d;
        }
    }
    let mut values = Vec::with_capacity(n);
    for (i, a) in acc.iter().enumerate() {
        if a % denom != 0 {
            return Err(Error::Domain(format!(
                "weights do not produce an integer table: f({}) = {}/{}",
                i + 1,
                a,
                denom
            )));
        }
        let v = (a / denom)
            .to_i64()
            .ok_or(Error::Overflow("weight convolution value"))?;
        values.push(v);
    }
    FunctionTable::from_values(format!("{}*1", weights.label()), values)
}

/// Convenience: exact rational value of `f(n) = sum_{d|n, d<=Q} g(d)`
/// without building a table. Used by oracles and spot checks.
pub fn convolve_with_unit_at(weights: &SieveWeights, n: u64) -> Rational {
    let mut total = Rational::from_integer(0.into());
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            total += weights.coeff(d);
            let other = n / d;
            if other != d {
                total += weights.coeff(other);
            }
        }
        d += 1;
    }
    total
}
