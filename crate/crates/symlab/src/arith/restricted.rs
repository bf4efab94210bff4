//! Divisor counts with a size restriction on a prefix of the ordered
//! factors, and the integral weight built from them.
//!
//! `restricted_divisor_count(k-1, j, q, t)` counts ordered `(k-1)`-tuples
//! with product `q` whose first `j` entries are strictly below `t`. These
//! are the coefficients that appear when a `k`-fold divisor window is
//! partitioned by the first factor reaching the threshold; their sum over
//! `j` is the window weight `g(q)`, squeezed between `1` and
//! `k * d_{k-1}(q)`.

use crate::error::{Error, Result};

/// Count of ordered `factors`-tuples with product `q` whose first
/// `restricted` entries are `< threshold`. Direct recursive enumeration;
/// intended for spot checks, the batch builder below serves sweeps.
pub fn restricted_divisor_count(
    factors: u32,
    restricted: u32,
    q: u64,
    threshold: u64,
) -> Result<i64> {
    if q == 0 {
        return Err(Error::Domain("q must be positive".into()));
    }
    if restricted > factors {
        return Err(Error::Domain(format!(
            "restricted prefix {restricted} exceeds tuple length {factors}"
        )));
    }
    Ok(count_tuples(factors, restricted, q, threshold))
}

fn count_tuples(factors: u32, restricted: u32, q: u64, threshold: u64) -> i64 {
    if factors == 0 {
        return i64::from(q == 1);
    }
    let mut total = 0i64;
    let mut d = 1u64;
    while d * d <= q {
        if q % d == 0 {
            total += count_with_first(factors, restricted, q, threshold, d);
            if d != q / d {
                total += count_with_first(factors, restricted, q, threshold, q / d);
            }
        }
        d += 1;
    }
    total
}

fn count_with_first(factors: u32, restricted: u32, q: u64, threshold: u64, first: u64) -> i64 {
    if restricted > 0 && first >= threshold {
        return 0;
    }
    count_tuples(factors - 1, restricted.saturating_sub(1), q / first, threshold)
}

/// Tables of `d_{k-1}^{(j)}(q)` for `q <= limit` and every `j < k`,
/// built by Dirichlet-convolving the indicator of `[1, threshold)` for the
/// restricted positions and the constant 1 for the free ones.
pub fn restricted_divisor_tables(
    k: u32,
    threshold: u64,
    limit: u64,
) -> Result<Vec<Vec<i64>>> {
    if k < 1 {
        return Err(Error::Domain("k must be at least 1".into()));
    }
    if limit == 0 {
        return Err(Error::Domain("table limit must be positive".into()));
    }
    let n = limit as usize;
    let mut tables = Vec::with_capacity(k as usize);
    for j in 0..k {
        // delta at 1, then j restricted factors, then (k-1-j) free factors.
        let mut values = vec![0i64; n];
        values[0] = 1;
        for _ in 0..j {
            values = convolve_indicator(&values, threshold)?;
        }
        for _ in 0..(k - 1 - j) {
            values = convolve_indicator(&values, u64::MAX)?;
        }
        tables.push(values);
    }
    Ok(tables)
}

/// One convolution with the indicator of `{a : a < cutoff}` (full unit
/// convolution when the cutoff clears the table).
fn convolve_indicator(values: &[i64], cutoff: u64) -> Result<Vec<i64>> {
    let n = values.len();
    let mut out = vec![0i64; n];
    let a_max = if cutoff == u64::MAX {
        n as u64
    } else {
        cutoff.saturating_sub(1).min(n as u64)
    };
    for a in 1..=a_max {
        let a = a as usize;
        let mut m = a;
        let mut b = 1;
        while m <= n {
            if values[b - 1] != 0 {
                out[m - 1] = out[m - 1]
                    .checked_add(values[b - 1])
                    .ok_or(Error::Overflow("restricted divisor sieve"))?;
            }
            m += a;
            b += 1;
        }
    }
    Ok(out)
}

/// The window weight `g(q) = sum_{j=0}^{k-1} d_{k-1}^{(j)}(q)`.
/// Requires `k >= 3`, where the partition it prices is nontrivial.
pub fn corollary_weight(k: u32, q: u64, threshold: u64) -> Result<i64> {
    if k < 3 {
        return Err(Error::Domain("corollary weight needs k >= 3".into()));
    }
    let mut total = 0i64;
    for j in 0..k {
        let c = restricted_divisor_count(k - 1, j, q, threshold)?;
        total = total
            .checked_add(c)
            .ok_or(Error::Overflow("corollary weight"))?;
    }
    Ok(total)
}
