//! Threshold decomposition of divisor-function symmetry sums and the
//! growth-law audit for the k-fold divisor function.
//!
//! Every `n` in a window around `x ~ N` with `n >= N - h` forces at least
//! one factor of any ordered `k`-tuple with product `n` to reach
//! `t = floor((N-h)^{1/k})`: otherwise the product stays below `t^k <=
//! N-h`. Classifying each tuple by the position of its first factor
//! `>= t` rewrites the signed window sum of `d_k` as
//! `sum_{j=0}^{k-1} sum_q d_{k-1}^{(j)}(q) * (signed count of m >= t with
//! q m in the window)`, an identity this module checks exactly. The
//! growth audit computes the symmetry and Selberg integrals of `d_k`
//! directly and normalises them by `N h (log N)^{k+1}`.

use crate::arith::{restricted_divisor_tables, sieve_divisor_k, FunctionTable};
use crate::error::{Error, Result};
use crate::integrals::{
    fit_log_polynomial, selberg_integral, symmetry_integral, IntegralMode, MeanValueModel,
};
use crate::rational::{floor_rational_power, integer_kth_root, to_f64, Rational};

/// Validated inputs of one threshold decomposition.
#[derive(Debug, Clone, Copy)]
pub struct DecompositionParams {
    k: u32,
    n: u64,
    h: u64,
    threshold: u64,
}

impl DecompositionParams {
    /// `k >= 3`, `1 <= h < N`; the threshold is the integer k-th root of
    /// `N - h` and must reach 2 for the partition to say anything.
    pub fn new(k: u32, n: u64, h: u64) -> Result<Self> {
        if k < 3 {
            return Err(Error::Domain(format!("decomposition needs k >= 3, got {k}")));
        }
        if h == 0 || n <= h {
            return Err(Error::Domain(format!("need 1 <= h < N, got h = {h}, N = {n}")));
        }
        let threshold = integer_kth_root(n - h, k);
        debug_assert!(threshold.pow(k) <= n - h);
        debug_assert!((threshold + 1).pow(k) > n - h);
        if threshold < 2 {
            return Err(Error::Domain(format!(
                "threshold floor((N-h)^(1/{k})) = {threshold} < 2; N too small for k = {k}"
            )));
        }
        Ok(DecompositionParams { k, n, h, threshold })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn h(&self) -> u64 {
        self.h
    }

    pub fn threshold(&self) -> u64 {
        self.threshold
    }

    /// Largest q that can pair with some m >= threshold inside the
    /// window around x.
    pub fn q_range(&self, x: u64) -> u64 {
        (x + self.h) / self.threshold
    }
}

/// Precomputed tables for evaluating both sides of the decomposition
/// identity at any `x ~ N`.
pub struct SymmetryDecomposition {
    params: DecompositionParams,
    prefix: Vec<i128>,
    restricted: Vec<Vec<i64>>,
}

impl SymmetryDecomposition {
    pub fn new(k: u32, n: u64, h: u64) -> Result<Self> {
        let params = DecompositionParams::new(k, n, h)?;
        let table = sieve_divisor_k(k, 2 * n + h)?;
        let prefix = table.prefix_sums();
        let q_limit = params.q_range(2 * n - 1);
        let restricted = restricted_divisor_tables(k, params.threshold, q_limit)?;
        Ok(SymmetryDecomposition { params, prefix, restricted })
    }

    pub fn params(&self) -> &DecompositionParams {
        &self.params
    }

    /// Both sides of the identity at `x`: `direct` is the signed window
    /// sum of `d_k`, `decomposed` the threshold-partition re-count. They
    /// must agree exactly for every `x` in `[N, 2N)`.
    pub fn at(&self, x: u64) -> Result<(i128, i128)> {
        let p = &self.params;
        if x < p.n || x >= 2 * p.n {
            return Err(Error::Domain(format!(
                "x = {x} outside [N, 2N) = [{}, {})",
                p.n,
                2 * p.n
            )));
        }
        let direct = {
            let pf = |i: u64| self.prefix[i as usize];
            (pf(x + p.h) - pf(x)) - (pf(x - 1) - pf(x - p.h - 1))
        };
        let mut decomposed: i128 = 0;
        for table in &self.restricted {
            for (idx, &weight) in table.iter().enumerate() {
                if weight == 0 {
                    continue;
                }
                let q = idx as u64 + 1;
                let count = signed_threshold_count(q, x, p.h, p.threshold);
                if count != 0 {
                    decomposed += weight as i128 * count as i128;
                }
            }
        }
        Ok((direct, decomposed))
    }

    /// Checks the identity on every `x` in `[N, 2N)`; returns the first
    /// mismatch if any.
    pub fn verify_full_range(&self) -> Result<Option<u64>> {
        for x in self.params.n..2 * self.params.n {
            let (direct, decomposed) = self.at(x)?;
            if direct != decomposed {
                return Ok(Some(x));
            }
        }
        Ok(None)
    }
}

/// Signed count of multiples `q m` with `m >= threshold` in the window:
/// `#{m >= t : x < qm <= x+h} - #{m >= t : x-h <= qm < x}`.
fn signed_threshold_count(q: u64, x: u64, h: u64, threshold: u64) -> i64 {
    let above = {
        let lo = threshold.max(x / q + 1);
        let hi = (x + h) / q;
        if hi >= lo {
            (hi - lo + 1) as i64
        } else {
            0
        }
    };
    let below = {
        let lo = threshold.max((x - h).div_ceil(q));
        let hi = (x - 1) / q;
        if hi >= lo {
            (hi - lo + 1) as i64
        } else {
            0
        }
    };
    above - below
}

/// One grid point of the growth audit: the exact integrals of `d_k` and
/// their normalised growth ratios.
#[derive(Debug, Clone)]
pub struct GrowthPoint {
    pub k: u32,
    pub n: u64,
    pub h: u64,
    /// Continuous symmetry integral of `d_k`, exact (an integer).
    pub symmetry: Rational,
    /// Selberg integral against the degree-(k-1) fitted log-polynomial
    /// model, exact given the float-valued fit.
    pub selberg: Rational,
    /// `symmetry / (N h (log N)^{k+1})`.
    pub rho_i: f64,
    /// `selberg / (N h (log N)^{k+1})`.
    pub rho_j: f64,
}

/// Computes the growth point for `d_k` at width `theta`: `h = floor(N^theta)`.
/// Requires `k >= 3` and `0 < theta < 1/k` (the regime where the growth
/// law is asserted), and `h >= 2`.
pub fn corollary_growth_ratio(k: u32, theta: &Rational, n: u64) -> Result<GrowthPoint> {
    use num_traits::Signed;
    if k < 3 {
        return Err(Error::Domain(format!("growth audit needs k >= 3, got {k}")));
    }
    if !theta.is_positive() {
        return Err(Error::Domain("need theta > 0".into()));
    }
    // theta < 1/k, exactly: k * numer < denom.
    if theta.numer() * num_bigint::BigInt::from(k) >= theta.denom().clone() {
        return Err(Error::Domain(format!(
            "theta = {theta} violates theta < 1/k = 1/{k}"
        )));
    }
    let h = floor_rational_power(n, theta)?;
    if h < 2 {
        return Err(Error::Domain(format!(
            "h = floor(N^theta) = {h} < 2; enlarge N"
        )));
    }
    let table = sieve_divisor_k(k, 2 * n + h)?;
    growth_point_from_table(&table, k, n, h)
}

/// Growth point with the `d_k` table supplied by the caller (so scans can
/// reuse one sieve across widths).
pub fn growth_point_from_table(
    table: &FunctionTable,
    k: u32,
    n: u64,
    h: u64,
) -> Result<GrowthPoint> {
    let symmetry = symmetry_integral(table, n, h, IntegralMode::Continuous)?
        .value
        .as_exact()
        .expect("symmetry integral is exact")
        .clone();
    let coefficients = fit_log_polynomial(table, n, h, (k - 1) as usize)?;
    let model = MeanValueModel::FittedLogPolynomial { coefficients };
    let selberg = selberg_integral(table, n, h, &model)?
        .value
        .as_exact()
        .expect("selberg integral is exact")
        .clone();
    let scale = (n as f64) * (h as f64) * (n as f64).ln().powi(k as i32 + 1);
    Ok(GrowthPoint {
        k,
        n,
        h,
        rho_i: to_f64(&symmetry) / scale,
        rho_j: to_f64(&selberg) / scale,
        symmetry,
        selberg,
    })
}

/// Harmonic sum of `d_{k-1}` against its floor bound:
/// `sum = sum_{n<=x} d_{k-1}(n)/n` and `floor_bound = (log x/(k-1))^{k-1}`.
/// The sum always dominates the bound (restrict every factor to
/// `x^{1/(k-1)}` and multiply out `k-1` harmonic sums).
pub fn divisor_harmonic_lower_check(k: u32, x: u64) -> Result<(f64, f64)> {
    if k < 2 || x < 2 {
        return Err(Error::Domain("need k >= 2 and x >= 2".into()));
    }
    let table = sieve_divisor_k(k - 1, x)?;
    let mut sum = 0.0f64;
    for n in 1..=x {
        sum += table.value(n) as f64 / n as f64;
    }
    let floor_bound = ((x as f64).ln() / (k - 1) as f64).powi(k as i32 - 1);
    Ok((sum, floor_bound))
}

/// Sweeps the harmonic lower bound over all `2 <= x <= x_max` with one
/// sieve pass; returns the first failing x (none expected) and the
/// minimal margin `sum - bound`.
pub fn divisor_harmonic_sweep(k: u32, x_max: u64) -> Result<(Option<u64>, f64)> {
    if k < 2 || x_max < 2 {
        return Err(Error::Domain("need k >= 2 and x_max >= 2".into()));
    }
    let table = sieve_divisor_k(k - 1, x_max)?;
    let mut sum = 1.0f64; // n = 1 term: d_{k-1}(1)/1
    let mut first_failure = None;
    let mut min_margin = f64::INFINITY;
    for x in 2..=x_max {
        sum += table.value(x) as f64 / x as f64;
        let bound = ((x as f64).ln() / (k - 1) as f64).powi(k as i32 - 1);
        let margin = sum - bound;
        if margin < min_margin {
            min_margin = margin;
        }
        if margin < 0.0 && first_failure.is_none() {
            first_failure = Some(x);
        }
    }
    Ok((first_failure, min_margin))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn params_frozen_thresholds() {
        let p = DecompositionParams::new(3, 64, 2).unwrap();
        assert_eq!(p.threshold(), 3); // 27 <= 62 < 64
        let p = DecompositionParams::new(4, 64, 4).unwrap();
        assert_eq!(p.threshold(), 2); // 16 <= 60 < 81
        let p = DecompositionParams::new(4, 256, 4).unwrap();
        assert_eq!(p.threshold(), 3); // 81 <= 252 < 256
        assert!(DecompositionParams::new(2, 64, 2).is_err());
        assert!(DecompositionParams::new(3, 8, 1).is_err()); // threshold 1
        assert!(DecompositionParams::new(3, 64, 64).is_err());
    }

    /// Ordered k-tuple count with product n, by recursive enumeration.
    fn tuple_count(k: u32, n: u64) -> i64 {
        if k == 0 {
            return i64::from(n == 1);
        }
        let mut total = 0;
        for d in 1..=n {
            if n % d == 0 {
                total += tuple_count(k - 1, n / d);
            }
        }
        total
    }

    #[test]
    fn decomposition_matches_tuple_oracle() {
        let dec = SymmetryDecomposition::new(3, 64, 2).unwrap();
        let x = 70u64;
        let (direct, decomposed) = dec.at(x).unwrap();
        // independent signed window sum from the tuple-count oracle
        let mut oracle = 0i64;
        for n in (x - 2)..=(x + 2) {
            let sgn = (n as i64 - x as i64).signum();
            oracle += sgn * tuple_count(3, n);
        }
        assert_eq!(direct, oracle as i128);
        assert_eq!(decomposed, oracle as i128);
    }

    #[test]
    fn decomposition_full_range_small() {
        for k in [3u32, 4] {
            for h in [1u64, 2] {
                let dec = SymmetryDecomposition::new(k, 64, h).unwrap();
                assert_eq!(dec.verify_full_range().unwrap(), None, "k={k} h={h}");
            }
        }
    }

    #[test]
    fn signed_count_matches_enumeration() {
        for q in 1..=12u64 {
            for x in 30..=60u64 {
                for h in [1u64, 3, 7] {
                    for t in [2u64, 3, 5] {
                        if x <= h {
                            continue;
                        }
                        let fast = signed_threshold_count(q, x, h, t);
                        let mut slow = 0i64;
                        let mut m = t;
                        while q * m <= x + h {
                            let nm = q * m;
                            if nm >= x - h {
                                slow += (nm as i64 - x as i64).signum();
                            }
                            m += 1;
                        }
                        assert_eq!(fast, slow, "q={q} x={x} h={h} t={t}");
                    }
                }
            }
        }
    }

    #[test]
    fn growth_ratio_positive_and_guarded() {
        let theta = rat(1, 4);
        let point = corollary_growth_ratio(3, &theta, 1024).unwrap();
        assert_eq!(point.h, 5); // floor(1024^(1/4)) = 5 since 5^4 = 625 <= 1024 < 1296
        assert!(point.rho_i > 0.0);
        assert!(point.rho_j > 0.0);
        assert!(point.symmetry > rat(0, 1));

        assert!(corollary_growth_ratio(2, &theta, 1024).is_err());
        assert!(corollary_growth_ratio(3, &rat(1, 3), 1024).is_err()); // theta = 1/k
        assert!(corollary_growth_ratio(3, &rat(2, 5), 1024).is_err()); // theta > 1/k
        assert!(corollary_growth_ratio(3, &rat(0, 1), 1024).is_err());
        assert!(corollary_growth_ratio(3, &theta, 15).is_err()); // h = 1
    }

    #[test]
    fn harmonic_check_frozen_examples() {
        // k = 2 sums 1-tuple counts: the harmonic number H_10 = 7381/2520.
        let (sum, bound) = divisor_harmonic_lower_check(2, 10).unwrap();
        assert!((sum - 7381.0 / 2520.0).abs() < 1e-12, "{sum}");
        assert!((bound - 10f64.ln()).abs() < 1e-12);
        assert!(sum >= bound);

        // k = 3 sums ordinary divisor counts: 2521/420 = 6.0023...
        let (sum3, bound3) = divisor_harmonic_lower_check(3, 10).unwrap();
        assert!((sum3 - 2521.0 / 420.0).abs() < 1e-12, "{sum3}");
        assert!(sum3 >= bound3);

        let (sum2, bound2) = divisor_harmonic_lower_check(2, 2).unwrap();
        assert!((sum2 - 1.5).abs() < 1e-12);
        assert!(sum2 >= bound2);
    }

    #[test]
    fn harmonic_sweep_holds_small() {
        for k in 2..=5u32 {
            let (failure, margin) = divisor_harmonic_sweep(k, 3000).unwrap();
            assert_eq!(failure, None, "k = {k}");
            assert!(margin > 0.0, "k = {k}: margin {margin}");
        }
    }
}
