//! Partial sums of `mu(t)/t^2` and a certified comparison against their
//! limit `6/pi^2`.
//!
//! The partial sum itself is an exact rational; its denominator grows like
//! `lcm(1..T)^2`, so the exact form is meant for moderate `T` (a few
//! thousand). The sweep that certifies the tail bound `|S_T - 6/pi^2| <=
//! 1/T` for every `T` up to `10^5` instead works in 192-bit fixed point
//! with a tracked error envelope and a rational enclosure of `6/pi^2`, so
//! the verdict is rigorous without giant denominators.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{to_f64, Rational};

use super::tables::sieve_mobius;

/// `6/pi^2`, the limit of the partial sums, for report rendering.
pub const BASEL_CONSTANT_F64: f64 = 6.0 / (std::f64::consts::PI * std::f64::consts::PI);

/// First 50 decimals of pi; `pi` lies in `(PI_DIGITS, PI_DIGITS + 1) / 10^50`.
const PI_DIGITS: &str = "314159265358979323846264338327950288419716939937510";

#[derive(Debug, Clone)]
pub struct MobiusSquareSum {
    /// Exact value of `sum_{t <= T} mu(t)/t^2`.
    pub partial_sum: Rational,
    /// `partial_sum - 6/pi^2` at double precision, for display only.
    pub basel_deviation: f64,
}

/// Exact partial sum of `mu(t)/t^2` up to `t_max`.
pub fn mobius_square_partial_sum(t_max: u64) -> Result<MobiusSquareSum> {
    if t_max == 0 {
        return Err(Error::Domain("partial sum needs t_max >= 1".into()));
    }
    let mu = sieve_mobius(t_max)?;
    let mut sum = Rational::zero();
    for t in 1..=t_max {
        let m = mu.value(t);
        if m == 0 {
            continue;
        }
        sum += Rational::new(BigInt::from(m), BigInt::from(t) * BigInt::from(t));
    }
    let basel_deviation = to_f64(&sum) - BASEL_CONSTANT_F64;
    Ok(MobiusSquareSum { partial_sum: sum, basel_deviation })
}

#[derive(Debug, Clone)]
pub struct BaselTailAudit {
    pub t_max: u64,
    /// Certified upper bound on `max_{T <= t_max} T * |S_T - 6/pi^2|`.
    pub max_scaled_deviation: f64,
    /// Whether `|S_T - 6/pi^2| <= 1/T` was certified for every `T`.
    pub holds: bool,
    pub first_failure: Option<u64>,
}

/// Certifies `|sum_{t <= T} mu(t)/t^2 - 6/pi^2| <= 1/T` for every
/// `T <= t_max`.
///
/// Fixed-point scheme: with `SCALE = 2^192`, each term contributes
/// `floor(SCALE/t^2)` with sign `mu(t)`, so after `T` steps the
/// accumulator is within `T` ulps of the true scaled sum. `6/pi^2` is
/// enclosed between two rationals derived from 50 digits of pi. The check
/// `( |accumulator - enclosure| + T ) * T <= SCALE` is then a rigorous
/// integer inequality; the analytic margin is around `1/(2T^2)`, many
/// orders above both error envelopes.
pub fn verify_basel_tail_bound(t_max: u64) -> Result<BaselTailAudit> {
    if t_max == 0 {
        return Err(Error::Domain("tail audit needs t_max >= 1".into()));
    }
    let scale: BigInt = BigInt::one() << 192;
    let pi_scaled: BigInt = PI_DIGITS.parse().expect("pi digit literal");
    let ten_pow_100: BigInt = BigInt::from(10u32).pow(100);
    let six = BigInt::from(6u32);
    // 6/pi^2 in (c_lo, c_hi) / SCALE.
    let c_lo = (&six * &ten_pow_100 * &scale) / ((&pi_scaled + 1u32) * (&pi_scaled + 1u32));
    let c_hi = (&six * &ten_pow_100 * &scale) / (&pi_scaled * &pi_scaled) + 1u32;

    let mu = sieve_mobius(t_max)?;
    let mut acc = BigInt::zero();
    let mut max_scaled_deviation = 0.0f64;
    let mut first_failure = None;
    for t in 1..=t_max {
        let m = mu.value(t);
        if m != 0 {
            let term = &scale / BigInt::from(t * t);
            if m > 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        // Worst deviation over the enclosure plus the accumulated ulp error.
        let dev = (&acc - &c_lo).abs().max((&acc - &c_hi).abs()) + BigInt::from(t);
        let scaled = &dev * BigInt::from(t);
        if scaled > scale && first_failure.is_none() {
            first_failure = Some(t);
        }
        let ratio = to_f64(&Rational::new(scaled, scale.clone()));
        if ratio > max_scaled_deviation {
            max_scaled_deviation = ratio;
        }
    }
    Ok(BaselTailAudit {
        t_max,
        max_scaled_deviation,
        holds: first_failure.is_none(),
        first_failure,
    })
}
