//! Exact rational scalar used by the identity layer.
//!
//! Every value that must distinguish an exact zero from a small quantity
//! like `2/q` is carried as a [`Rational`] (arbitrary precision, always
//! canonical). Doubles appear only in rendered reports, fitted models and
//! complex reconstructions.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Small-literal constructor, mostly for tests and frozen constants.
pub fn rat(numer: i64, denom: i64) -> Rational {
    assert!(denom != 0, "zero denominator");
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Distance from `a` to the nearest integer, exactly. Lies in `[0, 1/2]`.
pub fn nearest_integer_distance(a: &Rational) -> Rational {
    let fractional = a - a.floor();
    let complement = Rational::one() - &fractional;
    fractional.min(complement)
}

/// Renders `a` as `num/den`, or as a bare integer when the denominator is 1.
pub fn format_rational(a: &Rational) -> String {
    if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

/// Parses the `num/den` form accepted everywhere in config and report files.
/// A bare integer is read as `n/1`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let numer: BigInt = num
        .parse()
        .map_err(|_| Error::Format(format!("bad rational numerator {num:?}")))?;
    let denom: BigInt = den
        .parse()
        .map_err(|_| Error::Format(format!("bad rational denominator {den:?}")))?;
    if denom.is_zero() {
        return Err(Error::Format(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(numer, denom))
}

/// `floor(base^exponent)` for a positive rational exponent `p/r`, computed
/// with integer powers and an integer `r`-th root so the result is
/// platform independent. This is how interval widths `h = floor(N^theta)`
/// are derived from exact config rationals.
pub fn floor_rational_power(base: u64, exponent: &Rational) -> Result<u64> {
    if exponent.is_negative() {
        return Err(Error::Domain(format!("negative exponent {exponent}")));
    }
    let p = exponent
        .numer()
        .to_u32()
        .ok_or_else(|| Error::Domain(format!("exponent numerator too large: {exponent}")))?;
    let r = exponent
        .denom()
        .to_u32()
        .ok_or_else(|| Error::Domain(format!("exponent denominator too large: {exponent}")))?;
    let powered = BigUint::from(base).pow(p);
    let root = powered.nth_root(r);
    root.to_u64()
        .ok_or(Error::Overflow("floor_rational_power result"))
}

/// Largest `t` with `t^k <= n`, via the exact integer root.
pub fn integer_kth_root(n: u64, k: u32) -> u64 {
    assert!(k >= 1, "root order must be positive");
    BigUint::from(n)
        .nth_root(k)
        .to_u64()
        .expect("root of a u64 fits a u64")
}

pub fn to_f64(a: &Rational) -> f64 {
    a.to_f64().unwrap_or(f64::NAN)
}
