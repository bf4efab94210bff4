//! symlab: an exact-computation laboratory for symmetry, mixed, and
//! Selberg integrals of sieve-type arithmetic functions in short
//! intervals.
//!
//! The crate computes, in exact arithmetic wherever the quantities are
//! rational, the objects that appear in the variance analysis of
//! arithmetic functions over short windows:
//!
//! - [`arith`]: integer function tables (Möbius, k-fold divisor counts,
//!   threshold-restricted divisor counts) and sieve weight vectors with
//!   their exact Ramanujan-sum evaluations.
//! - [`spectral`]: window indicator characters mod q, their Fourier
//!   coefficients and exact power sums, primitive (Ramanujan-filtered)
//!   power sums with two independent evaluation routes, bounded
//!   geometric sums, and Farey spacing facts.
//! - [`integrals`]: symmetry / mixed / Selberg integrals over `x ~ N`,
//!   mean-value models, the bilinear lemma decomposition with its
//!   diagonal-versus-off-diagonal audit, the distance-kernel lower
//!   bound, and the connection audit tying the symmetry integral to the
//!   Selberg integral.
//! - [`dk`]: the threshold decomposition of divisor-function window
//!   sums and the growth-law audit `I, J ~ N h (log N)^{k+1}`.
//! - [`experiments`]: reproducible experiment drivers (identity census,
//!   integral scans, lemma audits) with JSON / CSV reports and a thin
//!   command-line front end.
//!
//! Exactness policy: every quantity that is a rational number is
//! computed as one (`num::BigRational`); floating point appears only in
//! declared-approximate outputs (fitted polynomial coefficients,
//! envelope ratios, growth ratios) and in cross-checks against the
//! exact routes.

pub mod arith;
pub mod dk;
pub mod error;
pub mod experiments;
pub mod integrals;
pub mod rational;
pub mod report;
pub mod spectral;

pub use error::{Error, Result};
pub use rational::Rational;
