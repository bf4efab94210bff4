//! Integer tables, sieve weights and the small analytic estimates the
//! integral layer leans on.
//!
//! Everything here is exact: tables hold checked 64-bit integers, weights
//! and partial sums are arbitrary-precision rationals. Floating point is
//! confined to advisory bounds (harmonic estimates, Basel deviation).

mod constants;
mod restricted;
mod tables;
mod weights;

pub use constants::{
    mobius_square_partial_sum, verify_basel_tail_bound, BaselTailAudit, MobiusSquareSum,
    BASEL_CONSTANT_F64,
};
pub use restricted::{
    corollary_weight, restricted_divisor_count, restricted_divisor_tables,
};
pub use tables::{
    convolve_with_unit, convolve_with_unit_at, sieve_divisor_k, sieve_mobius, FunctionTable,
};
pub use weights::{ramanujan_coefficient, SieveWeights};
