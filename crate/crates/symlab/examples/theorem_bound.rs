//! The exact lower-bound functional for symmetry integrals of sieve
//! convolutions g * 1, compared against the exact continuous integral it
//! bounds (up to the absolute constant the analysis absorbs).
//!
//! Run with: cargo run --release --example theorem_bound

use symlab::arith::{convolve_with_unit, SieveWeights};
use symlab::integrals::{symmetry_integral, theorem_lower_bound, IntegralMode};
use symlab::rational::to_f64;

fn main() -> symlab::Result<()> {
    let h = 32u64;
    let (d_cap, q_cap) = (16u64, 256u64);
    let g = SieveWeights::ones("ones_256", q_cap)?;

    println!("lower-bound functional vs exact continuous symmetry integral of g*1");
    println!("weights: all-ones on q <= {q_cap}; D = {d_cap}, h = {h}");
    println!("{:>8} {:>22} {:>22} {:>10}", "N", "bound", "I (continuous)", "I/bound");
    for exp in 10..=14 {
        let n = 1u64 << exp;
        let bound = theorem_lower_bound(&g, &g, n, h, d_cap, q_cap)?;
        let f = convolve_with_unit(&g, 2 * n + h)?;
        let integral = symmetry_integral(&f, n, h, IntegralMode::Continuous)?;
        let i_value = integral.value.as_exact().unwrap().clone();
        println!(
            "{:>8} {:>22.6e} {:>22.6e} {:>10.3}",
            n,
            to_f64(&bound),
            to_f64(&i_value),
            to_f64(&i_value) / to_f64(&bound)
        );
    }
    println!("the integral dominates the functional at every scale, as a lower bound");
    println!("must allow; the widening gap is the (log N)-growth the bound gives away");
    Ok(())
}
