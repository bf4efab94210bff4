//! Tabulating the arithmetic functions everything else consumes:
//! Möbius, k-fold divisor counts, threshold-restricted divisor counts,
//! and sieve weight vectors with their Ramanujan coefficients.
//!
//! Run with: cargo run --example sieve_tables

use symlab::arith::{
    ramanujan_coefficient, restricted_divisor_tables, sieve_divisor_k, sieve_mobius, SieveWeights,
};
use symlab::rational::format_rational;

fn main() -> symlab::Result<()> {
    let mu = sieve_mobius(20)?;
    println!("mu(1..20)  = {:?}", mu.values());

    let d2 = sieve_divisor_k(2, 20)?;
    let d3 = sieve_divisor_k(3, 20)?;
    println!("d_2(1..20) = {:?}", d2.values());
    println!("d_3(1..20) = {:?}", d3.values());

    // Partial sums power the O(1) window sums used by every integral.
    let prefix = d2.prefix_sums();
    println!(
        "sum of d_2 over (10, 15] via prefix sums: {}",
        prefix[15] - prefix[10]
    );

    // Restricted variants d_2^{(j)}(q): ordered pairs with the first j
    // factors below the threshold. The j = 0 table is d_2 itself.
    let tables = restricted_divisor_tables(3, 3, 12)?;
    for (j, table) in tables.iter().enumerate() {
        println!("d_2^({j})(1..12) with threshold 3 = {table:?}");
    }

    // A sieve weight vector and the Ramanujan coefficients of g * 1.
    let g = SieveWeights::ones("unit_weights", 12)?;
    print!("Ramanujan coefficients of 1_[1,12] * 1:");
    for ell in 1..=6 {
        print!("  R_{ell} = {}", format_rational(&ramanujan_coefficient(&g, ell)?));
    }
    println!();
    Ok(())
}
