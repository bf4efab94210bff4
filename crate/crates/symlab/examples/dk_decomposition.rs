//! Threshold decomposition of the signed d_k window sum: below the k-th
//! root threshold the divisor structure is tabulated exactly, and the
//! remaining range is covered by signed counts of divisors in the window.
//! Every point of [N, 2N) must reproduce the direct sum exactly.
//!
//! Run with: cargo run --example dk_decomposition

use symlab::dk::SymmetryDecomposition;

fn main() -> symlab::Result<()> {
    let (k, n, h) = (3u32, 128u64, 4u64);
    let decomposition = SymmetryDecomposition::new(k, n, h)?;
    let params = decomposition.params();
    println!(
        "k = {k}, N = {n}, h = {h}: threshold t = {} (t^k <= N - h < (t+1)^k)",
        params.threshold()
    );

    println!("{:>6} {:>14} {:>14}", "x", "direct", "decomposed");
    for x in [n, n + 37, n + 91, 2 * n - 1] {
        let (direct, decomposed) = decomposition.at(x)?;
        println!("{x:>6} {direct:>14} {decomposed:>14}");
        assert_eq!(direct, decomposed);
    }

    match decomposition.verify_full_range()? {
        None => println!("all {n} points of [N, 2N) agree exactly"),
        Some(x) => println!("FIRST MISMATCH at x = {x}"),
    }

    // The same check at k = 4 exercises deeper divisor tables.
    let quad = SymmetryDecomposition::new(4, 64, 2)?;
    println!(
        "k = 4, N = 64, h = 2: threshold t = {}, full-range check -> {:?}",
        quad.params().threshold(),
        quad.verify_full_range()?
    );
    Ok(())
}
