//! Growth of the normalised symmetry and Selberg integrals of d_k along a
//! doubling N-grid at window width h = floor(N^theta): the ratios
//! rho_I = I / (N h (log N)^{k+1}) and rho_J likewise are computed exactly
//! and printed, first through the library call, then through the scan
//! runner that the `scan` subcommand wraps.
//!
//! Run with: cargo run --release --example growth_scan

use symlab::dk::corollary_growth_ratio;
use symlab::experiments::{run_scan, ScanConfig};
use symlab::rational::rat;

fn main() -> symlab::Result<()> {
    let k = 3u32;
    let theta = rat(1, 4);

    println!("direct growth points for d_{k} at theta = 1/4");
    println!("{:>8} {:>4} {:>12} {:>12}", "N", "h", "rho_I", "rho_J");
    for exp in 10..=14 {
        let n = 1u64 << exp;
        let point = corollary_growth_ratio(k, &theta, n)?;
        println!(
            "{:>8} {:>4} {:>12.6} {:>12.6}",
            point.n, point.h, point.rho_i, point.rho_j
        );
    }

    // The same sweep through the scan runner: a flat key=value config
    // drives the grid and lands in a CSV with exact I_dk values.
    let out = std::env::temp_dir().join("symlab_growth_example.csv");
    let config_text = format!(
        "kind=growth\nk=3\ntheta=1/4\nn_grid=1024,2048,4096\noutput_path={}\n",
        out.display()
    );
    let config = ScanConfig::parse(&config_text)?;
    let written = run_scan(&config)?;
    println!("\nscan runner wrote {}:", written.display());
    print!("{}", std::fs::read_to_string(&written)?);
    std::fs::remove_file(&written).ok();
    Ok(())
}
