//! The spectral layer: window characters mod q, their Fourier
//! coefficients, exact power sums against the closed form 2||h/q||,
//! primitive (Ramanujan-filtered) power sums via two independent
//! routes, and the Farey spacing fact behind off-diagonal control.
//!
//! Run with: cargo run --example window_spectrum

use symlab::rational::{format_rational, Rational};
use symlab::spectral::{
    bounded_geometric_sum, chi_window, coefficient_power_sum, primitive_power_sum,
    reconstruct_chi, FareyPair, WindowSpectrum,
};

fn main() -> symlab::Result<()> {
    // chi_q(x): signed count of multiples of q in the window around x.
    let (q, h) = (6u64, 4u64);
    print!("chi_{q}(x), h = {h}, undashed, x = 10..21:");
    for x in 10..=21 {
        print!(" {}", chi_window(q, h, x, false)?);
    }
    println!();

    // Exact power sums versus the closed form 2||h/q||.
    for (q, h, dashed) in [(7u64, 3u64, true), (7, 3, false), (7, 5, false), (4, 2, true)] {
        let p = coefficient_power_sum(q, h, dashed)?;
        println!(
            "power sum q={q} h={h} {}: exact {} vs closed form {} -> {}",
            if dashed { "dashed  " } else { "undashed" },
            format_rational(&p.exact),
            format_rational(&p.closed_form),
            if p.matches() { "match" } else { "gap 2/q" }
        );
    }

    // The full spectrum object bundles coefficients and the power sum.
    let spectrum = WindowSpectrum::build(12, 5, true)?;
    println!(
        "|c_(j,12)| for j = 0..11, h = 5 dashed: {:?}",
        spectrum
            .coefficients
            .iter()
            .map(|c| (c.norm() * 1e4).round() / 1e4)
            .collect::<Vec<_>>()
    );

    // Primitive power sums: Ramanujan-row route == Moebius-inversion route.
    for ell in [4u64, 9, 12] {
        let p = primitive_power_sum(ell, 5, true)?;
        println!(
            "primitive sum at ell = {ell}: exact {} == moebius form {}",
            format_rational(&p.exact),
            format_rational(&p.moebius_form)
        );
    }

    // Reassembling chi from its primitive frequency blocks.
    let err = (10..=30)
        .map(|x| (reconstruct_chi(12, 5, x, true).unwrap().re - chi_window(12, 5, x, true).unwrap() as f64).abs())
        .fold(0.0f64, f64::max);
    println!("max reconstruction error for q = 12, h = 5: {err:.2e}");

    // Bounded geometric sums and Farey spacing, the off-diagonal tools.
    let alpha = Rational::new(1.into(), 5.into());
    println!(
        "|sum over N < x <= 2N of e(x/5)| at N = 1000: {:.6}",
        bounded_geometric_sum(&alpha, 1000).norm()
    );
    let pair = FareyPair::new(1, 5, 1, 7)?;
    println!(
        "Farey spacing 1/5 vs 1/7: distance to nearest integer {} >= 1/35 -> {}",
        format_rational(&symlab::rational::nearest_integer_distance(&pair.alpha())),
        pair.spacing_holds()
    );
    Ok(())
}
