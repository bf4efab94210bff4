//! The integral layer: symmetry and mixed integrals in both evaluation
//! modes, Selberg integrals against three mean-value models, and the
//! audit connecting the two quantities.
//!
//! Run with: cargo run --example integrals

use symlab::arith::{sieve_divisor_k, SieveWeights};
use symlab::integrals::{
    connection_audit, fit_log_polynomial, mixed_symmetry_integral, selberg_integral,
    symmetry_integral, IntegralMode, MeanValueModel,
};
use symlab::rational::rat_int;

fn main() -> symlab::Result<()> {
    let (n, h) = (512u64, 6u64);
    let d2 = sieve_divisor_k(2, 2 * n + h)?;
    let d3 = sieve_divisor_k(3, 2 * n + h)?;

    // Symmetry integrals of d_2: discrete sum and continuous integral.
    for mode in [IntegralMode::Discrete, IntegralMode::Continuous] {
        let report = symmetry_integral(&d2, n, h, mode)?;
        println!("I_{{d_2}}({n}, {h}) {} = {}", mode.as_str(), report.value.render());
    }

    // The mixed integral is the bilinear form pairing two integrands.
    let mixed = mixed_symmetry_integral(&d2, &d3, n, h, IntegralMode::Continuous)?;
    println!("I_{{d_2, d_3}}({n}, {h}) continuous = {}", mixed.value.render());

    // I_{f - f1} = I_f - 2 I_{f,f1} + I_{f1}, exactly.
    let diff = d2.difference(&d3)?;
    let lhs = symmetry_integral(&diff, n, h, IntegralMode::Continuous)?
        .value
        .as_exact()
        .unwrap()
        .clone();
    let i_f = symmetry_integral(&d2, n, h, IntegralMode::Continuous)?;
    let i_f1 = symmetry_integral(&d3, n, h, IntegralMode::Continuous)?;
    let rhs = i_f.value.as_exact().unwrap()
        - rat_int(2) * mixed.value.as_exact().unwrap()
        + i_f1.value.as_exact().unwrap();
    println!("bilinear identity holds exactly: {}", lhs == rhs);

    // Selberg integral of g * 1 against its three mean-value models.
    let g = SieveWeights::ones("g", 24)?;
    let f = symlab::arith::convolve_with_unit(&g, 2 * n + h)?;
    let models = [
        MeanValueModel::SieveMainTerm { weights: g },
        MeanValueModel::WindowExact,
        MeanValueModel::FittedLogPolynomial {
            coefficients: fit_log_polynomial(&f, n, h, 1)?,
        },
    ];
    for model in &models {
        let report = selberg_integral(&f, n, h, model)?;
        println!(
            "J({n}, {h}) against {:<28} = {:.6e}",
            model.label(),
            symlab::rational::to_f64(report.value.as_exact().unwrap())
        );
    }

    // The connection audit: I against J + mean-variation + tail.
    let audit = connection_audit(&d2, n, h, &MeanValueModel::WindowExact)?;
    println!(
        "connection: I = {}, J = {:.6e}, ratio I/(J + mean_diff + tail) = {}",
        audit.value.render(),
        symlab::rational::to_f64(audit.term("selberg").unwrap().as_exact().unwrap()),
        audit.term("ratio").unwrap().render()
    );
    Ok(())
}
