//! Property suite: every exact formula in the crate is replayed against
//! an independent brute-force oracle on randomized inputs.

use num_complex::Complex64;
use proptest::prelude::*;

use symlab::arith::FunctionTable;
use symlab::integrals::{
    mixed_symmetry_integral, selberg_integral, symmetry_integral, symmetry_sum, IntegralMode,
    MeanValueModel,
};
use symlab::rational::{nearest_integer_distance, to_f64, Rational};
use symlab::report::{reports_from_csv, reports_to_csv, IntegralReport, ReportValue};
use symlab::spectral::{
    bounded_geometric_sum, chi_window, coefficient_power_sum, window_fourier_coefficient,
    FareyPair,
};

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

/// Definitional window character: signed count of multiples of q.
fn chi_oracle(q: u64, h: u64, x: u64, dashed: bool) -> i64 {
    let mut total = 0i64;
    for n in (x - h)..=(x + h) {
        if n % q != 0 {
            continue;
        }
        let r = n as i64 - x as i64;
        total += if dashed {
            if r == 0 {
                -1
            } else if r == -(h as i64) {
                0
            } else {
                r.signum()
            }
        } else {
            r.signum()
        };
    }
    total
}

/// Signed window sum at a real point, for quadrature cross-checks.
fn signed_sum_real(f: &FunctionTable, x: f64, h: u64) -> f64 {
    let lo = (x - h as f64).ceil() as u64;
    let hi = (x + h as f64).floor() as u64;
    let mut total = 0.0;
    for n in lo..=hi {
        total += (n as f64 - x).signum() * f.value(n) as f64;
    }
    total
}

fn table_strategy(limit: usize) -> impl Strategy<Value = FunctionTable> {
    prop::collection::vec(-8i64..=8, limit).prop_map(|values| {
        FunctionTable::from_values("random", values).expect("non-empty values")
    })
}

proptest! {
    #![proptest_config(config(256))]

    #[test]
    fn chi_matches_definitional_oracle(
        q in 1u64..=60,
        h in 1u64..=80,
        offset in 0u64..=200,
        dashed in any::<bool>(),
    ) {
        let x = h + 1 + offset;
        let fast = chi_window(q, h, x, dashed).unwrap();
        prop_assert_eq!(fast, chi_oracle(q, h, x, dashed));
    }

    #[test]
    fn power_sum_matches_complex_modulus_sum(
        q in 1u64..=40,
        h in 1u64..=60,
        dashed in any::<bool>(),
    ) {
        let sum = coefficient_power_sum(q, h, dashed).unwrap();
        let mut complex_sum = 0.0;
        for j in 0..q {
            complex_sum += window_fourier_coefficient(q, h, j, dashed).norm_sqr();
        }
        prop_assert!((to_f64(&sum.exact) - complex_sum).abs() < 1e-9);
    }

    #[test]
    fn coefficient_scaling_relation(
        q in 1u64..=24,
        j in 0u64..24,
        d in 1u64..=6,
        h in 1u64..=40,
        dashed in any::<bool>(),
    ) {
        let j = j % q;
        let base = window_fourier_coefficient(q, h, j, dashed);
        let scaled = window_fourier_coefficient(q * d, h, j * d, dashed);
        let expected = base / d as f64;
        prop_assert!((scaled - expected).norm() < 1e-9);
    }

    #[test]
    fn farey_spacing_bound(j in 1u64..=40, ell in 1u64..=40, r in 1u64..=40, t in 1u64..=40) {
        prop_assume!(j <= ell && r <= t);
        if let Ok(pair) = FareyPair::new(j, ell, r, t) {
            prop_assert!(pair.spacing_holds());
            if !pair.is_diagonal() && pair.alpha() != Rational::from_integer(0.into()) {
                prop_assert!(nearest_integer_distance(&pair.alpha()) >= pair.min_spacing());
            }
        }
    }

    #[test]
    fn geometric_sum_matches_direct(num in -30i64..=30, den in 1i64..=24, n in 1u64..=120) {
        let alpha = Rational::new(num.into(), den.into());
        let closed = bounded_geometric_sum(&alpha, n);
        let a = to_f64(&alpha);
        let mut direct = Complex64::new(0.0, 0.0);
        for x in (n + 1)..=(2 * n) {
            let phase = 2.0 * std::f64::consts::PI * a * x as f64;
            direct += Complex64::new(phase.cos(), phase.sin());
        }
        prop_assert!((closed - direct).norm() < 1e-6 * (1.0 + direct.norm()));
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn symmetry_sum_matches_definition(
        f in table_strategy(160),
        x in 40u64..=70,
        h in 1u64..=10,
        dashed in any::<bool>(),
    ) {
        let fast = symmetry_sum(&f, x, h, dashed).unwrap();
        let mut slow = 0i128;
        for n in (x - h)..=(x + h) {
            let r = n as i64 - x as i64;
            let w = if dashed {
                if r == 0 { -1 } else if r == -(h as i64) { 0 } else { r.signum() }
            } else {
                r.signum()
            };
            slow += (w * f.value(n)) as i128;
        }
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn bilinear_identity_and_cauchy_schwarz(
        f in table_strategy(120),
        f1 in table_strategy(120),
        h in 1u64..=6,
        continuous in any::<bool>(),
    ) {
        let n = 36u64;
        let mode = if continuous { IntegralMode::Continuous } else { IntegralMode::Discrete };
        let i_f = symmetry_integral(&f, n, h, mode).unwrap().value.as_exact().unwrap().clone();
        let i_f1 = symmetry_integral(&f1, n, h, mode).unwrap().value.as_exact().unwrap().clone();
        let mixed = mixed_symmetry_integral(&f, &f1, n, h, mode).unwrap().value.as_exact().unwrap().clone();
        let diff = f.difference(&f1).unwrap();
        let i_diff = symmetry_integral(&diff, n, h, mode).unwrap().value.as_exact().unwrap().clone();
        let two = Rational::from_integer(2.into());
        prop_assert_eq!(i_diff, &i_f - &(two * &mixed) + &i_f1);
        prop_assert!(&mixed * &mixed <= &i_f * &i_f1);
    }

    #[test]
    fn continuous_integral_is_exact_quadrature(
        f in table_strategy(140),
        h in 1u64..=5,
    ) {
        let n = 40u64;
        let exact = symmetry_integral(&f, n, h, IntegralMode::Continuous).unwrap();
        let exact = to_f64(exact.value.as_exact().unwrap());
        // Midpoint rule is exact for a piecewise-constant integrand; the
        // sub-sampling guards the piecewise-constancy claim itself.
        let samples_per_interval = 4;
        let mut quad = 0.0;
        for m in n..2 * n {
            for j in 0..samples_per_interval {
                let x = m as f64 + (j as f64 + 0.5) / samples_per_interval as f64;
                let s = signed_sum_real(&f, x, h);
                quad += s * s / samples_per_interval as f64;
            }
        }
        let scale = exact.abs().max(1.0);
        prop_assert!((exact - quad).abs() <= 1e-6 * scale, "exact {exact} vs quadrature {quad}");
    }

    #[test]
    fn selberg_window_model_shift_invariant(
        f in table_strategy(100),
        c in -5i64..=5,
    ) {
        let n = 30u64;
        let h = 3u64;
        let shifted_values: Vec<i64> = f.values().iter().map(|v| v + c).collect();
        let shifted = FunctionTable::from_values("shifted", shifted_values).unwrap();
        let model = MeanValueModel::WindowExact;
        let base = selberg_integral(&f, n, h, &model).unwrap().value.as_exact().unwrap().clone();
        let moved = selberg_integral(&shifted, n, h, &model).unwrap().value.as_exact().unwrap().clone();
        prop_assert_eq!(base, moved);
    }
}

fn value_strategy() -> impl Strategy<Value = ReportValue> {
    prop_oneof![
        (-1000i64..=1000, 1i64..=999).prop_map(|(n, d)| {
            ReportValue::exact(Rational::new(n.into(), d.into()))
        }),
        (-1.0e6f64..1.0e6).prop_map(ReportValue::real),
        (-100000i64..=100000).prop_map(|v| ReportValue::int(v as i128)),
        "[a-z_][a-z0-9_]{0,12}".prop_map(ReportValue::text),
    ]
}

fn report_strategy() -> impl Strategy<Value = IntegralReport> {
    (
        prop_oneof![Just("symmetry"), Just("mixed"), Just("selberg"), Just("lemma")],
        1u64..=4096,
        1u64..=64,
        value_strategy(),
        prop::collection::btree_map("[a-z_]{1,10}", value_strategy(), 0..4),
        any::<bool>(),
    )
        .prop_map(|(kind, n, h, value, terms, with_mode)| {
            let mut report = IntegralReport::new(kind, n, h, "f_label", value);
            if with_mode {
                report = report.with_mode("continuous");
            }
            for (name, term) in terms {
                report = report.with_term(name, term);
            }
            report
        })
}

/// Real values survive a render/parse cycle to within the 15-digit
/// rendering precision; every other variant survives exactly.
fn values_close(a: &ReportValue, b: &ReportValue) -> bool {
    match (a, b) {
        (ReportValue::Real(x), ReportValue::Real(y)) => {
            (x - y).abs() <= 1e-13 * x.abs().max(1.0)
        }
        _ => a == b,
    }
}

fn reports_close(a: &IntegralReport, b: &IntegralReport) -> bool {
    a.kind == b.kind
        && a.mode == b.mode
        && a.n == b.n
        && a.h == b.h
        && a.f_label == b.f_label
        && a.f1_label == b.f1_label
        && values_close(&a.value, &b.value)
        && a.terms.len() == b.terms.len()
        && a.terms
            .iter()
            .zip(b.terms.iter())
            .all(|((ka, va), (kb, vb))| ka == kb && values_close(va, vb))
}

proptest! {
    #![proptest_config(config(128))]

    #[test]
    fn report_round_trips_json_and_csv(reports in prop::collection::vec(report_strategy(), 1..4)) {
        for report in &reports {
            let back = IntegralReport::from_json_str(&report.to_json_string()).unwrap();
            prop_assert!(reports_close(report, &back), "json: {report:?} vs {back:?}");
        }
        let csv = reports_to_csv(&reports).unwrap();
        let back = reports_from_csv(&csv).unwrap();
        prop_assert_eq!(back.len(), reports.len());
        for (report, parsed) in reports.iter().zip(&back) {
            prop_assert!(reports_close(report, parsed), "csv: {report:?} vs {parsed:?}");
        }
    }
}
