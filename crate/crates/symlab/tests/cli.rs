//! End-to-end tests of the compiled binary: exit codes, file outputs,
//! and rerun determinism.

use std::path::Path;
use std::process::{Command, Output};

use symlab::report::{IntegralReport, ReportValue};

fn symlab(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symlab"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn assert_code(output: &Output, expected: i32) {
    assert_eq!(
        output.status.code(),
        Some(expected),
        "stdout: {}\nstderr: {}",
        String::from_utf8_lossy(&output.stdout),
        String::from_utf8_lossy(&output.stderr)
    );
}

#[test]
fn sieve_and_integral_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let out = symlab(
        &["sieve", "--kind", "dk", "--k", "2", "--limit", "140", "--out", "d2.csv"],
        dir.path(),
    );
    assert_code(&out, 0);

    // Symmetry integral of d_2 ...
    let out = symlab(
        &[
            "integral", "--f", "dk", "--k", "2", "--n", "64", "--h", "3", "--mode", "discrete",
            "--out", "sym.json",
        ],
        dir.path(),
    );
    assert_code(&out, 0);
    let sym = IntegralReport::read_json(&dir.path().join("sym.json")).unwrap();
    assert_eq!(sym.kind, "symmetry");

    // ... equals the mixed integral of d_2 with itself (loaded from the
    // sieved CSV), pairing the two independent input paths.
    let out = symlab(
        &[
            "integral", "--f", "dk", "--k", "2", "--n", "64", "--h", "3", "--mode", "discrete",
            "--mixed-with", "d2.csv", "--out", "mixed.json",
        ],
        dir.path(),
    );
    assert_code(&out, 0);
    let mixed = IntegralReport::read_json(&dir.path().join("mixed.json")).unwrap();
    assert_eq!(mixed.kind, "mixed");
    assert_eq!(mixed.value, sym.value);

    // Selberg integral against the fitted model; mode-independent.
    let out = symlab(
        &[
            "integral", "--f", "dk", "--k", "2", "--n", "64", "--h", "3", "--mode", "continuous",
            "--selberg", "--model", "fit", "--out", "sel.json",
        ],
        dir.path(),
    );
    assert_code(&out, 0);
    let selberg = IntegralReport::read_json(&dir.path().join("sel.json")).unwrap();
    assert_eq!(selberg.kind, "selberg");
    assert!(selberg.value.as_exact().is_some());
}

#[test]
fn weights_route_and_sieve_model() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("g.csv"),
        "q,numerator,denominator\n1,1,1\n2,1,1\n3,1,1\n",
    )
    .unwrap();
    let out = symlab(
        &[
            "integral", "--f", "weights:g.csv", "--n", "50", "--h", "2", "--mode", "continuous",
            "--selberg", "--model", "sieve", "--out", "sel.json",
        ],
        dir.path(),
    );
    assert_code(&out, 0);
    let report = IntegralReport::read_json(&dir.path().join("sel.json")).unwrap();
    assert_eq!(report.kind, "selberg");
    assert_eq!(report.f_label, "g*1");

    // model `sieve` without a weights integrand is a config violation.
    let out = symlab(
        &[
            "integral", "--f", "dk", "--n", "50", "--h", "2", "--mode", "continuous", "--selberg",
            "--model", "sieve", "--out", "x.json",
        ],
        dir.path(),
    );
    assert_code(&out, 2);
}

#[test]
fn identity_survey_and_lemma_check() {
    let dir = tempfile::tempdir().unwrap();
    let out = symlab(
        &["identity-survey", "--qmax", "30", "--hmax", "30", "--out", "census.json"],
        dir.path(),
    );
    assert_code(&out, 0);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("dashed mismatches 0"), "{stdout}");
    let census = IntegralReport::read_json(&dir.path().join("census.json")).unwrap();
    assert_eq!(census.term("pattern_confirmed"), Some(&ReportValue::text("true")));

    let out = symlab(
        &[
            "lemma-check", "--n", "2000", "--h", "5", "--d", "8", "--q", "40", "--out",
            "lemma.json",
        ],
        dir.path(),
    );
    assert_code(&out, 0);
    let lemma = IntegralReport::read_json(&dir.path().join("lemma.json")).unwrap();
    assert_eq!(lemma.kind, "lemma");
    assert!(lemma.term("theorem_lower_bound").is_some());
    assert_eq!(lemma.term("dashed"), Some(&ReportValue::text("true")));

    let out = symlab(
        &[
            "lemma-check", "--n", "2000", "--h", "5", "--d", "8", "--q", "40", "--undashed",
            "--out", "lemma_u.json",
        ],
        dir.path(),
    );
    assert_code(&out, 0);
    let lemma_u = IntegralReport::read_json(&dir.path().join("lemma_u.json")).unwrap();
    assert_eq!(lemma_u.term("dashed"), Some(&ReportValue::text("false")));
}

#[test]
fn exit_codes_cover_the_three_failure_classes() {
    let dir = tempfile::tempdir().unwrap();

    // Domain violation (h >= N): exit 2.
    let out = symlab(
        &[
            "integral", "--f", "dk", "--n", "10", "--h", "10", "--mode", "discrete", "--out",
            "x.json",
        ],
        dir.path(),
    );
    assert_code(&out, 2);

    // Unknown mode: exit 2.
    let out = symlab(
        &[
            "integral", "--f", "dk", "--n", "20", "--h", "2", "--mode", "sideways", "--out",
            "x.json",
        ],
        dir.path(),
    );
    assert_code(&out, 2);

    // Usage error (missing required flag): clap exits 2.
    let out = symlab(&["integral", "--f", "dk"], dir.path());
    assert_code(&out, 2);

    // Malformed input file: exit 1.
    std::fs::write(dir.path().join("broken.csv"), "not,a,table\n").unwrap();
    let out = symlab(
        &[
            "integral", "--f", "dk", "--n", "20", "--h", "2", "--mode", "discrete",
            "--mixed-with", "broken.csv", "--out", "x.json",
        ],
        dir.path(),
    );
    assert_code(&out, 1);

    // Unwritable output path: exit 1.
    let out = symlab(
        &[
            "integral", "--f", "dk", "--n", "20", "--h", "2", "--mode", "discrete", "--out",
            "missing_dir/x.json",
        ],
        dir.path(),
    );
    assert_code(&out, 1);
}

#[test]
fn scan_rejects_bad_config_with_named_inequality() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("bad.cfg"),
        "kind = lemma_audit\ntheta = 1/8\ndelta = 1/2\nlambda = 1/4\nn_grid = 2048\noutput_path = out.csv\n",
    )
    .unwrap();
    let out = symlab(&["scan", "--config", "bad.cfg"], dir.path());
    assert_code(&out, 2);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("θ<δ<λ"), "stderr must name the inequality: {stderr}");
    assert!(!dir.path().join("out.csv").exists(), "no output on rejected config");
}

#[test]
fn growth_scan_rerun_is_deterministic_up_to_runtime() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("growth.cfg"),
        "kind = growth\nk = 3\ntheta = 1/4\nn_grid = 4096, 8192\noutput_path = growth.csv\nseed = 3\n",
    )
    .unwrap();

    let mask_runtime = |text: &str| -> String {
        text.lines()
            .map(|line| {
                match line.rsplit_once(',') {
                    Some((head, _)) if !line.starts_with('k') => format!("{head},MASKED"),
                    _ => line.to_string(),
                }
            })
            .collect::<Vec<_>>()
            .join("\n")
    };

    let out = symlab(&["scan", "--config", "growth.cfg"], dir.path());
    assert_code(&out, 0);
    let first = std::fs::read_to_string(dir.path().join("growth.csv")).unwrap();
    let out = symlab(&["scan", "--config", "growth.cfg"], dir.path());
    assert_code(&out, 0);
    let second = std::fs::read_to_string(dir.path().join("growth.csv")).unwrap();
    assert_eq!(mask_runtime(&first), mask_runtime(&second));
    assert_eq!(first.lines().count(), 3);
}

#[test]
fn mobius_sieve_csv_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out = symlab(
        &["sieve", "--kind", "mobius", "--limit", "50", "--out", "mu.csv"],
        dir.path(),
    );
    assert_code(&out, 0);
    let text = std::fs::read_to_string(dir.path().join("mu.csv")).unwrap();
    assert!(text.starts_with("n,value\n1,1\n2,-1\n3,-1\n4,0\n"));
}
