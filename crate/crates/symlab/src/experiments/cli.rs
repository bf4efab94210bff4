//! Command-line front end: five subcommands covering tabulation,
//! integral evaluation, the identity census, the lemma audit, and
//! configured scans.
//!
//! Exit codes: 0 on success; 2 on configuration/usage violations
//! (including domain preconditions); 1 on computation failures
//! (overflow, I/O, malformed files).

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::arith::{convolve_with_unit, sieve_divisor_k, sieve_mobius, FunctionTable, SieveWeights};
use crate::error::{Error, Result};
use crate::integrals::{
    fit_log_polynomial, lemma_decomposition, mixed_symmetry_integral, selberg_integral,
    symmetry_integral, theorem_lower_bound, IntegralMode, MeanValueModel,
};
use crate::report::ReportValue;

use super::config::ScanConfig;
use super::scan::run_scan;
use super::survey::run_identity_survey;

#[derive(Parser)]
#[command(
    name = "symlab",
    version,
    about = "Exact symmetry, Selberg, and spectral integrals of arithmetic functions in short intervals"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate an arithmetic function up to a limit and write it as CSV.
    Sieve {
        /// Function family to tabulate.
        #[arg(long, value_enum)]
        kind: SieveKind,
        /// Order k of the k-fold divisor function (used by --kind dk).
        #[arg(long, default_value_t = 2)]
        k: u32,
        /// Tabulation limit (inclusive).
        #[arg(long)]
        limit: u64,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Evaluate a symmetry, mixed, or Selberg integral and write the report as JSON.
    Integral {
        /// Integrand: `dk` for the k-fold divisor function, or
        /// `weights:PATH` for g*1 with g loaded from a weights CSV.
        #[arg(long)]
        f: String,
        /// Order k (selects d_k and the fitted-model degree k-1).
        #[arg(long, default_value_t = 2)]
        k: u32,
        /// Left endpoint N of the range x ~ N (x runs over [N, 2N)).
        #[arg(long)]
        n: u64,
        /// Window half-width h.
        #[arg(long)]
        h: u64,
        /// Evaluation mode: `discrete` or `continuous`. The Selberg
        /// integral is mode-independent; the flag is accepted and ignored there.
        #[arg(long)]
        mode: String,
        /// Second integrand (a function-table CSV) for the mixed integral.
        #[arg(long)]
        mixed_with: Option<PathBuf>,
        /// Compute the Selberg integral instead of the symmetry integral.
        #[arg(long)]
        selberg: bool,
        /// Mean-value model for --selberg: `sieve`, `window`, or `fit`.
        #[arg(long)]
        model: Option<String>,
        /// Output JSON path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Census of the power-sum identity over a (q, h) box; writes a JSON summary.
    IdentitySurvey {
        /// Largest modulus q (inclusive, from 2).
        #[arg(long)]
        qmax: u64,
        /// Largest width h (inclusive, from 1).
        #[arg(long)]
        hmax: u64,
        /// Output JSON path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Diagonal/off-diagonal audit of the bilinear lemma with unit weights.
    LemmaCheck {
        /// Left endpoint N of the range.
        #[arg(long)]
        n: u64,
        /// Window half-width h.
        #[arg(long)]
        h: u64,
        /// Auxiliary level D (g1 ranges over [1, D]).
        #[arg(long)]
        d: u64,
        /// Level Q (g ranges over [1, Q]).
        #[arg(long)]
        q: u64,
        /// Use the undashed window convention (default: dashed).
        #[arg(long)]
        undashed: bool,
        /// Output JSON path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a configured scan (growth, identity_survey, lemma_audit, connection_audit).
    Scan {
        /// Flat key = value configuration file.
        #[arg(long)]
        config: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SieveKind {
    /// Möbius function.
    Mobius,
    /// k-fold divisor function.
    Dk,
}

/// Parses the process arguments and runs the selected subcommand.
pub fn run() -> Result<()> {
    let cli = Cli::parse();
    dispatch(cli)
}

/// Runs a command parsed from an explicit argument list (used by tests).
pub fn run_from<I, T>(args: I) -> Result<()>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| Error::Config(e.to_string()))?;
    dispatch(cli)
}

fn dispatch(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Sieve { kind, k, limit, out } => cmd_sieve(kind, k, limit, &out),
        Command::Integral {
            f,
            k,
            n,
            h,
            mode,
            mixed_with,
            selberg,
            model,
            out,
        } => cmd_integral(&f, k, n, h, &mode, mixed_with.as_deref(), selberg, model.as_deref(), &out),
        Command::IdentitySurvey { qmax, hmax, out } => cmd_identity_survey(qmax, hmax, &out),
        Command::LemmaCheck { n, h, d, q, undashed, out } => {
            cmd_lemma_check(n, h, d, q, !undashed, &out)
        }
        Command::Scan { config } => cmd_scan(&config),
    }
}

fn cmd_sieve(kind: SieveKind, k: u32, limit: u64, out: &Path) -> Result<()> {
    let table = match kind {
        SieveKind::Mobius => sieve_mobius(limit)?,
        SieveKind::Dk => sieve_divisor_k(k, limit)?,
    };
    table.save_csv(out)?;
    println!("wrote {} values of {} to {}", table.limit(), table.label(), out.display());
    Ok(())
}

/// Resolves the `--f` integrand: the divisor table `d_k` or a sieve
/// weight file convolved with the constant function 1.
fn resolve_integrand(spec: &str, k: u32, limit: u64) -> Result<(FunctionTable, Option<SieveWeights>)> {
    if spec == "dk" {
        return Ok((sieve_divisor_k(k, limit)?, None));
    }
    if let Some(path) = spec.strip_prefix("weights:") {
        let path = Path::new(path);
        let label = path
            .file_stem()
            .and_then(|s| s.to_str())
            .unwrap_or("weights")
            .to_string();
        let weights = SieveWeights::load_csv(label, path)?;
        let table = convolve_with_unit(&weights, limit)?;
        return Ok((table, Some(weights)));
    }
    Err(Error::Config(format!(
        "--f must be `dk` or `weights:PATH`, got {spec:?}"
    )))
}

#[allow(clippy::too_many_arguments)]
fn cmd_integral(
    f_spec: &str,
    k: u32,
    n: u64,
    h: u64,
    mode_str: &str,
    mixed_with: Option<&Path>,
    selberg: bool,
    model: Option<&str>,
    out: &Path,
) -> Result<()> {
    let mode: IntegralMode = mode_str.parse()?;
    if selberg && mixed_with.is_some() {
        return Err(Error::Config(
            "--selberg and --mixed-with cannot be combined".into(),
        ));
    }
    if model.is_some() && !selberg {
        return Err(Error::Config("--model requires --selberg".into()));
    }
    let limit = 2 * n + h;
    let (table, weights) = resolve_integrand(f_spec, k, limit)?;

    let report = if selberg {
        let model_name =
            model.ok_or_else(|| Error::Config("--selberg requires --model".into()))?;
        let model = match model_name {
            "sieve" => {
                let weights = weights.ok_or_else(|| {
                    Error::Config("model `sieve` requires --f weights:PATH".into())
                })?;
                MeanValueModel::SieveMainTerm { weights }
            }
            "window" => MeanValueModel::WindowExact,
            "fit" => {
                let degree = k.saturating_sub(1) as usize;
                let coefficients = fit_log_polynomial(&table, n, h, degree)?;
                MeanValueModel::FittedLogPolynomial { coefficients }
            }
            other => {
                return Err(Error::Config(format!(
                    "unknown model {other:?}; expected sieve, window, or fit"
                )))
            }
        };
        selberg_integral(&table, n, h, &model)?
    } else if let Some(path) = mixed_with {
        let label = path
            .file_stem()
            .and_then(|s| s.to_str())
            .unwrap_or("f1")
            .to_string();
        let f1 = FunctionTable::load_csv(label, path)?;
        mixed_symmetry_integral(&table, &f1, n, h, mode)?
    } else {
        symmetry_integral(&table, n, h, mode)?
    };

    report.write_json(out)?;
    println!("{} = {}", report.kind, report.value.render());
    println!("wrote report to {}", out.display());
    Ok(())
}

fn cmd_identity_survey(qmax: u64, hmax: u64, out: &Path) -> Result<()> {
    let census = run_identity_survey(qmax, hmax)?;
    census.to_report().write_json(out)?;
    println!(
        "checked {} cells: dashed mismatches {}, undashed mismatches {}, pattern confirmed: {}",
        census.total, census.dashed_mismatches, census.undashed_mismatches, census.pattern_confirmed
    );
    println!("wrote report to {}", out.display());
    Ok(())
}

fn cmd_lemma_check(n: u64, h: u64, d_cap: u64, q_cap: u64, dashed: bool, out: &Path) -> Result<()> {
    let g = SieveWeights::ones(format!("ones_{q_cap}"), q_cap)?;
    let g1 = SieveWeights::ones(format!("ones_{d_cap}"), d_cap)?;
    let mut report = lemma_decomposition(&g, &g1, n, h, d_cap, q_cap, dashed)?;
    let bound = theorem_lower_bound(&g, &g1, n, h, d_cap, q_cap)?;
    report = report.with_term("theorem_lower_bound", ReportValue::exact(bound));
    report.write_json(out)?;
    let measured = report
        .term("measured_constant")
        .and_then(ReportValue::as_real)
        .unwrap_or(f64::NAN);
    println!("off-diagonal / envelope = {measured:.6}");
    println!("wrote report to {}", out.display());
    Ok(())
}

fn cmd_scan(config_path: &Path) -> Result<()> {
    let config = ScanConfig::load(config_path)?;
    let written = run_scan(&config)?;
    println!("wrote {} scan to {}", config.kind.as_str(), written.display());
    Ok(())
}
