//! Flat `key = value` configuration files for scan runs.
//!
//! Exact rationals are written `num/den` so that `h = floor(N^theta)`
//! is reproducible across platforms through integer root/power
//! comparisons rather than floating exponentiation. Every inequality a
//! kind requires is checked here, before any computation starts, and a
//! violation names the inequality it breaks.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::rational::{floor_rational_power, parse_rational, rat, Rational};

/// What a scan run computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanKind {
    /// Growth of the symmetry/Selberg integrals of `d_k` along an N grid.
    Growth,
    /// Exhaustive power-sum identity census over `(q, h)` boxes.
    IdentitySurvey,
    /// Diagonal-versus-off-diagonal audit of the bilinear lemma along an
    /// N grid with `D = floor(N^delta)`, `Q = floor(N^lambda)`.
    LemmaAudit,
    /// Symmetry-versus-Selberg connection audit along an N grid.
    ConnectionAudit,
}

impl ScanKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ScanKind::Growth => "growth",
            ScanKind::IdentitySurvey => "identity_survey",
            ScanKind::LemmaAudit => "lemma_audit",
            ScanKind::ConnectionAudit => "connection_audit",
        }
    }

    fn parse(s: &str) -> Result<Self> {
        match s {
            "growth" => Ok(ScanKind::Growth),
            "identity_survey" => Ok(ScanKind::IdentitySurvey),
            "lemma_audit" => Ok(ScanKind::LemmaAudit),
            "connection_audit" => Ok(ScanKind::ConnectionAudit),
            other => Err(Error::Config(format!(
                "unknown kind {other:?}; expected growth, identity_survey, lemma_audit, or connection_audit"
            ))),
        }
    }
}

/// A parsed and fully validated scan configuration.
#[derive(Debug, Clone)]
pub struct ScanConfig {
    pub kind: ScanKind,
    pub k: u32,
    pub theta: Option<Rational>,
    pub delta: Option<Rational>,
    pub lambda: Option<Rational>,
    pub n_grid: Vec<u64>,
    pub q_max: u64,
    pub h_max: u64,
    pub output_path: PathBuf,
    pub seed: u64,
}

/// One derived grid point of a lemma/connection/growth scan.
#[derive(Debug, Clone, Copy)]
pub struct GridPoint {
    pub n: u64,
    pub h: u64,
    /// `floor(N^delta)`; 0 when the kind has no auxiliary level.
    pub d_cap: u64,
    /// `floor(N^lambda)`; 0 when the kind has no level.
    pub q_cap: u64,
}

impl ScanConfig {
    /// Parses and validates the flat `key = value` text format. Lines
    /// starting with `#` and blank lines are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut raw: BTreeMap<String, String> = BTreeMap::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Config(format!("line {}: expected `key = value`, got {line:?}", idx + 1))
            })?;
            let key = key.trim().to_string();
            let value = value.trim().to_string();
            if raw.insert(key.clone(), value).is_some() {
                return Err(Error::Config(format!("duplicate key {key:?}")));
            }
        }
        Self::from_pairs(&raw)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    fn from_pairs(raw: &BTreeMap<String, String>) -> Result<Self> {
        let kind = ScanKind::parse(
            raw.get("kind")
                .ok_or_else(|| Error::Config("missing required key `kind`".into()))?,
        )?;

        let allowed: &[&str] = match kind {
            ScanKind::Growth => &["kind", "output_path", "seed", "k", "theta", "n_grid"],
            ScanKind::IdentitySurvey => &["kind", "output_path", "seed", "q_max", "h_max"],
            ScanKind::LemmaAudit => {
                &["kind", "output_path", "seed", "theta", "delta", "lambda", "n_grid"]
            }
            ScanKind::ConnectionAudit => &["kind", "output_path", "seed", "k", "theta", "n_grid"],
        };
        for key in raw.keys() {
            if !allowed.contains(&key.as_str()) {
                return Err(Error::Config(format!(
                    "key {key:?} is not used by kind {}",
                    kind.as_str()
                )));
            }
        }

        let get = |key: &str| raw.get(key).map(String::as_str);
        let require = |key: &str| {
            get(key).ok_or_else(|| {
                Error::Config(format!("kind {} requires key {key:?}", kind.as_str()))
            })
        };
        let parse_u64 = |key: &str, value: &str| {
            value
                .parse::<u64>()
                .map_err(|_| Error::Config(format!("key {key:?}: bad integer {value:?}")))
        };
        let parse_ratio = |key: &str, value: &str| {
            parse_rational(value)
                .map_err(|e| Error::Config(format!("key {key:?}: {e}")))
        };

        let output_path = PathBuf::from(require("output_path")?);
        let seed = match get("seed") {
            Some(v) => parse_u64("seed", v)?,
            None => 0,
        };
        let k = match get("k") {
            Some(v) => {
                let k = parse_u64("k", v)?;
                u32::try_from(k).map_err(|_| Error::Config(format!("k = {k} too large")))?
            }
            None => 2,
        };
        let theta = get("theta").map(|v| parse_ratio("theta", v)).transpose()?;
        let delta = get("delta").map(|v| parse_ratio("delta", v)).transpose()?;
        let lambda = get("lambda").map(|v| parse_ratio("lambda", v)).transpose()?;
        let n_grid = match get("n_grid") {
            Some(v) => v
                .split(',')
                .map(|part| parse_u64("n_grid", part.trim()))
                .collect::<Result<Vec<u64>>>()?,
            None => Vec::new(),
        };
        let q_max = match get("q_max") {
            Some(v) => parse_u64("q_max", v)?,
            None => 0,
        };
        let h_max = match get("h_max") {
            Some(v) => parse_u64("h_max", v)?,
            None => 0,
        };

        let config = ScanConfig {
            kind,
            k,
            theta,
            delta,
            lambda,
            n_grid,
            q_max,
            h_max,
            output_path,
            seed,
        };
        config.validate()?;
        Ok(config)
    }

    /// Checks every inequality the kind requires; the error message names
    /// the violated inequality.
    pub fn validate(&self) -> Result<()> {
        match self.kind {
            ScanKind::Growth => {
                if self.k < 3 {
                    return Err(Error::Config(format!("growth requires k≥3, got k = {}", self.k)));
                }
                let theta = self.required_ratio("theta", self.theta.as_ref())?;
                check_width(theta)?;
                let one_over_k = Rational::new(1.into(), self.k.into());
                if *theta >= one_over_k {
                    return Err(Error::Config(format!(
                        "violated θ<1/k: theta = {theta}, k = {}",
                        self.k
                    )));
                }
                self.require_grid()?;
                for &n in &self.n_grid {
                    let h = floor_rational_power(n, theta)?;
                    if h < 2 {
                        return Err(Error::Config(format!(
                            "violated floor(N^θ)≥2 at N = {n}: h = {h}"
                        )));
                    }
                }
            }
            ScanKind::IdentitySurvey => {
                if self.q_max < 2 || self.h_max < 2 {
                    return Err(Error::Config(format!(
                        "violated q_max≥2 and h_max≥2: q_max = {}, h_max = {}",
                        self.q_max, self.h_max
                    )));
                }
            }
            ScanKind::LemmaAudit => {
                let theta = self.required_ratio("theta", self.theta.as_ref())?;
                let delta = self.required_ratio("delta", self.delta.as_ref())?;
                let lambda = self.required_ratio("lambda", self.lambda.as_ref())?;
                check_width(theta)?;
                if !(theta < delta && delta < lambda) {
                    return Err(Error::Config(format!(
                        "violated θ<δ<λ: theta = {theta}, delta = {delta}, lambda = {lambda}"
                    )));
                }
                if delta + lambda >= rat(1, 1) {
                    return Err(Error::Config(format!(
                        "violated δ+λ<1: delta = {delta}, lambda = {lambda}"
                    )));
                }
                self.require_grid()?;
                for &n in &self.n_grid {
                    let point = self.grid_point(n)?;
                    if point.h < 1 {
                        return Err(Error::Config(format!(
                            "violated floor(N^θ)≥1 at N = {n}"
                        )));
                    }
                    if point.d_cap < 2 {
                        return Err(Error::Config(format!(
                            "violated floor(N^δ)≥2 at N = {n}: D = {}",
                            point.d_cap
                        )));
                    }
                }
            }
            ScanKind::ConnectionAudit => {
                if self.k < 2 {
                    return Err(Error::Config(format!(
                        "connection_audit requires k≥2, got k = {}",
                        self.k
                    )));
                }
                let theta = self.required_ratio("theta", self.theta.as_ref())?;
                check_width(theta)?;
                self.require_grid()?;
                for &n in &self.n_grid {
                    let h = floor_rational_power(n, theta)?;
                    if h < 1 {
                        return Err(Error::Config(format!(
                            "violated floor(N^θ)≥1 at N = {n}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn required_ratio<'a>(&self, name: &str, value: Option<&'a Rational>) -> Result<&'a Rational> {
        value.ok_or_else(|| {
            Error::Config(format!("kind {} requires key {name:?}", self.kind.as_str()))
        })
    }

    fn require_grid(&self) -> Result<()> {
        if self.n_grid.is_empty() {
            return Err(Error::Config(format!(
                "kind {} requires a non-empty n_grid",
                self.kind.as_str()
            )));
        }
        Ok(())
    }

    /// Derived quantities at one grid point: `h = floor(N^theta)`,
    /// `D = floor(N^delta)`, `Q = floor(N^lambda)` where the exponents
    /// apply to this kind.
    pub fn grid_point(&self, n: u64) -> Result<GridPoint> {
        let power = |e: Option<&Rational>| -> Result<u64> {
            match e {
                Some(r) => floor_rational_power(n, r),
                None => Ok(0),
            }
        };
        Ok(GridPoint {
            n,
            h: power(self.theta.as_ref())?,
            d_cap: power(self.delta.as_ref())?,
            q_cap: power(self.lambda.as_ref())?,
        })
    }
}

fn check_width(theta: &Rational) -> Result<()> {
    use num_traits::Signed;
    if !theta.is_positive() || *theta >= rat(1, 2) {
        return Err(Error::Config(format!("violated 0<θ<1/2: theta = {theta}")));
    }
    Ok(())
}
