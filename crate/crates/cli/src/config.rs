use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::ValueEnum;
use heisenberg::GridSpec;
use num_bigint::BigInt;
use num_rational::BigRational;
use quad_field::{classify, QuadraticIrrational};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const DEFAULT_SEED: u64 = 0xA17E;
pub const DEFAULT_SWEEP: &str = "1,eps^-1,eps,eps^2,eps^3,2,1/2";
pub const DEFAULT_GRADES: i64 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Pretty,
}

/// Settings as they appear in a config file or on the command line; every field optional.
#[derive(Debug, Clone, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Settings {
    pub theta: Option<String>,
    pub grid: Option<String>,
    pub tol: Option<f64>,
    pub q_sweep: Option<String>,
    pub grades: Option<i64>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub seed: Option<u64>,
}

impl Settings {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let s = std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&s).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
    }

    /// Fields set in `over` win.
    pub fn overlay(self, over: Settings) -> Settings {
        Settings {
            theta: over.theta.or(self.theta),
            grid: over.grid.or(self.grid),
            tol: over.tol.or(self.tol),
            q_sweep: over.q_sweep.or(self.q_sweep),
            grades: over.grades.or(self.grades),
            format: over.format.or(self.format),
            out: over.out.or(self.out),
            seed: over.seed.or(self.seed),
        }
    }
}

/// Validated settings.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub theta_spec: String,
    pub theta: QuadraticIrrational,
    /// `None` means the command's own default grid.
    pub grid: Option<GridSpec>,
    /// `None` means the command's own default tolerance.
    pub tol: Option<f64>,
    pub q_sweep: Vec<String>,
    pub grades: i64,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig::resolve(Settings::default()).expect("defaults are valid")
    }
}

impl RunConfig {
    pub fn resolve(s: Settings) -> Result<Self, CliError> {
        let theta_spec = s.theta.unwrap_or_else(|| "golden".into());
        let theta = parse_theta(&theta_spec)?;
        let grid = s.grid.as_deref().map(parse_grid).transpose()?;
        if let Some(t) = s.tol {
            if !(t > 0.0 && t.is_finite()) {
                return Err(CliError::Config(format!("tolerance must be positive, got {t}")));
            }
        }
        let grades = s.grades.unwrap_or(DEFAULT_GRADES);
        if !(1..=12).contains(&grades) {
            return Err(CliError::Config(format!("grade range must lie in 1..=12, got {grades}")));
        }
        let q_sweep: Vec<String> = s
            .q_sweep
            .as_deref()
            .unwrap_or(DEFAULT_SWEEP)
            .split(',')
            .map(|t| t.trim().to_string())
            .filter(|t| !t.is_empty())
            .collect();
        if q_sweep.is_empty() {
            return Err(CliError::Config("empty q-sweep".into()));
        }
        Ok(RunConfig {
            theta_spec,
            theta,
            grid,
            tol: s.tol,
            q_sweep,
            grades,
            format: s.format.unwrap_or_default(),
            out: s.out,
            seed: s.seed.unwrap_or(DEFAULT_SEED),
        })
    }
}

fn rational(s: &str) -> Result<BigRational, CliError> {
    BigRational::from_str(s.trim()).map_err(|_| CliError::Config(format!("not a rational number: {s:?}")))
}

/// `golden`, `sqrt2`, `1+sqrt3`, or `p,q,d` for `θ = p + q√d` with rational `p, q`.
pub fn parse_theta(s: &str) -> Result<QuadraticIrrational, CliError> {
    match s.trim() {
        "golden" => return Ok(QuadraticIrrational::golden()),
        "sqrt2" => return Ok(QuadraticIrrational::sqrt2()),
        "1+sqrt3" => return Ok(QuadraticIrrational::one_plus_sqrt3()),
        _ => {}
    }
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(CliError::Config(format!("theta must be p,q,d or a named value, got {s:?}")));
    }
    let d = BigInt::from_str(parts[2].trim()).map_err(|_| CliError::Config(format!("d must be an integer: {:?}", parts[2])))?;
    Ok(classify(&rational(parts[0])?, &rational(parts[1])?, &d)?)
}

/// `L,N,J`.
pub fn parse_grid(s: &str) -> Result<GridSpec, CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || CliError::Config(format!("grid must be L,N,J, got {s:?}"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let grid = GridSpec {
        l: parts[0].parse().map_err(|_| bad())?,
        n: parts[1].parse().map_err(|_| bad())?,
        j: parts[2].parse().map_err(|_| bad())?,
        ..GridSpec::default()
    };
    grid.validate()?;
    Ok(grid)
}
