//! Run configuration: defaults, then the config file, then command-line flags.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use sepbell::{Budget, Tolerances};

use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub seed: u64,
    pub tolerances: Tolerances<f64>,
    pub budget: Budget,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            tolerances: Tolerances::default(),
            budget: Budget::default(),
            format: Format::Csv,
            out: None,
        }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub seed: Option<u64>,
    pub format: Option<Format>,
    #[serde(default)]
    pub tolerances: ToleranceSection,
    #[serde(default)]
    pub optimize: OptimizeSection,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToleranceSection {
    pub hermiticity: Option<f64>,
    pub trace: Option<f64>,
    pub psd: Option<f64>,
    pub equality: Option<f64>,
    pub unit: Option<f64>,
    pub orthonormal: Option<f64>,
    pub normalization: Option<f64>,
    pub separable_pure: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptimizeSection {
    pub restarts: Option<usize>,
    pub evals_per_restart: Option<usize>,
    pub tol: Option<f64>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> CliResult<Self> {
        toml::from_str(text).map_err(|e| CliError::input(format!("config: {}", e.to_string().trim_end())))
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| e.context(&path.display().to_string()))
    }

    pub fn apply(&self, cfg: &mut RunConfig) -> CliResult<()> {
        if let Some(s) = self.seed {
            cfg.seed = s;
        }
        if let Some(f) = self.format {
            cfg.format = f;
        }
        let t = &self.tolerances;
        let tol = &mut cfg.tolerances;
        for (name, src, dst) in [
            ("hermiticity", t.hermiticity, &mut tol.hermiticity),
            ("trace", t.trace, &mut tol.trace),
            ("psd", t.psd, &mut tol.psd),
            ("equality", t.equality, &mut tol.equality),
            ("unit", t.unit, &mut tol.unit),
            ("orthonormal", t.orthonormal, &mut tol.orthonormal),
            ("normalization", t.normalization, &mut tol.normalization),
            ("separable_pure", t.separable_pure, &mut tol.separable_pure),
        ] {
            if let Some(v) = src {
                *dst = check_tolerance(name, v)?;
            }
        }
        let o = &self.optimize;
        if let Some(r) = o.restarts {
            cfg.budget.restarts = r;
        }
        if let Some(e) = o.evals_per_restart {
            cfg.budget.evals_per_restart = e;
        }
        if let Some(t) = o.tol {
            cfg.budget.tol = check_tolerance("optimize.tol", t)?;
        }
        Ok(())
    }
}

pub fn check_tolerance(name: &str, v: f64) -> CliResult<f64> {
    if v.is_finite() && v >= 0.0 {
        Ok(v)
    } else {
        Err(CliError::Input(format!("tolerance {name} must be a finite non-negative number, got {v}"), Some(name.to_string())))
    }
}
