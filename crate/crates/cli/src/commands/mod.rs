//! Subcommand implementations and the input loaders they share.

pub mod equivalence;
pub mod eval;
pub mod optimize;
pub mod puretest;
pub mod region;
pub mod scan;

use std::path::Path;

use sepbell::schema::{PairSpec, StateSpec};
use sepbell::{DensityMatrix, NamedSetting, SettingPair, Tolerances};

use crate::error::{CliError, CliResult};

pub(crate) fn read_file(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))
}

pub fn load_state_spec(path: &Path) -> CliResult<StateSpec> {
    StateSpec::from_json(&read_file(path)?).map_err(|e| CliError::from(e).context(&path.display().to_string()))
}

pub fn load_state(path: &Path, tol: &Tolerances<f64>) -> CliResult<DensityMatrix<f64>> {
    load_state_spec(path)?
        .density(tol)
        .map_err(|e| CliError::from(e).context(&path.display().to_string()))
}

/// The pair from a file, a setting name or, failing both, the Pauli pair.
pub fn load_pair(file: Option<&Path>, named: Option<&str>, tol: &Tolerances<f64>) -> CliResult<SettingPair<f64>> {
    match (file, named) {
        (Some(_), Some(_)) => Err(CliError::input("give either --pair or --named, not both")),
        (Some(path), None) => PairSpec::from_json(&read_file(path)?)
            .and_then(|p| p.pair(tol))
            .map_err(|e| CliError::from(e).context(&path.display().to_string())),
        (None, Some("pauli")) => Ok(SettingPair::pauli()),
        (None, Some(name)) => NamedSetting::from_name(name)
            .map(|s| s.pair())
            .ok_or_else(|| CliError::Input(format!("unknown setting `{name}`"), Some("named".into()))),
        (None, None) => Ok(SettingPair::pauli()),
    }
}

/// Splits a comma-separated list and checks every entry against `known`.
pub(crate) fn parse_list(list: &str, known: &[&str], what: &str) -> CliResult<Vec<String>> {
    let items: Vec<String> = list.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
    if items.is_empty() {
        return Err(CliError::input(format!("empty {what} list")));
    }
    for item in &items {
        if !known.contains(&item.as_str()) {
            return Err(CliError::Input(
                format!("unknown {what} `{item}`; expected one of {}", known.join(", ")),
                Some(what.to_string()),
            ));
        }
    }
    Ok(items)
}
