use std::path::PathBuf;

use clap::Args;
use rayon::prelude::*;

use sepbell::error::Error;
use sepbell::puretest::{family_test, InequalitySelection, PRIME_FAMILY};
use sepbell::states::{random_pure, seeded_rng};
use sepbell::{PureState, PureTestReport, PureVerdict};

use super::eval::enum_name;
use super::load_state_spec;
use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::report::{Cell, Report};

#[derive(Debug, Args)]
pub struct PuretestArgs {
    /// Pure-state JSON file; a seeded batch is run when absent.
    #[arg(long, conflicts_with = "samples")]
    pub state: Option<PathBuf>,
    /// Number of seeded random pure states.
    #[arg(long)]
    pub samples: Option<usize>,
    /// Evaluate all four inequalities per pair instead of the two nontrivial ones.
    #[arg(long)]
    pub all_four: bool,
}

/// Sample `i` of a batch uses its own seed `seed + i`.
pub fn sample_state(seed: u64) -> PureState<f64> {
    random_pure(&mut seeded_rng(seed, 0))
}

pub fn run(args: &PuretestArgs, cfg: &RunConfig) -> CliResult<Report> {
    let tol = &cfg.tolerances;
    let selection = if args.all_four {
        InequalitySelection::AllFour
    } else {
        InequalitySelection::Nontrivial
    };
    let cases: Vec<(u64, PureState<f64>)> = match (&args.state, args.samples) {
        (Some(path), _) => {
            let psi = load_state_spec(path)?
                .pure(tol)
                .map_err(|e| CliError::from(e).context(&path.display().to_string()))?;
            vec![(cfg.seed, psi)]
        }
        (None, Some(0)) => {
            return Err(CliError::from(Error::ParameterOutOfRange {
                name: "samples",
                value: 0.0,
                range: "[1, ∞)",
            }))
        }
        (None, n) => {
            let n = n.unwrap_or(1000) as u64;
            (0..n)
                .into_par_iter()
                .map(|i| {
                    let s = cfg.seed.wrapping_add(i);
                    (s, sample_state(s))
                })
                .collect()
        }
    };
    let results: Vec<PureTestReport<f64>> = cases
        .par_iter()
        .map(|(_, psi)| family_test(psi, PRIME_FAMILY, selection, tol))
        .collect();

    let mut columns = vec!["seed".to_string(), "rs".to_string()];
    for r in &results[0].reports {
        let pair = r.settings.split(' ').next().unwrap_or_default();
        columns.push(format!("{pair}_{}", r.name));
    }
    columns.extend(["residual_abg_1", "residual_abg_2", "residual_abg_3"].map(String::from));
    columns.extend(["residual_prime_1", "residual_prime_2", "residual_prime_3"].map(String::from));
    columns.extend(["verdict", "boundary"].map(String::from));
    let mut report = Report::new("puretest", cfg.seed, columns);

    let mut mismatches = 0usize;
    let mut entangled = 0usize;
    for ((seed, _), r) in cases.iter().zip(&results) {
        let mut row: Vec<Cell> = vec![(*seed).into(), r.schmidt_rs.into()];
        row.extend(r.reports.iter().map(|x| Cell::from(x.slack)));
        row.extend(r.residuals_abg.iter().map(|&x| Cell::from(x)));
        row.extend(r.residuals_prime.iter().map(|&x| Cell::from(x)));
        row.push(enum_name(&r.verdict).into());
        row.push(r.boundary.into());
        report.push_row(row);
        let separable = r.verdict == PureVerdict::Separable;
        entangled += usize::from(!separable);
        mismatches += usize::from(separable != (r.schmidt_rs <= tol.separable_pure));
    }
    report.note("states", results.len());
    report.note("entangled", entangled);
    report.note("boundary", results.iter().filter(|r| r.boundary).count());
    report.note("schmidt_mismatches", mismatches);
    Ok(report)
}
