use std::collections::BTreeMap;

use clap::Args;
use rayon::prelude::*;

use sepbell::error::Error;
use sepbell::optimize::ns_verdict;
use sepbell::states::{random_mixed, seeded_rng};
use sepbell::{Budget, DensityMatrix, NsEvidence, NsVerdict};

use super::eval::enum_name;
use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::report::Report;

#[derive(Debug, Args)]
pub struct EquivalenceArgs {
    #[arg(long, default_value_t = 500)]
    pub samples: usize,
    /// States with |min eigenvalue of the partial transpose| below this are
    /// excluded from the disagreement count.
    #[arg(long, default_value_t = 1e-4)]
    pub band: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Record {
    pub sample: usize,
    pub ppt_entangled: bool,
    pub in_band: bool,
    pub evidence: NsEvidence<f64>,
}

impl Record {
    /// The octet verdict differs from the partial-transpose verdict.
    pub fn disagrees(&self) -> bool {
        let expected = if self.ppt_entangled {
            NsVerdict::Entangled
        } else {
            NsVerdict::Separable
        };
        self.evidence.verdict != expected
    }
}

/// Sample `i` is drawn from stream `i` of the run seed; its optimizer uses
/// seed `seed + i`.
pub fn sample_state(seed: u64, i: usize) -> DensityMatrix<f64> {
    random_mixed(&mut seeded_rng(seed, i as u64))
}

pub fn study(samples: usize, band: f64, cfg: &RunConfig) -> CliResult<Vec<Record>> {
    if samples == 0 {
        return Err(CliError::from(Error::ParameterOutOfRange {
            name: "samples",
            value: 0.0,
            range: "[1, ∞)",
        }));
    }
    if !(band.is_finite() && band >= 0.0) {
        return Err(CliError::from(Error::ParameterOutOfRange {
            name: "band",
            value: band,
            range: "[0, ∞)",
        }));
    }
    let tol = &cfg.tolerances;
    (0..samples)
        .into_par_iter()
        .map(|i| {
            let rho = sample_state(cfg.seed, i);
            let budget = Budget {
                seed: cfg.seed.wrapping_add(i as u64),
                ..cfg.budget
            };
            let evidence = ns_verdict(&rho, &budget, tol)?;
            Ok(Record {
                sample: i,
                ppt_entangled: evidence.ppt_min_eigenvalue < -tol.psd,
                in_band: evidence.ppt_min_eigenvalue.abs() < band,
                evidence,
            })
        })
        .collect()
}

pub fn run(args: &EquivalenceArgs, cfg: &RunConfig) -> CliResult<Report> {
    let records = study(args.samples, args.band, cfg)?;
    let columns = [
        "sample",
        "ppt_min_eigenvalue",
        "in_band",
        "ppt_verdict",
        "ns_verdict",
        "max_violation",
        "converged",
        "defect",
        "restarts_used",
        "evaluations",
    ];
    let mut report = Report::new("equivalence", cfg.seed, columns.iter().map(|c| c.to_string()).collect());
    let mut matrix: BTreeMap<String, usize> = BTreeMap::new();
    let mut outside = 0usize;
    for r in &records {
        let ppt = if r.ppt_entangled { "entangled" } else { "separable" };
        let ns = enum_name(&r.evidence.verdict);
        *matrix.entry(format!("ppt_{ppt}/ns_{ns}")).or_default() += 1;
        outside += usize::from(r.disagrees() && !r.in_band);
        report.push_row(vec![
            r.sample.into(),
            r.evidence.ppt_min_eigenvalue.into(),
            r.in_band.into(),
            ppt.into(),
            ns.into(),
            r.evidence.max_violation.into(),
            r.evidence.converged.into(),
            r.evidence.defect.into(),
            r.evidence.restarts_used.into(),
            r.evidence.evaluations.into(),
        ]);
    }
    report.note("samples", records.len());
    report.note("band", args.band);
    for (k, v) in matrix {
        report.note(k, v);
    }
    report.note("in_band", records.iter().filter(|r| r.in_band).count());
    report.note("disagreements_outside_band", outside);
    Ok(report)
}
