use std::path::PathBuf;

use clap::Args;

use sepbell::criteria::{
    chsh, cirelson, fid2, fidelity, loo_linear_witness, loo_nonlinear_witness, mixsep2, ppt, quad, roy_check,
    sep_bound_eq7, ChshSettings, LooBasis,
};
use sepbell::optimize::{chsh_max_analytic, evidence_reports, lhv_gap_classify, loo_linear_optimal_analytic, ns_verdict};
use sepbell::{CriterionReport, DensityMatrix, SettingPair, Tolerances};

use super::{load_pair, load_state, parse_list};
use crate::config::RunConfig;
use crate::error::CliResult;
use crate::report::{Cell, Report};

pub const CRITERIA: [&str; 16] = [
    "ppt",
    "chsh",
    "cirelson",
    "quad",
    "eq7",
    "roy",
    "mixsep2",
    "fidelity",
    "fid2",
    "loo_linear",
    "loo_nonlinear",
    "loo_optimal",
    "chsh_max",
    "gap",
    "ns",
    "all",
];

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// State JSON file.
    #[arg(long)]
    pub state: PathBuf,
    /// Comma-separated criteria; `all` selects every criterion except `ns`.
    #[arg(long, default_value = "all")]
    pub criteria: String,
    /// Setting-pair JSON file.
    #[arg(long)]
    pub pair: Option<PathBuf>,
    /// Named setting pair (alpha, beta, gamma, beta_prime, gamma_prime, pauli, ...).
    #[arg(long)]
    pub named: Option<String>,
}

pub const COLUMNS: [&str; 8] = ["criterion", "lhs", "rhs", "slack", "verdict", "tolerance", "sense", "settings"];

pub fn run(args: &EvalArgs, cfg: &RunConfig) -> CliResult<Report> {
    let tol = &cfg.tolerances;
    let rho = load_state(&args.state, tol)?;
    let pair = load_pair(args.pair.as_deref(), args.named.as_deref(), tol)?;
    let mut names = parse_list(&args.criteria, &CRITERIA, "criterion")?;
    if let Some(k) = names.iter().position(|n| n == "all") {
        let all = CRITERIA.iter().filter(|c| !matches!(**c, "all" | "ns")).map(|c| c.to_string());
        names.splice(k..=k, all);
    }
    let mut report = Report::new("eval", cfg.seed, COLUMNS.iter().map(|c| c.to_string()).collect());
    let mut violated = 0usize;
    for name in &names {
        for r in evaluate(name, &rho, &pair, cfg, &mut report)? {
            violated += usize::from(r.violated());
            report.push_row(row(&r));
        }
    }
    report.note("criteria_evaluated", report.rows.len());
    report.note("violated", violated);
    Ok(report)
}

pub fn row(r: &CriterionReport<f64>) -> Vec<Cell> {
    vec![
        r.name.clone().into(),
        r.lhs.into(),
        r.rhs.into(),
        r.slack.into(),
        enum_name(&r.verdict).into(),
        r.tolerance.into(),
        enum_name(&r.sense).into(),
        r.settings.clone().into(),
    ]
}

pub(crate) fn enum_name<S: serde::Serialize>(v: &S) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

/// LOO bases built from the pair: `{−A, −A′, −A″, 𝟙}/√2` and `{B, B′, B″, 𝟙}/√2`.
pub fn loo_bases(pair: &SettingPair<f64>) -> (LooBasis<f64>, LooBasis<f64>) {
    (LooBasis::from_triple(&pair.a, true), LooBasis::from_triple(&pair.b, false))
}

fn evaluate(
    name: &str,
    rho: &DensityMatrix<f64>,
    pair: &SettingPair<f64>,
    cfg: &RunConfig,
    report: &mut Report,
) -> CliResult<Vec<CriterionReport<f64>>> {
    let tol: &Tolerances<f64> = &cfg.tolerances;
    let settings = ChshSettings::from_pair(pair);
    Ok(match name {
        "ppt" => vec![ppt(rho, tol)?],
        "chsh" => vec![chsh(rho, &settings, tol)?],
        "cirelson" => vec![cirelson(rho, &settings, tol)?],
        "quad" => vec![quad(rho, &settings, tol)?],
        "eq7" => vec![sep_bound_eq7(rho, pair, tol)],
        "roy" => vec![roy_check(rho, pair, tol)],
        "mixsep2" => mixsep2(rho, pair, tol).reports.to_vec(),
        "fidelity" => vec![fidelity(rho, tol)],
        "fid2" => vec![fid2(rho, tol)],
        "loo_linear" | "loo_nonlinear" => {
            let (a, b) = loo_bases(pair);
            vec![if name == "loo_linear" {
                loo_linear_witness(rho, &a, &b, tol)
            } else {
                loo_nonlinear_witness(rho, &a, &b, tol)
            }]
        }
        "loo_optimal" => vec![CriterionReport::lower(
            "loo_optimal",
            loo_linear_optimal_analytic(rho),
            0.0,
            tol.equality,
            "optimal local orthogonal bases".into(),
        )],
        "chsh_max" => vec![CriterionReport::upper(
            "chsh_max",
            chsh_max_analytic(rho),
            2.0,
            tol.equality,
            "maximum over settings".into(),
        )],
        "gap" => {
            let g = lhv_gap_classify(rho, tol.equality);
            vec![CriterionReport::upper(
                "gap",
                g.t11 + g.t22,
                1.0,
                tol.equality,
                format!("gap_member={} t11^2+t22^2={}", g.gap_member, g.t11 * g.t11 + g.t22 * g.t22),
            )]
        }
        "ns" => {
            let e = ns_verdict(rho, &cfg.budget, tol)?;
            report.note("ns_verdict", enum_name(&e.verdict));
            report.note("ns_converged", e.converged);
            report.note("ns_defect", e.defect);
            evidence_reports(rho, &e, tol)
                .reports
                .into_iter()
                .map(|mut r| {
                    r.name = format!("ns_{}", r.name);
                    r
                })
                .collect()
        }
        other => unreachable!("criterion {other} passed validation"),
    })
}
