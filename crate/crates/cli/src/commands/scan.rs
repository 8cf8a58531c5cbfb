use clap::Args;
use rayon::prelude::*;

use sepbell::criteria::{fidelity, loo_linear_witness, loo_nonlinear_witness, mixsep2};
use sepbell::error::Error;
use sepbell::optimize::{chsh_max_analytic, lhv_gap_classify, loo_linear_optimal_analytic, ns_verdict};
use sepbell::schema::Family;
use sepbell::{NsVerdict, SettingPair};

use super::eval::loo_bases;
use super::parse_list;
use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::report::{Cell, Report};

pub const CRITERIA: [&str; 10] = [
    "ppt",
    "mixsep2_pauli",
    "mixsep2_loo",
    "chsh_max",
    "gap",
    "loo_linear",
    "loo_nonlinear",
    "loo_optimal",
    "fidelity",
    "mixsep2_opt",
];

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// werner or noisy_singlet.
    #[arg(long)]
    pub family: String,
    #[arg(long, default_value_t = 0.0)]
    pub p_min: f64,
    #[arg(long, default_value_t = 1.0)]
    pub p_max: f64,
    #[arg(long, default_value_t = 0.01)]
    pub step: f64,
    /// Comma-separated criteria; defaults depend on the family.
    #[arg(long)]
    pub criteria: Option<String>,
    /// Bisection stops once the bracket is this narrow.
    #[arg(long, default_value_t = 1e-4)]
    pub resolution: f64,
}

/// Default criteria for a family.
pub fn default_criteria(family: Family) -> &'static [&'static str] {
    match family {
        Family::Werner => &["ppt", "mixsep2_pauli", "chsh_max", "gap"],
        Family::NoisySinglet => &["loo_linear", "loo_nonlinear", "mixsep2_loo"],
    }
}

/// A criterion at one parameter value: `value` is the slack (negative when
/// violated) and `flag` whether the criterion fires. For `gap` the value
/// is `t₁₁ + t₂₂ − 1` and the flag is gap membership.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    pub value: f64,
    pub flag: bool,
}

pub fn point(criterion: &str, family: Family, p: f64, cfg: &RunConfig) -> CliResult<Point> {
    let tol = &cfg.tolerances;
    let rho = family.state(p)?;
    let slack = |r: sepbell::CriterionReport<f64>| Point {
        value: r.slack,
        flag: r.violated(),
    };
    let octet = |pair: SettingPair<f64>| {
        let r = mixsep2(&rho, &pair, tol);
        Point {
            value: r.min_slack(),
            flag: r.any_violated(),
        }
    };
    let (la, lb) = loo_bases(&SettingPair::pauli());
    Ok(match criterion {
        "ppt" => slack(sepbell::criteria::ppt(&rho, tol)?),
        "mixsep2_pauli" => octet(SettingPair::pauli()),
        "mixsep2_loo" => octet(SettingPair::negated_pauli()),
        "chsh_max" => {
            let v = 2.0 - chsh_max_analytic(&rho);
            Point {
                value: v,
                flag: v < -tol.equality,
            }
        }
        "gap" => {
            let g = lhv_gap_classify(&rho, tol.equality);
            Point {
                value: g.t11 + g.t22 - 1.0,
                flag: g.gap_member,
            }
        }
        "loo_linear" => slack(loo_linear_witness(&rho, &la, &lb, tol)),
        "loo_nonlinear" => slack(loo_nonlinear_witness(&rho, &la, &lb, tol)),
        "loo_optimal" => {
            let v = loo_linear_optimal_analytic(&rho);
            Point {
                value: v,
                flag: v < -tol.equality,
            }
        }
        "fidelity" => slack(fidelity(&rho, tol)),
        "mixsep2_opt" => {
            let e = ns_verdict(&rho, &cfg.budget, tol)?;
            Point {
                value: -e.max_violation,
                flag: e.verdict == NsVerdict::Entangled,
            }
        }
        other => unreachable!("criterion {other} passed validation"),
    })
}

/// A change of flag between neighbouring grid points, narrowed by bisection.
#[derive(Clone, Debug, PartialEq)]
pub struct Transition {
    pub criterion: String,
    pub lo: f64,
    pub hi: f64,
    /// Flag on the `lo` side.
    pub from: bool,
}

impl Transition {
    pub fn threshold(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }
}

pub fn grid(p_min: f64, p_max: f64, step: f64) -> CliResult<Vec<f64>> {
    let out = |name: &'static str, value: f64, range: &'static str| {
        CliError::from(Error::ParameterOutOfRange { name, value, range })
    };
    if !(step.is_finite() && step > 0.0) {
        return Err(out("step", step, "(0, 1]"));
    }
    if !(0.0..=1.0).contains(&p_min) {
        return Err(out("p_min", p_min, "[0, 1]"));
    }
    if !(p_min..=1.0).contains(&p_max) {
        return Err(out("p_max", p_max, "[p_min, 1]"));
    }
    let n = ((p_max - p_min) / step + 1e-9).floor() as usize;
    let mut ps: Vec<f64> = (0..=n).map(|k| p_min + k as f64 * step).collect();
    if p_max - ps[n] > 1e-12 {
        ps.push(p_max);
    }
    Ok(ps)
}

pub fn bisect(criterion: &str, family: Family, mut lo: f64, mut hi: f64, resolution: f64, cfg: &RunConfig) -> CliResult<Transition> {
    let from = point(criterion, family, lo, cfg)?.flag;
    while hi - lo > resolution {
        let mid = 0.5 * (lo + hi);
        if point(criterion, family, mid, cfg)?.flag == from {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Transition {
        criterion: criterion.to_string(),
        lo,
        hi,
        from,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScanResult {
    pub ps: Vec<f64>,
    /// `points[i][k]` is criterion `k` at `ps[i]`.
    pub points: Vec<Vec<Point>>,
    pub transitions: Vec<Transition>,
}

pub fn scan(family: Family, ps: &[f64], criteria: &[String], resolution: f64, cfg: &RunConfig) -> CliResult<ScanResult> {
    if !(resolution.is_finite() && resolution > 0.0) {
        return Err(CliError::from(Error::ParameterOutOfRange {
            name: "resolution",
            value: resolution,
            range: "(0, ∞)",
        }));
    }
    let points: Vec<Vec<Point>> = ps
        .par_iter()
        .map(|&p| criteria.iter().map(|c| point(c, family, p, cfg)).collect::<CliResult<Vec<_>>>())
        .collect::<CliResult<Vec<_>>>()?;
    let mut brackets = Vec::new();
    for (k, c) in criteria.iter().enumerate() {
        for i in 1..ps.len() {
            if points[i - 1][k].flag != points[i][k].flag {
                brackets.push((c.clone(), ps[i - 1], ps[i]));
            }
        }
    }
    let transitions = brackets
        .par_iter()
        .map(|(c, lo, hi)| bisect(c, family, *lo, *hi, resolution, cfg))
        .collect::<CliResult<Vec<_>>>()?;
    Ok(ScanResult {
        ps: ps.to_vec(),
        points,
        transitions,
    })
}

pub fn run(args: &ScanArgs, cfg: &RunConfig) -> CliResult<Report> {
    let family = Family::from_name(&args.family).ok_or_else(|| {
        CliError::Input(
            format!("unknown family `{}`; expected werner or noisy_singlet", args.family),
            Some("family".into()),
        )
    })?;
    let criteria = match &args.criteria {
        Some(list) => parse_list(list, &CRITERIA, "criterion")?,
        None => default_criteria(family).iter().map(|c| c.to_string()).collect(),
    };
    let ps = grid(args.p_min, args.p_max, args.step)?;
    let result = scan(family, &ps, &criteria, args.resolution, cfg)?;

    let mut columns = vec!["p".to_string()];
    for c in &criteria {
        columns.push(format!("{c}_value"));
        columns.push(format!("{c}_flag"));
    }
    let mut report = Report::new("scan", cfg.seed, columns);
    for (p, pts) in result.ps.iter().zip(&result.points) {
        let mut row: Vec<Cell> = vec![(*p).into()];
        for pt in pts {
            row.push(pt.value.into());
            row.push(pt.flag.into());
        }
        report.push_row(row);
    }
    report.note("family", family.name());
    report.note("resolution", args.resolution);
    for c in &criteria {
        let ts: Vec<String> = result
            .transitions
            .iter()
            .filter(|t| &t.criterion == c)
            .map(|t| format!("{} ({}->{}) [{}, {}]", t.threshold(), t.from, !t.from, t.lo, t.hi))
            .collect();
        let text = if ts.is_empty() { "none".to_string() } else { ts.join("; ") };
        report.note(format!("threshold {c}"), text);
    }
    Ok(report)
}
