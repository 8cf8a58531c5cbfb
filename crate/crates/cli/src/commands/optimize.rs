use std::path::PathBuf;

use clap::Args;

use sepbell::criteria::{describe_pair, ChshSettings};
use sepbell::optimize::{
    chsh_max_analytic, loo_linear_optimal_analytic, numeric_max, numeric_max_detailed, quad_max_orthogonal_analytic, Argmax,
};
use sepbell::Objective;

use super::load_state;
use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::report::{Cell, Report};

#[derive(Debug, Args)]
pub struct OptimizeArgs {
    /// State JSON file.
    #[arg(long)]
    pub state: PathBuf,
    /// chsh, quad, mixsep2_slack, loo_linear or sep_bound_slack.
    #[arg(long, default_value = "chsh")]
    pub objective: String,
    /// Fail with a numerical error when the search does not converge.
    #[arg(long)]
    pub strict: bool,
}

fn describe_argmax(a: &Argmax<f64>) -> String {
    match a {
        Argmax::Chsh(s) => ChshSettings::describe(s),
        Argmax::Frames(p) => describe_pair(p),
        Argmax::Loo(o) => {
            let rows: Vec<String> = o
                .iter()
                .map(|r| format!("({:.6},{:.6},{:.6},{:.6})", r[0], r[1], r[2], r[3]))
                .collect();
            format!("O=[{}]", rows.join(" "))
        }
    }
}

pub fn run(args: &OptimizeArgs, cfg: &RunConfig) -> CliResult<Report> {
    let objective = Objective::from_name(&args.objective).ok_or_else(|| {
        CliError::Input(
            format!("unknown objective `{}`; expected chsh, quad, mixsep2_slack, loo_linear or sep_bound_slack", args.objective),
            Some("objective".into()),
        )
    })?;
    let rho = load_state(&args.state, &cfg.tolerances)?;
    let r = if args.strict {
        numeric_max(&rho, objective, &cfg.budget)?
    } else {
        numeric_max_detailed(&rho, objective, &cfg.budget)?
    };
    let analytic = match objective {
        Objective::Chsh => Some(chsh_max_analytic(&rho)),
        Objective::Quad => Some(quad_max_orthogonal_analytic(&rho)),
        Objective::LooLinear => Some(-loo_linear_optimal_analytic(&rho)),
        Objective::Mixsep2Slack | Objective::SepBoundSlack => None,
    };
    let cols = ["objective", "value", "analytic", "converged", "evaluations", "restarts", "argmax"];
    let mut report = Report::new("optimize", cfg.seed, cols.iter().map(|c| c.to_string()).collect());
    report.push_row(vec![
        objective.name().into(),
        r.value.into(),
        analytic.map_or(Cell::from(""), Cell::from),
        r.converged.into(),
        r.evaluations.into(),
        r.restarts.into(),
        describe_argmax(&r.argmax).into(),
    ]);
    report.note("restarts", cfg.budget.restarts);
    report.note("evals_per_restart", cfg.budget.evals_per_restart);
    report.note("budget_tol", cfg.budget.tol);
    Ok(report)
}
