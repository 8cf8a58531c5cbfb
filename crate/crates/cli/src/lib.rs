//! Command-line front end for the `sepbell` separability criteria.
//!
//! Every subcommand builds a [`report::Report`] that renders as versioned CSV
//! or JSON; identical seeds, configuration and inputs give identical bytes.

pub mod commands;
pub mod config;
pub mod error;
pub mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub use config::{Format, RunConfig};
pub use error::{CliError, CliResult};
pub use report::Report;

#[derive(Debug, Parser)]
#[command(name = "sepbell", version, about = "Two-qubit separability criteria from locally orthogonal spin triples")]
pub struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Verdict tolerance for inequalities and the partial transpose.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// TOML file with [tolerances] and [optimize] sections.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Print failures as JSON on standard error.
    #[arg(long, global = true)]
    pub error_json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate criteria on one state.
    Eval(commands::eval::EvalArgs),
    /// Sweep a state family and bisect each criterion's threshold.
    Scan(commands::scan::ScanArgs),
    /// Compare the octet verdict against the partial transpose on random states.
    Equivalence(commands::equivalence::EquivalenceArgs),
    /// Sample the (⟨AB − A′B′⟩, ⟨AB′ + A′B⟩) plane.
    Region(commands::region::RegionArgs),
    /// Six-inequality test on pure states.
    Puretest(commands::puretest::PuretestArgs),
    /// Numerical maximization of an objective over settings.
    Optimize(commands::optimize::OptimizeArgs),
}

impl Cli {
    /// Defaults, then the config file, then flags.
    pub fn run_config(&self) -> CliResult<RunConfig> {
        let mut cfg = RunConfig::default();
        if let Some(path) = &self.config {
            config::ConfigFile::load(path)?.apply(&mut cfg)?;
        }
        if let Some(s) = self.seed {
            cfg.seed = s;
        }
        if let Some(t) = self.tol {
            let t = config::check_tolerance("tol", t)?;
            cfg.tolerances.equality = t;
            cfg.tolerances.psd = t;
        }
        if let Some(f) = self.format {
            cfg.format = f;
        }
        cfg.out = self.out.clone();
        cfg.budget.seed = cfg.seed;
        Ok(cfg)
    }
}

/// Runs the parsed command and returns its report.
pub fn run(cli: &Cli) -> CliResult<(Report, RunConfig)> {
    let cfg = cli.run_config()?;
    let report = match &cli.command {
        Command::Eval(a) => commands::eval::run(a, &cfg)?,
        Command::Scan(a) => commands::scan::run(a, &cfg)?,
        Command::Equivalence(a) => commands::equivalence::run(a, &cfg)?,
        Command::Region(a) => commands::region::run(a, &cfg)?,
        Command::Puretest(a) => commands::puretest::run(a, &cfg)?,
        Command::Optimize(a) => commands::optimize::run(a, &cfg)?,
    };
    Ok((report, cfg))
}

/// Runs the command and writes the rendered report; returns the exit code.
pub fn execute(cli: &Cli) -> i32 {
    let result = run(cli).and_then(|(report, cfg)| {
        let text = report.render(cfg.format);
        match &cfg.out {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            if cli.error_json {
                eprintln!("{}", e.to_json());
            } else {
                eprintln!("error: {e}");
            }
            e.exit_code()
        }
    }
}
