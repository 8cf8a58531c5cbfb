use clap::{Args, ValueEnum};
use rand::Rng;
use rayon::prelude::*;

use sepbell::criteria::octet_means;
use sepbell::error::Error;
use sepbell::states::{random_mixed, random_rotation, random_separable, seeded_rng};
use sepbell::{SettingPair, SpinTriple};

use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RegionKind {
    /// Random mixed states; bounded by the radius-2 disc.
    AllStates,
    /// Random separable mixtures; bounded by the unit disc.
    Separable,
}

impl RegionKind {
    pub fn bound(self) -> f64 {
        match self {
            RegionKind::AllStates => 2.0,
            RegionKind::Separable => 1.0,
        }
    }

    fn name(self) -> &'static str {
        match self {
            RegionKind::AllStates => "all_states",
            RegionKind::Separable => "separable",
        }
    }
}

#[derive(Debug, Args)]
pub struct RegionArgs {
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    #[arg(long, value_enum, default_value_t = RegionKind::AllStates)]
    pub kind: RegionKind,
}

/// Fraction of the square `[−2, 2]²` of Cirel'son-allowed points lying
/// outside the unit disc: `1 − π/8`.
pub const EXCLUDED_AREA_FRACTION: f64 = 1.0 - std::f64::consts::PI / 8.0;

/// `(⟨AB − A′B′⟩, ⟨AB′ + A′B⟩)` for sample `i`: a random state of the given
/// kind at random orthogonal frames of random handedness.
pub fn sample_point(seed: u64, i: usize, kind: RegionKind) -> (f64, f64) {
    let mut rng = seeded_rng(seed, i as u64);
    let rho = match kind {
        RegionKind::AllStates => random_mixed(&mut rng),
        RegionKind::Separable => random_separable(&mut rng),
    };
    let a = random_triple(&mut rng);
    let b = random_triple(&mut rng);
    let m = octet_means(&rho, &SettingPair::new(a, b));
    (2.0 * m.x, 2.0 * m.y)
}

fn random_triple<R: Rng>(rng: &mut R) -> SpinTriple<f64> {
    let r = random_rotation(rng);
    SpinTriple::from_rotation(&r, if rng.random::<bool>() { 1 } else { -1 })
}

pub fn sample(samples: usize, kind: RegionKind, seed: u64) -> CliResult<Vec<(f64, f64)>> {
    if samples == 0 {
        return Err(CliError::from(Error::ParameterOutOfRange {
            name: "samples",
            value: 0.0,
            range: "[1, ∞)",
        }));
    }
    Ok((0..samples).into_par_iter().map(|i| sample_point(seed, i, kind)).collect())
}

pub fn run(args: &RegionArgs, cfg: &RunConfig) -> CliResult<Report> {
    let points = sample(args.samples, args.kind, cfg.seed)?;
    let cols = ["sample", "x", "y", "radius"];
    let mut report = Report::new("region", cfg.seed, cols.iter().map(|c| c.to_string()).collect());
    let mut max_r: f64 = 0.0;
    for (i, (x, y)) in points.iter().enumerate() {
        let r = x.hypot(*y);
        max_r = max_r.max(r);
        report.push_row(vec![i.into(), (*x).into(), (*y).into(), r.into()]);
    }
    let bound = args.kind.bound();
    report.note("kind", args.kind.name());
    report.note("max_radius", max_r);
    report.note("bound", bound);
    report.note("within_bound", max_r <= bound + cfg.tolerances.equality);
    report.note("excluded_area_fraction", EXCLUDED_AREA_FRACTION);
    Ok(report)
}
