//! Analytic maxima over measurement settings, numeric maximization over
//! frame pairs, the LHV-gap classifier and the optimizer-backed separability
//! verdict.

mod simplex;

pub use simplex::{maximize, LocalOutcome};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::criteria::{
    describe_pair, mixsep2_from_means, ChshSettings, OctetMeans,
};
use crate::error::{Error, Result};
use crate::frames::{named_triples, SettingPair, SpinTriple};
use crate::linalg3::{self, Mat3, Vec3};
use crate::scalar::Real;
use crate::states::{normal_form, pauli_decompose, seeded_rng, DensityMatrix, PauliForm};
use crate::tolerance::Tolerances;

/// `2√(t₁₁² + t₂₂²)`: the largest CHSH value over all settings.
pub fn chsh_max_analytic<T: Real>(rho: &DensityMatrix<T>) -> T {
    let t = normal_form(&pauli_decompose(rho)).t;
    T::lit(2.0) * (t[0] * t[0] + t[1] * t[1]).sqrt()
}

/// `(t₁₁ + t₂₂)²`: the largest `⟨AB − A′B′⟩² + ⟨AB′ + A′B⟩²` over
/// orthogonal settings.
pub fn quad_max_orthogonal_analytic<T: Real>(rho: &DensityMatrix<T>) -> T {
    let t = normal_form(&pauli_decompose(rho)).t;
    (t[0] + t[1]) * (t[0] + t[1])
}

/// Smallest linear LOO witness value over all pairs of LOO bases:
/// `1 − ½‖M‖₁` with `M_μν = ⟨σ_μ ⊗ σ_ν⟩` and `‖·‖₁` the trace norm.
pub fn loo_linear_optimal_analytic<T: Real>(rho: &DensityMatrix<T>) -> T {
    let m = pauli_decompose(rho).full_correlations();
    let (s, _, _) = linalg3::svd(&m);
    T::one() - T::lit(0.5) * s.iter().copied().sum::<T>()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GapClassification<T> {
    pub gap_member: bool,
    pub t11: T,
    pub t22: T,
}

/// Entangled yet CHSH-local: `t₁₁ + t₂₂ > 1` and `t₁₁² + t₂₂² ≤ 1`, each
/// decided with margin `tol`.
pub fn lhv_gap_classify<T: Real>(rho: &DensityMatrix<T>, tol: T) -> GapClassification<T> {
    let t = normal_form(&pauli_decompose(rho)).t;
    let (t11, t22) = (t[0], t[1]);
    GapClassification {
        gap_member: t11 + t22 > T::one() + tol && t11 * t11 + t22 * t22 <= T::one() + tol,
        t11,
        t22,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Budget {
    pub restarts: usize,
    pub evals_per_restart: usize,
    pub tol: f64,
    pub seed: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            restarts: 64,
            evals_per_restart: 2000,
            tol: 1e-6,
            seed: 0,
        }
    }
}

impl Budget {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    /// CHSH value over four free unit vectors.
    Chsh,
    /// `⟨AB − A′B′⟩² + ⟨AB′ + A′B⟩²` over orthogonal settings.
    Quad,
    /// Largest violation `lhs − rhs` among the four octet inequalities.
    Mixsep2Slack,
    /// Largest violation `−W` of the linear LOO witness over LOO bases.
    LooLinear,
    /// Largest `4(⟨X⟩² + ⟨Y⟩²) − (1 − ⟨A″⟩²)(1 − ⟨B″⟩²)` over frame pairs.
    SepBoundSlack,
}

impl Objective {
    pub fn name(self) -> &'static str {
        match self {
            Objective::Chsh => "chsh",
            Objective::Quad => "quad",
            Objective::Mixsep2Slack => "mixsep2_slack",
            Objective::LooLinear => "loo_linear",
            Objective::SepBoundSlack => "sep_bound_slack",
        }
    }

    pub const ALL: [Objective; 5] = [
        Objective::Chsh,
        Objective::Quad,
        Objective::Mixsep2Slack,
        Objective::LooLinear,
        Objective::SepBoundSlack,
    ];

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter()
            .find(|o| o.name() == name)
    }

    fn dimension(self) -> usize {
        match self {
            Objective::Chsh => 12,
            Objective::Quad | Objective::Mixsep2Slack | Objective::LooLinear | Objective::SepBoundSlack => 8,
        }
    }
}

/// Where the maximum was found.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Argmax<T> {
    Chsh(ChshSettings<T>),
    Frames(SettingPair<T>),
    /// `G_k^A = Σ_μ O_kμ σ_μ/√2` with particle 2 fixed at `{𝟙, σx, σy, σz}/√2`.
    Loo([[T; 4]; 4]),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OptimizationResult<T> {
    pub value: T,
    pub argmax: Argmax<T>,
    pub evaluations: usize,
    pub restarts: usize,
    pub converged: bool,
}

fn unit_or_z<T: Real>(v: &[T]) -> Vec3<T> {
    linalg3::normalize(&[v[0], v[1], v[2]]).unwrap_or([T::zero(), T::zero(), T::one()])
}

fn quaternion<T: Real>(v: &[T]) -> [T; 4] {
    [v[0], v[1], v[2], v[3]]
}

fn frames_from_params<T: Real>(x: &[T], handedness_b: i8) -> SettingPair<T> {
    let ra = linalg3::quaternion_to_rotation(&quaternion(&x[0..4]));
    let rb = linalg3::quaternion_to_rotation(&quaternion(&x[4..8]));
    SettingPair::new(SpinTriple::from_rotation(&ra, 1), SpinTriple::from_rotation(&rb, handedness_b))
}

/// `L(p)·R(q)` for quaternions `p`, `q` (normalized here): every proper
/// rotation of ℝ⁴ has this form.
fn so4_from_params<T: Real>(x: &[T]) -> [[T; 4]; 4] {
    let unit = |v: &[T]| {
        let n = v.iter().fold(T::zero(), |a, &b| a + b * b).sqrt();
        if n > T::zero() {
            [v[0] / n, v[1] / n, v[2] / n, v[3] / n]
        } else {
            [T::one(), T::zero(), T::zero(), T::zero()]
        }
    };
    let [a, b, c, d] = unit(&x[0..4]);
    let [w, p, q, r] = unit(&x[4..8]);
    let l = [[a, -b, -c, -d], [b, a, -d, c], [c, d, a, -b], [d, -c, b, a]];
    let rr = [[w, -p, -q, -r], [p, w, r, -q], [q, -r, w, p], [r, q, -p, w]];
    let mut m = [[T::zero(); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                m[i][j] += l[i][k] * rr[k][j];
            }
        }
    }
    m
}

fn loo_matrix<T: Real>(x: &[T], reflect: bool) -> [[T; 4]; 4] {
    let mut o = so4_from_params(x);
    if reflect {
        for row in o.iter_mut() {
            row[3] = -row[3];
        }
    }
    o
}

/// `Σ_k ⟨G_k^A ⊗ G_k^B⟩ − 1 = ½ Tr(O M) − 1`.
fn loo_violation<T: Real>(o: &[[T; 4]; 4], m: &[[T; 4]; 4]) -> T {
    let mut tr = T::zero();
    for nu in 0..4 {
        for mu in 0..4 {
            tr += o[nu][mu] * m[mu][nu];
        }
    }
    T::lit(0.5) * tr - T::one()
}

fn chsh_settings_from_params<T: Real>(x: &[T]) -> ChshSettings<T> {
    ChshSettings::new(
        unit_or_z(&x[0..3]),
        unit_or_z(&x[3..6]),
        unit_or_z(&x[6..9]),
        unit_or_z(&x[9..12]),
    )
}

fn chsh_of<T: Real>(f: &PauliForm<T>, s: &ChshSettings<T>) -> T {
    let e = |u: &Vec3<T>, v: &Vec3<T>| f.correlation(u, v);
    (e(&s.a, &s.b) + e(&s.a, &s.b1) + e(&s.a1, &s.b) - e(&s.a1, &s.b1)).abs()
}

fn quad_of<T: Real>(f: &PauliForm<T>, pair: &SettingPair<T>) -> T {
    let m = OctetMeans::from_pauli(f, pair);
    T::lit(4.0) * m.plain_radius2()
}

/// Largest `lhs − rhs` over the four octet inequalities.
pub fn mixsep2_violation<T: Real>(f: &PauliForm<T>, pair: &SettingPair<T>) -> T {
    let m = OctetMeans::from_pauli(f, pair);
    m.mixsep2_sides()
        .iter()
        .map(|(l, r)| *l - *r)
        .fold(T::neg_infinity(), T::max)
}

/// Largest `lhs − rhs` of the product-state bound on `⟨X⟩² + ⟨Y⟩²`.
pub fn sep_bound_violation<T: Real>(f: &PauliForm<T>, pair: &SettingPair<T>) -> T {
    let m = OctetMeans::from_pauli(f, pair);
    let (a, b) = (m.a2_mean(), m.b2_mean());
    T::lit(4.0) * m.plain_radius2() - (T::one() - a * a) * (T::one() - b * b)
}

/// The discrete choice a restart explores: B-side handedness for frame
/// objectives, reflection of the LOO rotation for the witness.
fn variant(objective: Objective, restart: usize) -> bool {
    match objective {
        Objective::Mixsep2Slack | Objective::LooLinear | Objective::SepBoundSlack => restart % 2 == 1,
        Objective::Chsh | Objective::Quad => false,
    }
}

fn evaluate<T: Real>(objective: Objective, f: &PauliForm<T>, m: &[[T; 4]; 4], x: &[T], alt: bool) -> T {
    let h = if alt { -1 } else { 1 };
    match objective {
        Objective::Chsh => chsh_of(f, &chsh_settings_from_params(x)),
        Objective::Quad => quad_of(f, &frames_from_params(x, 1)),
        Objective::Mixsep2Slack => mixsep2_violation(f, &frames_from_params(x, h)),
        Objective::LooLinear => loo_violation(&loo_matrix(x, alt), m),
        Objective::SepBoundSlack => sep_bound_violation(f, &frames_from_params(x, h)),
    }
}

fn argmax_of<T: Real>(objective: Objective, x: &[T], alt: bool) -> Argmax<T> {
    match objective {
        Objective::Chsh => Argmax::Chsh(chsh_settings_from_params(x)),
        Objective::Quad => Argmax::Frames(frames_from_params(x, 1)),
        Objective::Mixsep2Slack | Objective::SepBoundSlack => Argmax::Frames(frames_from_params(x, if alt { -1 } else { 1 })),
        Objective::LooLinear => Argmax::Loo(loo_matrix(x, alt)),
    }
}

#[derive(Clone, Debug)]
struct RestartOutcome<T> {
    value: T,
    x: Vec<T>,
    alt: bool,
    evaluations: usize,
    converged: bool,
}

fn run_restart<T: Real>(
    objective: Objective,
    f: &PauliForm<T>,
    m: &[[T; 4]; 4],
    budget: &Budget,
    index: usize,
) -> RestartOutcome<T> {
    let mut rng = seeded_rng(budget.seed, index as u64);
    let alt = variant(objective, index);
    let x0: Vec<T> = (0..objective.dimension()).map(|_| T::sample_normal(&mut rng)).collect();
    let g = |x: &[T]| evaluate(objective, f, m, x, alt);
    let out = maximize(&g, x0, T::lit(0.5), budget.evals_per_restart, T::lit(budget.tol));
    RestartOutcome {
        value: out.value,
        x: out.x,
        alt,
        evaluations: out.evaluations,
        converged: out.converged,
    }
}

/// Runs restarts `range` in parallel; results come back in index order.
fn run_chunk<T: Real>(
    objective: Objective,
    f: &PauliForm<T>,
    m: &[[T; 4]; 4],
    budget: &Budget,
    range: std::ops::Range<usize>,
) -> Vec<RestartOutcome<T>> {
    range
        .into_par_iter()
        .map(|i| run_restart(objective, f, m, budget, i))
        .collect()
}

/// Best outcome; ties go to the lowest restart index.
fn merge<T: Real>(outcomes: &[RestartOutcome<T>]) -> Option<&RestartOutcome<T>> {
    outcomes.iter().fold(None, |best: Option<&RestartOutcome<T>>, o| match best {
        Some(b) if !(o.value > b.value) => Some(b),
        _ if o.value.is_nan() => best,
        _ => Some(o),
    })
}

fn check_budget(budget: &Budget) -> Result<()> {
    if budget.restarts == 0 {
        return Err(Error::ParameterOutOfRange {
            name: "restarts",
            value: 0.0,
            range: ">= 1",
        });
    }
    if budget.evals_per_restart < 16 {
        return Err(Error::ParameterOutOfRange {
            name: "evals_per_restart",
            value: budget.evals_per_restart as f64,
            range: ">= 16",
        });
    }
    Ok(())
}

/// Multi-start maximization; always returns the best point found together
/// with its convergence flag.
pub fn numeric_max_detailed<T: Real>(
    rho: &DensityMatrix<T>,
    objective: Objective,
    budget: &Budget,
) -> Result<OptimizationResult<T>> {
    check_budget(budget)?;
    let f = pauli_decompose(rho);
    let m = f.full_correlations();
    let outcomes = run_chunk(objective, &f, &m, budget, 0..budget.restarts);
    let best = merge(&outcomes).ok_or(Error::BudgetExhausted { best: f64::NAN })?;
    Ok(OptimizationResult {
        value: best.value,
        argmax: argmax_of(objective, &best.x, best.alt),
        evaluations: outcomes.iter().map(|o| o.evaluations).sum(),
        restarts: budget.restarts,
        converged: best.converged,
    })
}

/// As [`numeric_max_detailed`], but an unconverged search is an error
/// carrying the best value seen.
pub fn numeric_max<T: Real>(
    rho: &DensityMatrix<T>,
    objective: Objective,
    budget: &Budget,
) -> Result<OptimizationResult<T>> {
    let r = numeric_max_detailed(rho, objective, budget)?;
    if r.converged {
        Ok(r)
    } else {
        Err(Error::BudgetExhausted {
            best: r.value.to_f64_lossy(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NsVerdict {
    Separable,
    Entangled,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NsEvidence<T> {
    pub verdict: NsVerdict,
    /// Largest octet-inequality violation found (`lhs − rhs`).
    pub max_violation: T,
    /// Frames achieving `max_violation`.
    pub frames: SettingPair<T>,
    /// Minimum eigenvalue of the partial transpose.
    pub ppt_min_eigenvalue: T,
    /// Whether the optimizer met its convergence criterion; `true` when a
    /// violation ended the search early.
    pub converged: bool,
    /// The optimizer and the PPT oracle disagree.
    pub defect: bool,
    pub restarts_used: usize,
    pub evaluations: usize,
}

/// Candidate frames tried before any optimization: the named pairs and the
/// eigenframes of the correlation matrix in each cyclic axis order, for
/// both relative orientations.
fn structured_frames<T: Real>(f: &PauliForm<T>) -> Vec<SettingPair<T>> {
    let mut out: Vec<SettingPair<T>> = named_triples().into_values().collect();
    let nf = normal_form(f);
    for shift in 0..3 {
        let rows = |m: &Mat3<T>| [m[shift % 3], m[(shift + 1) % 3], m[(shift + 2) % 3]];
        let ra = rows(&nf.rot_a);
        let rb = rows(&nf.rot_b);
        let a = triple_from_rows(ra);
        let b = triple_from_rows(rb);
        out.push(SettingPair::new(a, b));
        out.push(SettingPair::new(a, b.flip_orientation()));
        let mut rb2 = rb;
        rb2[2] = linalg3::neg(&rb2[2]);
        let b2 = triple_from_rows(rb2);
        out.push(SettingPair::new(a, b2));
        out.push(SettingPair::new(a, b2.flip_orientation()));
    }
    out
}

fn triple_from_rows<T: Real>(rows: Mat3<T>) -> SpinTriple<T> {
    let h = if linalg3::det(&rows) < T::zero() { -1 } else { 1 };
    let mut r = linalg3::transpose(&rows);
    if h < 0 {
        for row in r.iter_mut() {
            row[2] = -row[2];
        }
    }
    SpinTriple::from_rotation(&r, h)
}

/// Separability verdict from the octet inequalities, cross-checked against
/// the partial transpose.
///
/// Entangled when some frame pair violates an inequality by more than
/// `tol.equality`. Separable only when the full budget ran, the optimizer
/// converged without finding a violation and the partial transpose is
/// positive. Every other combination is inconclusive; a disagreement with
/// the partial transpose sets `defect`.
pub fn ns_verdict<T: Real>(rho: &DensityMatrix<T>, budget: &Budget, tol: &Tolerances<T>) -> Result<NsEvidence<T>> {
    check_budget(budget)?;
    let f = pauli_decompose(rho);
    let m = f.full_correlations();
    let ppt_min = rho.pt_spectrum(tol)?.min();
    let ppt_entangled = ppt_min < -tol.psd;
    let threshold = tol.equality;

    let mut best_value = T::neg_infinity();
    let mut best_frames = SettingPair::pauli();
    for pair in structured_frames(&f) {
        let v = mixsep2_violation(&f, &pair);
        if v > best_value {
            best_value = v;
            best_frames = pair;
        }
    }
    let finish = |value: T, frames: SettingPair<T>, converged: bool, restarts: usize, evals: usize| {
        let violated = value > threshold;
        let (verdict, defect) = match (violated, ppt_entangled, converged) {
            (true, true, _) => (NsVerdict::Entangled, false),
            (true, false, _) => (NsVerdict::Inconclusive, true),
            (false, false, true) => (NsVerdict::Separable, false),
            (false, true, true) => (NsVerdict::Inconclusive, true),
            (false, _, false) => (NsVerdict::Inconclusive, false),
        };
        NsEvidence {
            verdict,
            max_violation: value,
            frames,
            ppt_min_eigenvalue: ppt_min,
            converged: converged || violated,
            defect,
            restarts_used: restarts,
            evaluations: evals,
        }
    };
    if best_value > threshold {
        return Ok(finish(best_value, best_frames, true, 0, 0));
    }

    let chunk = rayon::current_num_threads().clamp(4, 16);
    let mut outcomes: Vec<RestartOutcome<T>> = Vec::with_capacity(budget.restarts);
    let mut start = 0;
    while start < budget.restarts {
        let end = (start + chunk).min(budget.restarts);
        outcomes.extend(run_chunk(Objective::Mixsep2Slack, &f, &m, budget, start..end));
        start = end;
        if let Some(b) = merge(&outcomes) {
            if b.value > threshold {
                break;
            }
        }
    }
    let evals = outcomes.iter().map(|o| o.evaluations).sum();
    let used = outcomes.len();
    let best = merge(&outcomes).cloned();
    let (value, frames, converged) = match best {
        Some(b) if b.value > best_value => {
            let Argmax::Frames(p) = argmax_of(Objective::Mixsep2Slack, &b.x, b.alt) else {
                unreachable!("mixsep2 argmax is a frame pair")
            };
            (b.value, p, b.converged)
        }
        Some(b) => (best_value, best_frames, b.converged),
        None => (best_value, best_frames, false),
    };
    Ok(finish(value, frames, converged, used, evals))
}

/// Full octet report at the frames of an [`NsEvidence`].
pub fn evidence_reports<T: Real>(
    rho: &DensityMatrix<T>,
    e: &NsEvidence<T>,
    tol: &Tolerances<T>,
) -> crate::criteria::Mixsep2Report<T> {
    let means = OctetMeans::from_pauli(&pauli_decompose(rho), &e.frames);
    mixsep2_from_means(means, e.frames.same_orientation(), tol.equality, &describe_pair(&e.frames))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::{quad_lhs, LooBasis, loo_linear_witness};
    use crate::states::{noisy_singlet, random_mixed, werner, PureState};
    use approx::assert_abs_diff_eq;

    fn small() -> Budget {
        Budget {
            restarts: 16,
            evals_per_restart: 2000,
            tol: 1e-9,
            seed: 7,
        }
    }

    #[test]
    fn analytic_maxima() {
        let s = PureState::<f64>::singlet().density();
        assert_abs_diff_eq!(chsh_max_analytic(&s), 2.0 * 2f64.sqrt(), epsilon = 1e-12);
        assert_abs_diff_eq!(quad_max_orthogonal_analytic(&s), 4.0, epsilon = 1e-12);
        for p in [0.2, 0.6, 0.9] {
            let w = werner(p).unwrap();
            assert_abs_diff_eq!(chsh_max_analytic(&w), 2.0 * 2f64.sqrt() * p, epsilon = 1e-12);
            assert_abs_diff_eq!(quad_max_orthogonal_analytic(&w), 4.0 * p * p, epsilon = 1e-12);
        }
        let uu = PureState::<f64>::up_up().density();
        assert_abs_diff_eq!(chsh_max_analytic(&uu), 2.0, epsilon = 1e-12);
        assert_eq!(quad_max_orthogonal_analytic(&DensityMatrix::<f64>::maximally_mixed()), 0.0);
    }

    #[test]
    fn gap_examples() {
        assert!(lhv_gap_classify(&werner(0.6).unwrap(), 1e-9).gap_member);
        assert!(!lhv_gap_classify(&werner(0.8).unwrap(), 1e-9).gap_member);
        assert!(!lhv_gap_classify(&werner(0.5).unwrap(), 1e-9).gap_member);
        assert!(!lhv_gap_classify(&DensityMatrix::<f64>::maximally_mixed(), 1e-9).gap_member);
    }

    #[test]
    fn loo_analytic_matches_reference_bases_and_bounds_them() {
        let (a, b) = LooBasis::reference_pair();
        let tol = Tolerances::default();
        for p in [0.1, 0.3, 0.5, 0.9] {
            let rho = noisy_singlet(p).unwrap();
            let w = loo_linear_witness(&rho, &a, &b, &tol).lhs;
            assert!(loo_linear_optimal_analytic(&rho) <= w + 1e-12);
        }
        let s = PureState::<f64>::singlet().density();
        assert_abs_diff_eq!(loo_linear_optimal_analytic(&s), -1.0, epsilon = 1e-12);
    }

    #[test]
    fn so4_parameterization_is_orthogonal() {
        let x = [0.3, -1.2, 0.5, 2.0, -0.7, 0.1, 0.9, 0.4];
        for reflect in [false, true] {
            let o = loo_matrix(&x, reflect);
            for i in 0..4 {
                for j in 0..4 {
                    let d: f64 = (0..4).map(|k| o[i][k] * o[j][k]).sum();
                    assert!((d - if i == j { 1.0 } else { 0.0 }).abs() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn numeric_chsh_and_quad_match_analytic() {
        let w = werner(0.9).unwrap();
        let r = numeric_max(&w, Objective::Chsh, &small()).unwrap();
        assert!((r.value - 2.0 * 2f64.sqrt() * 0.9).abs() < 1e-3);
        let Argmax::Chsh(s) = r.argmax else { panic!() };
        let tol = Tolerances::default();
        let direct = crate::criteria::chsh(&w, &s, &tol).unwrap().lhs;
        assert!((direct - r.value).abs() < 1e-12);

        let singlet = PureState::<f64>::singlet().density();
        let q = numeric_max(&singlet, Objective::Quad, &small()).unwrap();
        assert!((q.value - 4.0).abs() < 1e-3);
        let Argmax::Frames(p) = q.argmax else { panic!() };
        let v = quad_lhs(&singlet, &ChshSettings::from_pair(&p), &tol).unwrap();
        assert!((v - q.value).abs() < 1e-12);
    }

    #[test]
    fn numeric_matches_analytic_on_random_states() {
        let mut rng = seeded_rng(41, 0);
        let budget = Budget {
            restarts: 8,
            ..small()
        };
        for _ in 0..10 {
            let rho = random_mixed::<f64, _>(&mut rng);
            let c = numeric_max_detailed(&rho, Objective::Chsh, &budget).unwrap();
            assert!((c.value - chsh_max_analytic(&rho)).abs() < 1e-3);
            let q = numeric_max_detailed(&rho, Objective::Quad, &budget).unwrap();
            assert!((q.value - quad_max_orthogonal_analytic(&rho)).abs() < 1e-3);
            let l = numeric_max_detailed(&rho, Objective::LooLinear, &budget).unwrap();
            assert!((-l.value - loo_linear_optimal_analytic(&rho)).abs() < 1e-3);
        }
    }

    #[test]
    fn mixsep2_slack_detects_werner_past_third() {
        let r = numeric_max_detailed(&werner(0.34).unwrap(), Objective::Mixsep2Slack, &small()).unwrap();
        assert!(r.value > 0.0);
    }

    #[test]
    fn deterministic_given_seed() {
        let rho = werner(0.7).unwrap();
        let b = Budget {
            restarts: 6,
            ..small()
        };
        let r1 = numeric_max_detailed(&rho, Objective::Mixsep2Slack, &b).unwrap();
        let r2 = numeric_max_detailed(&rho, Objective::Mixsep2Slack, &b).unwrap();
        assert_eq!(r1, r2);
    }

    #[test]
    fn budget_validation() {
        let rho = werner(0.7).unwrap();
        let b = Budget {
            restarts: 0,
            ..small()
        };
        assert!(numeric_max_detailed(&rho, Objective::Chsh, &b).is_err());
        let tiny = Budget {
            restarts: 1,
            evals_per_restart: 20,
            tol: 0.0,
            seed: 1,
        };
        assert!(matches!(
            numeric_max(&rho, Objective::Chsh, &tiny),
            Err(Error::BudgetExhausted { .. })
        ));
    }

    #[test]
    fn ns_verdict_examples() {
        let tol = Tolerances::default();
        let b = Budget::with_seed(3);
        let e = ns_verdict(&werner(0.5).unwrap(), &b, &tol).unwrap();
        assert_eq!(e.verdict, NsVerdict::Entangled);
        let e = ns_verdict(&werner(0.2).unwrap(), &b, &tol).unwrap();
        assert_eq!(e.verdict, NsVerdict::Separable, "{e:?}");
        let e = ns_verdict(&noisy_singlet(0.05).unwrap(), &b, &tol).unwrap();
        assert_eq!(e.verdict, NsVerdict::Entangled);
        let r = evidence_reports(&noisy_singlet(0.05).unwrap(), &e, &tol);
        assert!(r.any_violated());
    }
}
