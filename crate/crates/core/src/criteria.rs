//! Separability criteria evaluated on a state: Bell-type bounds, the quadratic
//! bounds for orthogonal triples, the octet inequalities, fidelity, LOO
//! witnesses and the partial-transpose oracle.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frames::{eight_operators, spin_operator, SettingPair, SpinTriple};
use crate::linalg3::{Mat3, Vec3};
use crate::qmat::{kron, partial_transpose, pauli, re, trace_product, Mat2, Mat4, Side};
use crate::scalar::Real;
use crate::states::{pauli_decompose, schmidt, DensityMatrix, PauliForm, PureState};
use crate::tolerance::Tolerances;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Satisfied,
    Violated,
}

/// Whether the criterion demands `lhs ≤ rhs` or `lhs ≥ rhs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sense {
    UpperBound,
    LowerBound,
}

/// Outcome of one criterion. `slack ≥ 0` means the separable-state bound
/// holds; the verdict is `Violated` iff `slack < −tolerance`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriterionReport<T> {
    pub name: String,
    pub lhs: T,
    pub rhs: T,
    pub slack: T,
    pub verdict: Verdict,
    pub tolerance: T,
    pub sense: Sense,
    pub settings: String,
}

impl<T: Real> CriterionReport<T> {
    pub fn new(name: impl Into<String>, lhs: T, rhs: T, sense: Sense, tolerance: T, settings: String) -> Self {
        let slack = match sense {
            Sense::UpperBound => rhs - lhs,
            Sense::LowerBound => lhs - rhs,
        };
        let verdict = if slack < -tolerance {
            Verdict::Violated
        } else {
            Verdict::Satisfied
        };
        Self {
            name: name.into(),
            lhs,
            rhs,
            slack,
            verdict,
            tolerance,
            sense,
            settings,
        }
    }

    pub fn upper(name: impl Into<String>, lhs: T, rhs: T, tolerance: T, settings: String) -> Self {
        Self::new(name, lhs, rhs, Sense::UpperBound, tolerance, settings)
    }

    pub fn lower(name: impl Into<String>, lhs: T, rhs: T, tolerance: T, settings: String) -> Self {
        Self::new(name, lhs, rhs, Sense::LowerBound, tolerance, settings)
    }

    pub fn violated(&self) -> bool {
        self.verdict == Verdict::Violated
    }
}

fn fmt_vec<T: Real>(out: &mut String, v: &Vec3<T>) {
    let _ = write!(
        out,
        "({:.6},{:.6},{:.6})",
        v[0].to_f64_lossy(),
        v[1].to_f64_lossy(),
        v[2].to_f64_lossy()
    );
}

pub fn describe_triple<T: Real>(t: &SpinTriple<T>) -> String {
    let mut s = String::new();
    for (k, axis) in t.axes().iter().enumerate() {
        if k > 0 {
            s.push(' ');
        }
        fmt_vec(&mut s, axis);
    }
    s
}

pub fn describe_pair<T: Real>(p: &SettingPair<T>) -> String {
    format!("A=[{}] B=[{}]", describe_triple(&p.a), describe_triple(&p.b))
}

/// Four spin directions for a CHSH experiment; orthogonality not required.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChshSettings<T> {
    pub a: Vec3<T>,
    pub a1: Vec3<T>,
    pub b: Vec3<T>,
    pub b1: Vec3<T>,
}

impl<T: Real> ChshSettings<T> {
    pub fn new(a: Vec3<T>, a1: Vec3<T>, b: Vec3<T>, b1: Vec3<T>) -> Self {
        Self { a, a1, b, b1 }
    }

    /// `(A, A′)` and `(B, B′)` of a setting pair.
    pub fn from_pair(p: &SettingPair<T>) -> Self {
        Self::new(*p.a.axis(0), *p.a.axis(1), *p.b.axis(0), *p.b.axis(1))
    }

    pub fn describe(&self) -> String {
        let mut s = String::new();
        for (label, v) in [("a=", &self.a), (" a'=", &self.a1), (" b=", &self.b), (" b'=", &self.b1)] {
            s.push_str(label);
            fmt_vec(&mut s, v);
        }
        s
    }
}

/// The four correlators `⟨AB⟩, ⟨AB′⟩, ⟨A′B⟩, ⟨A′B′⟩`.
fn correlators<T: Real>(rho: &DensityMatrix<T>, s: &ChshSettings<T>, tol: T) -> Result<[T; 4]> {
    let a = spin_operator(&s.a, tol)?;
    let a1 = spin_operator(&s.a1, tol)?;
    let b = spin_operator(&s.b, tol)?;
    let b1 = spin_operator(&s.b1, tol)?;
    let e = |x: &Mat2<T>, y: &Mat2<T>| rho.expect(&kron(x, y));
    Ok([e(&a, &b), e(&a, &b1), e(&a1, &b), e(&a1, &b1)])
}

fn chsh_value<T: Real>(e: [T; 4]) -> T {
    (e[0] + e[1] + e[2] - e[3]).abs()
}

fn quad_value<T: Real>(e: [T; 4]) -> T {
    let y = e[1] + e[2];
    let x = e[0] - e[3];
    y * y + x * x
}

/// `|⟨AB + AB′ + A′B − A′B′⟩| ≤ 2`.
pub fn chsh<T: Real>(rho: &DensityMatrix<T>, s: &ChshSettings<T>, tol: &Tolerances<T>) -> Result<CriterionReport<T>> {
    let v = chsh_value(correlators(rho, s, tol.unit)?);
    Ok(CriterionReport::upper("chsh", v, T::lit(2.0), tol.equality, s.describe()))
}

/// The same expression against the quantum maximum `2√2`.
pub fn cirelson<T: Real>(rho: &DensityMatrix<T>, s: &ChshSettings<T>, tol: &Tolerances<T>) -> Result<CriterionReport<T>> {
    let v = chsh_value(correlators(rho, s, tol.unit)?);
    let rhs = T::lit(2.0) * T::SQRT_2();
    Ok(CriterionReport::upper("cirelson", v, rhs, tol.equality, s.describe()))
}

/// `⟨AB′ + A′B⟩² + ⟨AB − A′B′⟩²`.
pub fn quad_lhs<T: Real>(rho: &DensityMatrix<T>, s: &ChshSettings<T>, tol: &Tolerances<T>) -> Result<T> {
    Ok(quad_value(correlators(rho, s, tol.unit)?))
}

/// `quad_lhs ≤ 4`, valid for every state.
pub fn quad<T: Real>(rho: &DensityMatrix<T>, s: &ChshSettings<T>, tol: &Tolerances<T>) -> Result<CriterionReport<T>> {
    let v = quad_lhs(rho, s, tol)?;
    Ok(CriterionReport::upper("quad", v, T::lit(4.0), tol.equality, s.describe()))
}

/// `quad_lhs ≤ (1 − ⟨A″⟩²)(1 − ⟨B″⟩²)` for separable states.
pub fn sep_bound_eq7<T: Real>(rho: &DensityMatrix<T>, pair: &SettingPair<T>, tol: &Tolerances<T>) -> CriterionReport<T> {
    let m = octet_means(rho, pair);
    let lhs = T::lit(4.0) * (m.x * m.x + m.y * m.y);
    let (a2, b2) = (m.a2_mean(), m.b2_mean());
    let rhs = (T::one() - a2 * a2) * (T::one() - b2 * b2);
    CriterionReport::upper("eq7", lhs, rhs, tol.equality, describe_pair(pair))
}

/// `|⟨AB + AB′ + A′B − A′B′⟩| ≤ √2` for separable states and orthogonal
/// settings.
pub fn roy_check<T: Real>(rho: &DensityMatrix<T>, pair: &SettingPair<T>, tol: &Tolerances<T>) -> CriterionReport<T> {
    let o = eight_operators(pair);
    // AB + AB′ + A′B − A′B′ = (AB − A′B′) + (AB′ + A′B) = 2X + 2Y.
    let v = (T::lit(2.0) * (rho.expect(&o.x) + rho.expect(&o.y))).abs();
    CriterionReport::upper("roy", v, T::SQRT_2(), tol.equality, describe_pair(pair))
}

/// Expectations of the eight octet operators.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OctetMeans<T> {
    pub i: T,
    pub i_t: T,
    pub x: T,
    pub x_t: T,
    pub y: T,
    pub y_t: T,
    pub z: T,
    pub z_t: T,
}

impl<T: Real> OctetMeans<T> {
    /// The same means from Bloch data, without forming 4×4 operators.
    pub fn from_pauli(f: &PauliForm<T>, pair: &SettingPair<T>) -> Self {
        let [a, a1, a2] = *pair.a.axes();
        let [b, b1, b2] = *pair.b.axes();
        let half = T::lit(0.5);
        let e = |u: &Vec3<T>, v: &Vec3<T>| f.correlation(u, v);
        let (ab, a1b1, a1b, ab1, a2b2) = (e(&a, &b), e(&a1, &b1), e(&a1, &b), e(&a, &b1), e(&a2, &b2));
        let (la, lb) = (f.local_a(&a2), f.local_b(&b2));
        Self {
            i: half * (T::one() + a2b2),
            i_t: half * (T::one() - a2b2),
            x: half * (ab - a1b1),
            x_t: half * (ab + a1b1),
            y: half * (a1b + ab1),
            y_t: half * (a1b - ab1),
            z: half * (la + lb),
            z_t: half * (la - lb),
        }
    }

    pub fn as_array(&self) -> [T; 8] {
        [self.i, self.i_t, self.x, self.x_t, self.y, self.y_t, self.z, self.z_t]
    }

    /// `⟨A″⟩ = Z + Z̃`.
    pub fn a2_mean(&self) -> T {
        self.z + self.z_t
    }

    /// `⟨B″⟩ = Z − Z̃`.
    pub fn b2_mean(&self) -> T {
        self.z - self.z_t
    }

    /// `⟨A″B″⟩ = I − Ĩ`.
    pub fn a2b2_mean(&self) -> T {
        self.i - self.i_t
    }

    pub fn plain_radius2(&self) -> T {
        self.x * self.x + self.y * self.y
    }

    pub fn tilde_radius2(&self) -> T {
        self.x_t * self.x_t + self.y_t * self.y_t
    }

    /// `⟨I⟩² − ⟨Z⟩²`.
    pub fn plain_bound(&self) -> T {
        self.i * self.i - self.z * self.z
    }

    /// `⟨Ĩ⟩² − ⟨Z̃⟩²`.
    pub fn tilde_bound(&self) -> T {
        self.i_t * self.i_t - self.z_t * self.z_t
    }

    /// Slacks of the four octet inequalities, in report order:
    /// 1. `X² + Y² ≤ Ĩ² − Z̃²`
    /// 2. `X̃² + Ỹ² ≤ I² − Z²`
    /// 3. `X² + Y² ≤ I² − Z²`
    /// 4. `X̃² + Ỹ² ≤ Ĩ² − Z̃²`
    pub fn mixsep2_sides(&self) -> [(T, T); 4] {
        let (p, t) = (self.plain_radius2(), self.tilde_radius2());
        let (pb, tb) = (self.plain_bound(), self.tilde_bound());
        [(p, tb), (t, pb), (p, pb), (t, tb)]
    }
}

pub fn octet_means<T: Real>(rho: &DensityMatrix<T>, pair: &SettingPair<T>) -> OctetMeans<T> {
    let o = eight_operators(pair);
    let e = |m: &Mat4<T>| rho.expect(m);
    OctetMeans {
        i: e(&o.i),
        i_t: e(&o.i_t),
        x: e(&o.x),
        x_t: e(&o.x_t),
        y: e(&o.y),
        y_t: e(&o.y_t),
        z: e(&o.z),
        z_t: e(&o.z_t),
    }
}

/// Which two of the four inequalities can be violated at all: 1 and 2 for
/// equally oriented triples, 3 and 4 otherwise.
pub fn mixsep2_nontrivial(same_orientation: bool) -> [bool; 4] {
    if same_orientation {
        [true, true, false, false]
    } else {
        [false, false, true, true]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Mixsep2Report<T> {
    pub reports: [CriterionReport<T>; 4],
    pub nontrivial: [bool; 4],
    pub means: OctetMeans<T>,
}

impl<T: Real> Mixsep2Report<T> {
    pub fn any_violated(&self) -> bool {
        self.reports.iter().any(|r| r.violated())
    }

    pub fn min_slack(&self) -> T {
        self.reports.iter().map(|r| r.slack).fold(T::infinity(), T::min)
    }
}

pub fn mixsep2_from_means<T: Real>(
    means: OctetMeans<T>,
    same_orientation: bool,
    tol: T,
    settings: &str,
) -> Mixsep2Report<T> {
    let names = ["mixsep2_1", "mixsep2_2", "mixsep2_3", "mixsep2_4"];
    let sides = means.mixsep2_sides();
    let reports = [0, 1, 2, 3].map(|k| {
        CriterionReport::upper(names[k], sides[k].0, sides[k].1, tol, settings.to_string())
    });
    Mixsep2Report {
        reports,
        nontrivial: mixsep2_nontrivial(same_orientation),
        means,
    }
}

/// All four octet inequalities; any violation certifies entanglement.
pub fn mixsep2<T: Real>(rho: &DensityMatrix<T>, pair: &SettingPair<T>, tol: &Tolerances<T>) -> Mixsep2Report<T> {
    mixsep2_from_means(
        octet_means(rho, pair),
        pair.same_orientation(),
        tol.equality,
        &describe_pair(pair),
    )
}

/// Ordering of the three candidate right-hand sides, governed by the
/// correlation coefficient `C = ⟨A″B″⟩ − ⟨A″⟩⟨B″⟩`.
///
/// `(I² − Z²) − q = ¼·C·(2 + ⟨A″B″⟩ + ⟨A″⟩⟨B″⟩)` and
/// `(Ĩ² − Z̃²) − q = −¼·C·(2 − ⟨A″B″⟩ − ⟨A″⟩⟨B″⟩)` with
/// `q = ¼(1 − ⟨A″⟩²)(1 − ⟨B″⟩²)`, so `C ≥ 0` gives
/// `Ĩ² − Z̃² ≤ q ≤ I² − Z²` and `C ≤ 0` the reverse.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundOrdering<T> {
    pub correlation: T,
    pub plain: T,
    pub quarter: T,
    pub tilde: T,
}

impl<T: Real> BoundOrdering<T> {
    pub fn from_means(m: &OctetMeans<T>) -> Self {
        let (a, b) = (m.a2_mean(), m.b2_mean());
        Self {
            correlation: m.a2b2_mean() - a * b,
            plain: m.plain_bound(),
            quarter: T::lit(0.25) * (T::one() - a * a) * (T::one() - b * b),
            tilde: m.tilde_bound(),
        }
    }

    /// The predicted values in ascending order, as `(smallest, middle, largest)`.
    pub fn predicted(&self) -> (T, T, T) {
        if self.correlation >= T::zero() {
            (self.tilde, self.quarter, self.plain)
        } else {
            (self.plain, self.quarter, self.tilde)
        }
    }

    /// The tighter of the two octet bounds.
    pub fn sharper_bound(&self) -> T {
        self.predicted().0
    }

    pub fn holds(&self, tol: T) -> bool {
        let (lo, mid, hi) = self.predicted();
        lo <= mid + tol && mid <= hi + tol
    }
}

pub fn ordering_eq18<T: Real>(rho: &DensityMatrix<T>, pair: &SettingPair<T>) -> BoundOrdering<T> {
    BoundOrdering::from_means(&octet_means(rho, pair))
}

/// `F = ½(ρ₀₀ + ρ₃₃) + |ρ₀₃| ≤ ½`: maximal overlap with `(|↑↑⟩ + e^{iα}|↓↓⟩)/√2`.
pub fn fidelity<T: Real>(rho: &DensityMatrix<T>, tol: &Tolerances<T>) -> CriterionReport<T> {
    let half = T::lit(0.5);
    let f = half * (rho.element(0, 0).re + rho.element(3, 3).re) + rho.element(0, 3).norm();
    CriterionReport::upper("fidelity", f, half, tol.equality, "phi_plus family".into())
}

/// `2|ρ₀₃| ≤ ρ₁₁ + ρ₂₂`, the trace-one rewriting of the fidelity bound.
pub fn fid2<T: Real>(rho: &DensityMatrix<T>, tol: &Tolerances<T>) -> CriterionReport<T> {
    let lhs = T::lit(2.0) * rho.element(0, 3).norm();
    let rhs = rho.element(1, 1).re + rho.element(2, 2).re;
    CriterionReport::upper("fid2", lhs, rhs, tol.equality, "phi_plus family".into())
}

/// Four Hermitian 2×2 operators with `Tr[G_k G_l] = δ_kl`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LooBasis<T> {
    ops: [Mat2<T>; 4],
}

impl<T: Real> LooBasis<T> {
    pub fn new(ops: [Mat2<T>; 4], tol: &Tolerances<T>) -> Result<Self> {
        let mut dev = T::zero();
        for (k, g) in ops.iter().enumerate() {
            dev = dev.max(g.hermiticity_deviation());
            for (l, h) in ops.iter().enumerate() {
                let want = if k == l { T::one() } else { T::zero() };
                dev = dev.max((trace_product(g, h) - re(want)).norm());
            }
        }
        if !(dev <= tol.orthonormal) {
            return Err(Error::NotLooBasis {
                deviation: dev.to_f64_lossy(),
            });
        }
        Ok(Self { ops })
    }

    /// `{s·A, s·A′, s·A″, 𝟙}/√2` with `s = −1` when `negate` is set.
    pub fn from_triple(t: &SpinTriple<T>, negate: bool) -> Self {
        let k = T::FRAC_1_SQRT_2();
        let s = if negate { -k } else { k };
        let [a, a1, a2] = t.observables();
        Self {
            ops: [a.scale(s), a1.scale(s), a2.scale(s), Mat2::identity().scale(k)],
        }
    }

    /// `G_k = Σ_μ O_kμ σ_μ / √2` for a real orthogonal 4×4 `O` (with `σ_0 = 𝟙`).
    pub fn from_orthogonal(o: &[[T; 4]; 4], tol: &Tolerances<T>) -> Result<Self> {
        let k = T::FRAC_1_SQRT_2();
        let ops = [0, 1, 2, 3].map(|row| {
            (0..4).fold(Mat2::zeros(), |acc, mu| acc + pauli(mu).scale(o[row][mu] * k))
        });
        Self::new(ops, tol)
    }

    /// `{−σx, −σy, −σz, 𝟙}/√2` for particle 1 and `{σx, σy, σz, 𝟙}/√2` for
    /// particle 2.
    pub fn reference_pair() -> (Self, Self) {
        let p = SpinTriple::pauli();
        (Self::from_triple(&p, true), Self::from_triple(&p, false))
    }

    pub fn ops(&self) -> &[Mat2<T>; 4] {
        &self.ops
    }
}

fn loo_parts<T: Real>(rho: &DensityMatrix<T>, a: &LooBasis<T>, b: &LooBasis<T>) -> (T, T) {
    let one = Mat2::identity();
    let mut corr = T::zero();
    let mut local = T::zero();
    for (ga, gb) in a.ops.iter().zip(&b.ops) {
        corr += rho.expect(&kron(ga, gb));
        let d = rho.expect(&kron(ga, &one)) - rho.expect(&kron(&one, gb));
        local += d * d;
    }
    (T::one() - corr, local)
}

/// `W = 1 − Σ_k ⟨G_k^A ⊗ G_k^B⟩ ≥ 0` for separable states.
pub fn loo_linear_witness<T: Real>(
    rho: &DensityMatrix<T>,
    a: &LooBasis<T>,
    b: &LooBasis<T>,
    tol: &Tolerances<T>,
) -> CriterionReport<T> {
    let (w, _) = loo_parts(rho, a, b);
    CriterionReport::lower("loo_linear", w, T::zero(), tol.equality, "loo".into())
}

/// `F = W − ½ Σ_k ⟨G_k^A ⊗ 𝟙 − 𝟙 ⊗ G_k^B⟩² ≥ 0` for separable states.
pub fn loo_nonlinear_witness<T: Real>(
    rho: &DensityMatrix<T>,
    a: &LooBasis<T>,
    b: &LooBasis<T>,
    tol: &Tolerances<T>,
) -> CriterionReport<T> {
    let (w, local) = loo_parts(rho, a, b);
    let v = w - T::lit(0.5) * local;
    CriterionReport::lower("loo_nonlinear", v, T::zero(), tol.equality, "loo".into())
}

/// Minimum eigenvalue of the partial transpose; negative iff entangled.
pub fn ppt<T: Real>(rho: &DensityMatrix<T>, tol: &Tolerances<T>) -> Result<CriterionReport<T>> {
    let lmin = rho.pt_spectrum(tol)?.min();
    Ok(CriterionReport::lower("ppt", lmin, T::zero(), tol.psd, "partial transpose on particle 2".into()))
}

/// Both sides of the bound chain for `⟨Ψ|ρᴾᵀ|Ψ⟩`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SchmidtPtBound<T> {
    /// `Ψ = √p|↑↓⟩ + √(1−p)|↓↑⟩` in the Schmidt bases.
    pub p: T,
    /// Triples whose third axes have the Schmidt vectors as eigenvectors.
    pub pair: SettingPair<T>,
    pub means: OctetMeans<T>,
    /// `⟨Ψ|ρᴾᵀ|Ψ⟩`, transpose taken in particle 2's Schmidt basis.
    pub direct: T,
    /// `½⟨Ĩ⟩ + (p − ½)⟨Z̃⟩ + √(p(1−p))⟨X⟩`.
    pub expansion: T,
    /// `½⟨Ĩ⟩ − ½√(⟨Z̃⟩² + ⟨X⟩²)`.
    pub lower_bound: T,
}

/// The Bloch rotation `R_jk = ½ Tr[σ_j W σ_k W†]` of a 2×2 unitary `W`.
fn adjoint_rotation<T: Real>(w: &Mat2<T>) -> Mat3<T> {
    let mut r = [[T::zero(); 3]; 3];
    let half = T::lit(0.5);
    for (k, col) in (1..=3).enumerate() {
        let conj = *w * pauli(col) * w.adjoint();
        for j in 0..3 {
            r[j][k] = half * trace_product(&pauli(j + 1), &conj).re;
        }
    }
    r
}

pub fn appendix_c_bound<T: Real>(rho: &DensityMatrix<T>, psi: &PureState<T>) -> SchmidtPtBound<T> {
    let sf = schmidt(psi);
    // Ψ = r|a₀b₁⟩ − s|a₁b₀⟩ = r|↑↓⟩ + s|↓↑⟩ with ↑ = a₀, ↓ = −a₁ on
    // particle 1 and ↑ = b₀, ↓ = b₁ on particle 2.
    let mut wa = sf.basis_a;
    wa[(0, 1)] = -wa[(0, 1)];
    wa[(1, 1)] = -wa[(1, 1)];
    let wb = sf.basis_b;
    let pair = SettingPair::new(
        SpinTriple::from_rotation(&adjoint_rotation(&wa), 1),
        SpinTriple::from_rotation(&adjoint_rotation(&wb), 1),
    );
    let means = octet_means(rho, &pair);
    let p = sf.r * sf.r;

    let w = kron(&wa, &wb);
    let local = w.adjoint() * *rho.matrix() * w;
    let pt = partial_transpose(&local, Side::Second);
    let zero = re(T::zero());
    let v = [zero, re(sf.r), re(sf.s), zero];
    let direct = pt.sandwich(&v, &v).re;

    let half = T::lit(0.5);
    let expansion = half * means.i_t + (p - half) * means.z_t + (p * (T::one() - p)).max(T::zero()).sqrt() * means.x;
    let lower_bound = half * means.i_t - half * (means.z_t * means.z_t + means.x * means.x).sqrt();
    SchmidtPtBound {
        p,
        pair,
        means,
        direct,
        expansion,
        lower_bound,
    }
}

/// Bloch-route octet means for a state.
pub fn octet_means_bloch<T: Real>(rho: &DensityMatrix<T>, pair: &SettingPair<T>) -> OctetMeans<T> {
    OctetMeans::from_pauli(&pauli_decompose(rho), pair)
}
