//! Finite separability test for pure states: the octet inequalities at three
//! fixed setting pairs, and the residual equations they reduce to.

use serde::{Deserialize, Serialize};

use crate::criteria::{mixsep2, CriterionReport};
use crate::frames::NamedSetting;
use crate::qmat::{c, Complex};
use crate::scalar::Real;
use crate::states::PureState;
use crate::tolerance::Tolerances;

/// The complete family α, β′, γ′.
pub const PRIME_FAMILY: [NamedSetting; 3] = [NamedSetting::Alpha, NamedSetting::BetaPrime, NamedSetting::GammaPrime];

/// The permutation family α, β, γ, which misses some entangled states.
pub const PERMUTATION_FAMILY: [NamedSetting; 3] = [NamedSetting::Alpha, NamedSetting::Beta, NamedSetting::Gamma];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PureVerdict {
    Separable,
    Entangled,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InequalitySelection {
    /// The two orientation-nontrivial inequalities per pair.
    #[default]
    Nontrivial,
    /// All four inequalities per pair.
    AllFour,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PureTestReport<T> {
    pub family: [NamedSetting; 3],
    /// Reports grouped by pair, in family order.
    pub reports: Vec<CriterionReport<T>>,
    pub residuals_abg: [T; 3],
    pub residuals_prime: [T; 3],
    pub verdict: PureVerdict,
    /// Smallest slack is within `10·tol` of zero.
    pub boundary: bool,
    pub min_slack: T,
    /// `|ad − bc|`, the product of the Schmidt coefficients.
    pub schmidt_rs: T,
}

/// Octet inequalities of `psi` at the three pairs of `family`.
pub fn family_test<T: Real>(
    psi: &PureState<T>,
    family: [NamedSetting; 3],
    selection: InequalitySelection,
    tol: &Tolerances<T>,
) -> PureTestReport<T> {
    let rho = psi.density();
    let mut reports = Vec::with_capacity(12);
    for setting in family {
        let pair = setting.pair();
        let r = mixsep2(&rho, &pair, tol);
        for (k, mut rep) in r.reports.into_iter().enumerate() {
            if selection == InequalitySelection::AllFour || r.nontrivial[k] {
                rep.settings = format!("{} {}", setting.name(), rep.settings);
                reports.push(rep);
            }
        }
    }
    let min_slack = reports.iter().map(|r| r.slack).fold(T::infinity(), T::min);
    let verdict = if min_slack >= -tol.equality {
        PureVerdict::Separable
    } else {
        PureVerdict::Entangled
    };
    PureTestReport {
        family,
        reports,
        residuals_abg: residuals_alpha_beta_gamma(psi),
        residuals_prime: residuals_prime(psi),
        verdict,
        boundary: min_slack.abs() <= T::lit(10.0) * tol.equality,
        min_slack,
        schmidt_rs: psi.product_residual().norm(),
    }
}

/// The two nontrivial inequalities at each of α, β′, γ′.
pub fn six_inequality_test<T: Real>(psi: &PureState<T>, tol: &Tolerances<T>) -> PureTestReport<T> {
    family_test(psi, PRIME_FAMILY, InequalitySelection::Nontrivial, tol)
}

/// `| |ad| − |bc| |`, `| |(a+d)² − (b+c)²| − |(a−d)² − (b−c)²| |`,
/// `| |(b+c)² + (a−d)²| − |(b−c)² + (a+d)²| |`.
pub fn residuals_alpha_beta_gamma<T: Real>(psi: &PureState<T>) -> [T; 3] {
    let [a, b, cc, d] = *psi.amplitudes();
    let sq = |z: Complex<T>| z * z;
    [
        ((a * d).norm() - (b * cc).norm()).abs(),
        ((sq(a + d) - sq(b + cc)).norm() - (sq(a - d) - sq(b - cc)).norm()).abs(),
        ((sq(b + cc) + sq(a - d)).norm() - (sq(b - cc) + sq(a + d)).norm()).abs(),
    ]
}

/// `| |ad| − |bc| |`, `| |(a+c)(b−d)| − |(a−c)(b+d)| |`,
/// `| |(a+ic)(b−id)| − |(a−ic)(b+id)| |`.
pub fn residuals_prime<T: Real>(psi: &PureState<T>) -> [T; 3] {
    let [a, b, cc, d] = *psi.amplitudes();
    let i = c(T::zero(), T::one());
    [
        ((a * d).norm() - (b * cc).norm()).abs(),
        (((a + cc) * (b - d)).norm() - ((a - cc) * (b + d)).norm()).abs(),
        (((a + i * cc) * (b - i * d)).norm() - ((a - i * cc) * (b + i * d)).norm()).abs(),
    ]
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EquivalenceRecord<T> {
    pub inequalities_satisfied: bool,
    pub residuals_vanish: bool,
    pub consistent: bool,
    pub min_slack: T,
    pub residuals_prime: [T; 3],
}

/// Checks that the six inequalities hold exactly when the primed residuals
/// vanish to within `residual_tol`.
pub fn residual_equivalence_check<T: Real>(
    psi: &PureState<T>,
    tol: &Tolerances<T>,
    residual_tol: T,
) -> EquivalenceRecord<T> {
    let report = six_inequality_test(psi, tol);
    let inequalities_satisfied = report.verdict == PureVerdict::Separable;
    let residuals_vanish = report.residuals_prime.iter().all(|&r| r <= residual_tol);
    EquivalenceRecord {
        inequalities_satisfied,
        residuals_vanish,
        consistent: inequalities_satisfied == residuals_vanish,
        min_slack: report.min_slack,
        residuals_prime: report.residuals_prime,
    }
}

/// `(i|↑↑⟩ − |↑↓⟩ + i|↓↑⟩ + |↓↓⟩)/2`: entangled, yet it satisfies every
/// inequality of the permutation family.
pub fn counterexample<T: Real>() -> PureState<T> {
    let h = T::lit(0.5);
    PureState::normalized([c(T::zero(), h), c(-h, T::zero()), c(T::zero(), h), c(h, T::zero())])
        .expect("nonzero amplitudes")
}
