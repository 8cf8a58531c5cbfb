use proptest::prelude::*;
use rand::Rng as _;

use sepbell::criteria::{
    chsh, fid2, fidelity, loo_linear_witness, loo_nonlinear_witness, mixsep2, octet_means, ordering_eq18, ppt,
    quad_lhs, sep_bound_eq7, ChshSettings, LooBasis,
};
use sepbell::frames::eight_operators;
use sepbell::linalg3::{self, Vec3};
use sepbell::optimize::{
    chsh_max_analytic, lhv_gap_classify, numeric_max_detailed, quad_max_orthogonal_analytic, Argmax,
};
use sepbell::puretest::six_inequality_test;
use sepbell::qmat::{hermitian_eigen, kron, partial_transpose, pauli, sigma_x, Complex, Mat2, Side};
use sepbell::states::{
    pauli_compose, pauli_decompose, random_mixed, random_product_pure, random_pure, random_rotation,
    random_separable, random_unit_vector, schmidt, seeded_rng, werner,
};
use sepbell::{Budget, DensityMatrix, Objective, PureState, PureVerdict, SettingPair, SpinTriple, Tolerances};

type Rng = rand_chacha::ChaCha8Rng;

fn tol() -> Tolerances<f64> {
    Tolerances::default()
}

fn random_triple(rng: &mut Rng, handedness: i8) -> SpinTriple<f64> {
    SpinTriple::from_rotation(&random_rotation(rng), handedness)
}

fn random_pair(rng: &mut Rng, same: bool) -> SettingPair<f64> {
    SettingPair::new(random_triple(rng, 1), random_triple(rng, if same { 1 } else { -1 }))
}

fn random_settings(rng: &mut Rng) -> ChshSettings<f64> {
    ChshSettings::new(
        random_unit_vector(rng),
        random_unit_vector(rng),
        random_unit_vector(rng),
        random_unit_vector(rng),
    )
}

fn mat2(v: [f64; 8]) -> Mat2<f64> {
    Mat2::from_rows([
        [Complex::new(v[0], v[1]), Complex::new(v[2], v[3])],
        [Complex::new(v[4], v[5]), Complex::new(v[6], v[7])],
    ])
}

fn entries() -> impl Strategy<Value = [f64; 8]> {
    prop::array::uniform8(-2.0f64..2.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn kron_mixed_product(a in entries(), b in entries(), c in entries(), d in entries()) {
        let (a, b, c, d) = (mat2(a), mat2(b), mat2(c), mat2(d));
        let lhs = kron(&a, &b) * kron(&c, &d);
        let rhs = kron(&(a * c), &(b * d));
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-12);
    }

    #[test]
    fn partial_transpose_keeps_hermiticity_and_trace(seed in any::<u64>()) {
        let rho: DensityMatrix<f64> = random_mixed(&mut seeded_rng(seed, 0));
        for side in [Side::First, Side::Second] {
            let pt = partial_transpose(rho.matrix(), side);
            prop_assert_eq!(pt.hermiticity_deviation(), 0.0);
            prop_assert_eq!(pt.trace(), rho.matrix().trace());
        }
    }

    #[test]
    fn spectrum_sums_to_trace(seed in any::<u64>()) {
        let rho: DensityMatrix<f64> = random_mixed(&mut seeded_rng(seed, 0));
        let pt = partial_transpose(rho.matrix(), Side::Second);
        let s = hermitian_eigen(&pt, 1e-10).unwrap();
        prop_assert!((s.eigenvalues.iter().sum::<f64>() - 1.0).abs() < 1e-9);
        prop_assert!(s.min() >= -0.5 - 1e-9);
    }

    #[test]
    fn spin_products_have_bounded_expectation(seed in any::<u64>()) {
        let mut rng = seeded_rng(seed, 0);
        let rho: DensityMatrix<f64> = random_mixed(&mut rng);
        let n: Vec3<f64> = random_unit_vector(&mut rng);
        let m: Vec3<f64> = random_unit_vector(&mut rng);
        let op = |v: &Vec3<f64>| (1..4).fold(Mat2::zeros(), |acc, k| acc + pauli(k).scale(v[k - 1]));
        prop_assert!(rho.expect(&kron(&op(&n), &op(&m))).abs() <= 1.0 + 1e-10);
    }

    #[test]
    fn pauli_round_trip(seed in any::<u64>()) {
        let rho: DensityMatrix<f64> = random_mixed(&mut seeded_rng(seed, 0));
        let back = pauli_compose(&pauli_decompose(&rho), &tol()).unwrap();
        prop_assert!(back.matrix().max_abs_diff(rho.matrix()) < 1e-10);
    }

    #[test]
    fn schmidt_product_matches_determinant(seed in any::<u64>()) {
        let psi: PureState<f64> = random_pure(&mut seeded_rng(seed, 0));
        let sf = schmidt(&psi);
        prop_assert!((sf.r * sf.s - psi.product_residual().norm()).abs() < 1e-10);
    }

    #[test]
    fn werner_ppt_threshold(p in 0.0f64..=1.0) {
        let entangled = ppt(&werner(p).unwrap(), &tol()).unwrap().violated();
        prop_assert_eq!(entangled, p > 1.0 / 3.0 + 1e-9);
    }

    #[test]
    fn cirelson_and_quadratic_bounds(seed in any::<u64>()) {
        let mut rng = seeded_rng(seed, 0);
        let rho: DensityMatrix<f64> = random_mixed(&mut rng);
        let s = random_settings(&mut rng);
        prop_assert!(chsh(&rho, &s, &tol()).unwrap().lhs <= 2.0 * 2f64.sqrt() + 1e-9);
        prop_assert!(quad_lhs(&rho, &s, &tol()).unwrap() <= 4.0 + 1e-9);
        let same = rng.random();
        let pair = random_pair(&mut rng, same);
        prop_assert!(quad_lhs(&rho, &ChshSettings::from_pair(&pair), &tol()).unwrap() <= 4.0 + 1e-9);
    }

    #[test]
    fn octet_squares_are_sector_projectors(seed in any::<u64>(), same in any::<bool>()) {
        let pair = random_pair(&mut seeded_rng(seed, 0), same);
        let o = eight_operators(&pair);
        let (own, other) = if same { (o.i, o.i_t) } else { (o.i_t, o.i) };
        prop_assert!((o.z * o.z).max_abs_diff(&o.i) < 1e-10);
        prop_assert!((o.z_t * o.z_t).max_abs_diff(&o.i_t) < 1e-10);
        for m in [o.x, o.y] {
            prop_assert!((m * m).max_abs_diff(&own) < 1e-10);
        }
        for m in [o.x_t, o.y_t] {
            prop_assert!((m * m).max_abs_diff(&other) < 1e-10);
        }
    }

    #[test]
    fn bloch_ball_for_same_orientation(seed in any::<u64>()) {
        let mut rng = seeded_rng(seed, 0);
        let pair = random_pair(&mut rng, true);
        let rho: DensityMatrix<f64> = random_mixed(&mut rng);
        let m = octet_means(&rho, &pair);
        prop_assert!(m.x * m.x + m.y * m.y + m.z * m.z <= m.i * m.i + 1e-9);
        let psi: PureState<f64> = random_pure(&mut rng);
        let m = octet_means(&psi.density(), &pair);
        prop_assert!((m.x * m.x + m.y * m.y + m.z * m.z - m.i * m.i).abs() < 1e-7);
    }

    #[test]
    fn quadratic_form_is_invariant_under_in_plane_rotations(seed in any::<u64>(), ta in -3.2f64..3.2, tb in -3.2f64..3.2) {
        let mut rng = seeded_rng(seed, 0);
        let rho: DensityMatrix<f64> = random_mixed(&mut rng);
        let same = rng.random();
        let pair = random_pair(&mut rng, same);
        let turned = SettingPair::new(pair.a.rotated_in_plane(ta), pair.b.rotated_in_plane(tb));
        let q0 = quad_lhs(&rho, &ChshSettings::from_pair(&pair), &tol()).unwrap();
        let q1 = quad_lhs(&rho, &ChshSettings::from_pair(&turned), &tol()).unwrap();
        prop_assert!((q0 - q1).abs() < 1e-9);
    }

    #[test]
    fn ordering_prediction_matches_computation(seed in any::<u64>()) {
        let mut rng = seeded_rng(seed, 0);
        let rho: DensityMatrix<f64> = random_mixed(&mut rng);
        let pair = random_pair(&mut rng, true);
        let o = ordering_eq18(&rho, &pair);
        prop_assert!(o.holds(1e-9));
        let (a, b) = (o.plain - o.quarter, o.tilde - o.quarter);
        prop_assert!(a * o.correlation >= -1e-12 && b * o.correlation <= 1e-12);
    }

    #[test]
    fn separable_states_satisfy_every_criterion(seed in any::<u64>()) {
        let mut rng = seeded_rng(seed, 0);
        let rho: DensityMatrix<f64> = random_separable(&mut rng);
        let t = tol();
        prop_assert!(!ppt(&rho, &t).unwrap().violated());
        prop_assert!(!fidelity(&rho, &t).violated());
        prop_assert!(!fid2(&rho, &t).violated());
        for _ in 0..4 {
            let same = rng.random();
            let pair = random_pair(&mut rng, same);
            prop_assert!(!sep_bound_eq7(&rho, &pair, &t).violated());
            prop_assert!(!mixsep2(&rho, &pair, &t).any_violated());
            prop_assert!(!chsh(&rho, &random_settings(&mut rng), &t).unwrap().violated());
            let (na, nb) = (rng.random(), rng.random());
            let (la, lb) = (LooBasis::from_triple(&pair.a, na), LooBasis::from_triple(&pair.b, nb));
            prop_assert!(!loo_linear_witness(&rho, &la, &lb, &t).violated());
            prop_assert!(!loo_nonlinear_witness(&rho, &la, &lb, &t).violated());
        }
    }

    #[test]
    fn fidelity_violation_implies_octet_violation(seed in any::<u64>()) {
        let rho: DensityMatrix<f64> = random_mixed(&mut seeded_rng(seed, 0));
        if fid2(&rho, &tol()).violated() {
            prop_assert!(mixsep2(&rho, &SettingPair::pauli(), &tol()).reports[0].violated());
        }
    }

    #[test]
    fn orientation_trivial_inequalities_always_hold(seed in any::<u64>(), same in any::<bool>()) {
        let mut rng = seeded_rng(seed, 0);
        let rho: DensityMatrix<f64> = random_mixed(&mut rng);
        let r = mixsep2(&rho, &random_pair(&mut rng, same), &tol());
        for (k, rep) in r.reports.iter().enumerate() {
            if !r.nontrivial[k] {
                prop_assert!(rep.slack >= -1e-9, "{} slack {}", rep.name, rep.slack);
            }
        }
    }

    #[test]
    fn pure_test_soundness_and_phase_invariance(seed in any::<u64>(), phase in -3.2f64..3.2) {
        let mut rng = seeded_rng(seed, 0);
        let product: PureState<f64> = random_product_pure(&mut rng);
        let r = six_inequality_test(&product, &tol());
        prop_assert!(r.min_slack >= -1e-9);
        prop_assert_eq!(r.verdict, PureVerdict::Separable);
        let psi: PureState<f64> = random_pure(&mut rng);
        let a = six_inequality_test(&psi, &tol());
        let b = six_inequality_test(&psi.with_global_phase(phase), &tol());
        prop_assert_eq!(a.verdict, b.verdict);
        prop_assert!(a.min_slack < -1e-12 * a.schmidt_rs * a.schmidt_rs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn gap_states_are_entangled_and_chsh_local(t11 in 0.5f64..1.0, ratio in 0.0f64..1.0, t33 in -1.0f64..1.0) {
        let t22 = ratio * t11;
        prop_assume!(t11 + t22 > 1.0 + 1e-6 && t11 * t11 + t22 * t22 <= 1.0);
        let t33 = t33 * t22;
        let form = sepbell::PauliForm { r: [0.0; 3], s: [0.0; 3], t: linalg3::diag([-t11, -t22, t33]) };
        let Ok(rho) = pauli_compose(&form, &tol()) else { return Ok(()); };
        prop_assert!(lhv_gap_classify(&rho, 1e-9).gap_member);
        prop_assert!(ppt(&rho, &tol()).unwrap().violated());
        prop_assert!(chsh_max_analytic(&rho) <= 2.0 + 1e-9);
    }
}

fn near_product(rng: &mut Rng, s: f64) -> PureState<f64> {
    let perp = |u: [Complex<f64>; 2]| [-u[1].conj(), u[0].conj()];
    let a0 = sepbell::states::random_qubit(rng);
    let b0 = sepbell::states::random_qubit(rng);
    let (a1, b1) = (perp(a0), perp(b0));
    let r = (1.0 - s * s).sqrt();
    let mut amps = [Complex::new(0.0, 0.0); 4];
    for i in 0..2 {
        for k in 0..2 {
            amps[2 * i + k] = a0[i] * b1[k] * r - a1[i] * b0[k] * s;
        }
    }
    PureState::normalized(amps).unwrap()
}

#[test]
fn six_inequalities_detect_near_product_entanglement() {
    let mut rng = seeded_rng(77, 0);
    for s in [1e-5, 1e-4, 1e-3] {
        for _ in 0..200 {
            let psi = near_product(&mut rng, s);
            let r = six_inequality_test(&psi, &tol());
            assert!(r.schmidt_rs > 1e-6);
            assert_eq!(r.verdict, PureVerdict::Entangled, "s = {s}");
            assert!(r.min_slack < -1e-12 * r.schmidt_rs * r.schmidt_rs);
        }
    }
}

#[test]
fn werner_gap_scan() {
    for k in 0..5 {
        let p = 0.51 + 0.04 * k as f64;
        let rho = werner(p).unwrap();
        assert!(lhv_gap_classify(&rho, 1e-9).gap_member, "p = {p}");
        assert!(ppt(&rho, &tol()).unwrap().violated());
        assert!(chsh_max_analytic(&rho) <= 2.0 + 1e-9);
    }
}

#[test]
fn numeric_maxima_match_closed_forms() {
    let budget = Budget {
        restarts: 8,
        ..Budget::with_seed(3)
    };
    let mut rng = seeded_rng(321, 0);
    for _ in 0..200 {
        let rho: DensityMatrix<f64> = random_mixed(&mut rng);
        let c = numeric_max_detailed(&rho, Objective::Chsh, &budget).unwrap();
        assert!((c.value - chsh_max_analytic(&rho)).abs() < 1e-3);
        let q = numeric_max_detailed(&rho, Objective::Quad, &budget).unwrap();
        assert!((q.value - quad_max_orthogonal_analytic(&rho)).abs() < 1e-3);
    }
}

#[test]
fn sep_bound_is_necessary_and_sufficient_for_pure_states() {
    let budget = Budget {
        restarts: 8,
        ..Budget::with_seed(5)
    };
    let mut rng = seeded_rng(654, 0);
    for _ in 0..500 {
        let psi: PureState<f64> = random_pure(&mut rng);
        let rho = psi.density();
        let best = numeric_max_detailed(&rho, Objective::SepBoundSlack, &budget).unwrap();
        let Argmax::Frames(pair) = best.argmax else { panic!("frame objective") };
        assert!(sep_bound_eq7(&rho, &pair, &tol()).violated());
    }
    for _ in 0..50 {
        let rho = random_product_pure::<f64, _>(&mut rng).density();
        let best = numeric_max_detailed(&rho, Objective::SepBoundSlack, &budget).unwrap();
        assert!(best.value <= 1e-9);
    }
}

#[test]
fn pauli_x_octet_example() {
    let o = eight_operators(&SettingPair::<f64>::pauli());
    let xx = kron(&sigma_x(), &sigma_x());
    assert!(o.x_t.max_abs_diff(&(xx + kron(&pauli(2), &pauli(2))).scale(0.5)) < 1e-15);
}
