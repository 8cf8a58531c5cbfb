//! Bloch (Pauli-basis) representation and the correlation-matrix normal form.

use serde::{Deserialize, Serialize};

use super::{validate, DensityMatrix};
use crate::error::Result;
use crate::linalg3::{self, Mat3, Vec3};
use crate::qmat::{kron, pauli, trace_product, Mat4};
use crate::scalar::Real;
use crate::tolerance::Tolerances;

/// `ρ = ¼(𝟙⊗𝟙 + r·σ⊗𝟙 + 𝟙⊗s·σ + Σ tᵢⱼ σᵢ⊗σⱼ)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PauliForm<T> {
    pub r: Vec3<T>,
    pub s: Vec3<T>,
    pub t: Mat3<T>,
}

impl<T: Real> PauliForm<T> {
    /// `⟨a·σ ⊗ b·σ⟩ = aᵀ T b`.
    pub fn correlation(&self, a: &Vec3<T>, b: &Vec3<T>) -> T {
        linalg3::bilinear(a, &self.t, b)
    }

    /// `⟨a·σ ⊗ 𝟙⟩`.
    pub fn local_a(&self, a: &Vec3<T>) -> T {
        linalg3::dot(&self.r, a)
    }

    /// `⟨𝟙 ⊗ b·σ⟩`.
    pub fn local_b(&self, b: &Vec3<T>) -> T {
        linalg3::dot(&self.s, b)
    }

    /// The unvalidated operator the Bloch data describes.
    pub fn to_matrix(&self) -> Mat4<T> {
        let mut m = Mat4::identity();
        for i in 0..3 {
            m = m + kron(&pauli(i + 1), &pauli(0)).scale(self.r[i]);
            m = m + kron(&pauli(0), &pauli(i + 1)).scale(self.s[i]);
            for j in 0..3 {
                m = m + kron(&pauli(i + 1), &pauli(j + 1)).scale(self.t[i][j]);
            }
        }
        m.scale(T::lit(0.25))
    }

    /// Full 4×4 table `M_μν = ⟨σ_μ ⊗ σ_ν⟩` with `σ_0 = 𝟙`.
    pub fn full_correlations(&self) -> [[T; 4]; 4] {
        let mut m = [[T::zero(); 4]; 4];
        m[0][0] = T::one();
        for i in 0..3 {
            m[0][i + 1] = self.s[i];
            m[i + 1][0] = self.r[i];
            for j in 0..3 {
                m[i + 1][j + 1] = self.t[i][j];
            }
        }
        m
    }
}

pub fn pauli_decompose<T: Real>(rho: &DensityMatrix<T>) -> PauliForm<T> {
    let m = rho.matrix();
    let ev = |i: usize, j: usize| trace_product(m, &kron(&pauli(i), &pauli(j))).re;
    let mut f = PauliForm {
        r: [T::zero(); 3],
        s: [T::zero(); 3],
        t: [[T::zero(); 3]; 3],
    };
    for i in 0..3 {
        f.r[i] = ev(i + 1, 0);
        f.s[i] = ev(0, i + 1);
        for j in 0..3 {
            f.t[i][j] = ev(i + 1, j + 1);
        }
    }
    f
}

/// Inverse of [`pauli_decompose`]; fails with `NotPositive` when the Bloch
/// data describes no state.
pub fn pauli_compose<T: Real>(f: &PauliForm<T>, tol: &Tolerances<T>) -> Result<DensityMatrix<T>> {
    validate(f.to_matrix(), tol)
}

/// Singular-value normal form of the correlation matrix:
/// `rot_a · T · rot_bᵀ = diag(t)` with `t₁ ≥ t₂ ≥ t₃ ≥ 0`.
///
/// `rot_a`, `rot_b` are orthogonal and may be reflections; `det_sign` is the
/// sign of `det T` (`+1` for singular `T`).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NormalForm<T> {
    pub t: Vec3<T>,
    pub rot_a: Mat3<T>,
    pub rot_b: Mat3<T>,
    pub det_sign: i8,
}

pub fn normal_form<T: Real>(f: &PauliForm<T>) -> NormalForm<T> {
    let (sigma, u, v) = linalg3::svd(&f.t);
    let d = linalg3::det(&f.t);
    let det_sign = if d < -T::epsilon() * T::lit(16.0) { -1 } else { 1 };
    NormalForm {
        t: sigma,
        rot_a: linalg3::transpose(&u),
        rot_b: linalg3::transpose(&v),
        det_sign,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg3::{diag, gram_deviation, mat_mul, max_abs_diff, transpose};
    use crate::states::{random_mixed, random_rotation, seeded_rng, werner, PureState};
    use approx::assert_abs_diff_eq;

    fn tol() -> Tolerances<f64> {
        Tolerances::default()
    }

    #[test]
    fn maximally_mixed_has_zero_bloch_data() {
        let f = pauli_decompose(&DensityMatrix::<f64>::maximally_mixed());
        assert_eq!(f.r, [0.0; 3]);
        assert_eq!(f.s, [0.0; 3]);
        assert_eq!(f.t, [[0.0; 3]; 3]);
        let back = pauli_compose(&f, &tol()).unwrap();
        assert_eq!(back, DensityMatrix::maximally_mixed());
    }

    #[test]
    fn werner_correlations_are_minus_p() {
        for p in [0.0, 0.3, 0.8] {
            let f = pauli_decompose(&werner(p).unwrap());
            assert!(max_abs_diff(&f.t, &diag([-p, -p, -p])) < 1e-15);
            assert_eq!(f.r, [0.0; 3]);
            assert_eq!(f.s, [0.0; 3]);
        }
    }

    #[test]
    fn up_up_bloch_data() {
        let f = pauli_decompose(&PureState::<f64>::up_up().density());
        assert_eq!(f.r, [0.0, 0.0, 1.0]);
        assert_eq!(f.s, [0.0, 0.0, 1.0]);
        assert!(max_abs_diff(&f.t, &diag([0.0, 0.0, 1.0])) < 1e-15);
    }

    #[test]
    fn compose_singlet_and_reject_overscaled() {
        let f = PauliForm {
            r: [0.0; 3],
            s: [0.0; 3],
            t: diag([-1.0, -1.0, -1.0]),
        };
        let rho = pauli_compose(&f, &tol()).unwrap();
        assert!(rho.matrix().max_abs_diff(PureState::singlet().density().matrix()) < 1e-15);
        let too_much = PauliForm {
            t: diag([-1.2, -1.2, -1.2]),
            ..f
        };
        assert!(matches!(
            pauli_compose(&too_much, &tol()),
            Err(crate::error::Error::NotPositive { .. })
        ));
    }

    #[test]
    fn compose_inverts_decompose_on_random_states() {
        let mut rng = seeded_rng(5, 0);
        for _ in 0..200 {
            let rho: DensityMatrix<f64> = random_mixed(&mut rng);
            let back = pauli_compose(&pauli_decompose(&rho), &tol()).unwrap();
            assert!(back.matrix().max_abs_diff(rho.matrix()) < 1e-10);
        }
    }

    #[test]
    fn normal_form_examples() {
        let z = normal_form(&pauli_decompose(&DensityMatrix::<f64>::maximally_mixed()));
        assert_eq!(z.t, [0.0; 3]);
        let w = normal_form(&pauli_decompose(&werner(0.4).unwrap()));
        for t in w.t {
            assert_abs_diff_eq!(t, 0.4, epsilon = 1e-14);
        }
        assert_eq!(w.det_sign, -1);
        let uu = normal_form(&pauli_decompose(&PureState::<f64>::up_up().density()));
        assert_abs_diff_eq!(uu.t[0], 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(uu.t[1], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(uu.t[2], 0.0, epsilon = 1e-15);
    }

    #[test]
    fn normal_form_reconstructs_and_is_rotation_invariant() {
        let mut rng = seeded_rng(6, 0);
        for _ in 0..200 {
            let f = pauli_decompose(&random_mixed::<f64, _>(&mut rng));
            let nf = normal_form(&f);
            let recon = mat_mul(&mat_mul(&transpose(&nf.rot_a), &diag(nf.t)), &nf.rot_b);
            assert!(max_abs_diff(&recon, &f.t) < 1e-9);
            assert!(gram_deviation(&nf.rot_a) < 1e-12 && gram_deviation(&nf.rot_b) < 1e-12);
            let diagonalized = mat_mul(&mat_mul(&nf.rot_a, &f.t), &transpose(&nf.rot_b));
            assert!(max_abs_diff(&diagonalized, &diag(nf.t)) < 1e-9);

            let (ra, rb) = (random_rotation(&mut rng), random_rotation(&mut rng));
            let rotated = PauliForm {
                t: mat_mul(&mat_mul(&ra, &f.t), &transpose(&rb)),
                ..f
            };
            let nf2 = normal_form(&rotated);
            for k in 0..3 {
                assert!((nf.t[k] - nf2.t[k]).abs() < 1e-9);
            }
            assert_eq!(nf.det_sign, nf2.det_sign);
        }
    }
}
