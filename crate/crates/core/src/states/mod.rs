//! Two-qubit states: validated density matrices, pure states and the named
//! families used throughout the criteria.

mod pauli;
mod random;
mod schmidt;

pub use pauli::{normal_form, pauli_compose, pauli_decompose, NormalForm, PauliForm};
pub use random::{
    random_mixed, random_product_pure, random_pure, random_qubit, random_rotation,
    random_separable, random_state, random_unit_vector, seeded_rng, RandomKind, RandomState,
};
pub use schmidt::{schmidt, SchmidtForm};

use crate::error::{Error, Result};
use crate::qmat::{c, hermitian_eigen, partial_transpose, re, trace_product, Complex, Mat4, Side, Spectrum};
use crate::scalar::Real;
use crate::tolerance::Tolerances;

/// A validated two-qubit density matrix: Hermitian, unit trace, PSD.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityMatrix<T> {
    m: Mat4<T>,
}

impl<T: Real> DensityMatrix<T> {
    /// Wraps a matrix already known to be a state.
    pub(crate) fn new_unchecked(m: Mat4<T>) -> Self {
        Self { m }
    }

    pub fn matrix(&self) -> &Mat4<T> {
        &self.m
    }

    pub fn maximally_mixed() -> Self {
        Self::new_unchecked(Mat4::identity().scale(T::lit(0.25)))
    }

    /// `Re Tr[ρ O]`. The observable is not checked; use
    /// [`crate::qmat::expectation`] for the checked version.
    pub fn expect(&self, obs: &Mat4<T>) -> T {
        trace_product(&self.m, obs).re
    }

    pub fn partial_transpose(&self, side: Side) -> Mat4<T> {
        partial_transpose(&self.m, side)
    }

    /// Spectrum of the partial transpose on the second qubit.
    pub fn pt_spectrum(&self, tol: &Tolerances<T>) -> Result<Spectrum<T>> {
        hermitian_eigen(&self.partial_transpose(Side::Second), tol.hermiticity)
    }

    /// Matrix element `⟨i|ρ|j⟩` in the product basis.
    pub fn element(&self, i: usize, j: usize) -> Complex<T> {
        self.m[(i, j)]
    }

    /// `Σ wᵢ ρᵢ` with non-negative weights summing to one.
    pub fn mixture(parts: &[(T, DensityMatrix<T>)]) -> Self {
        let m = parts
            .iter()
            .fold(Mat4::zeros(), |acc, (w, rho)| acc + rho.m.scale(*w));
        Self::new_unchecked(m)
    }
}

/// Checks the state invariants and names the first one violated.
pub fn validate<T: Real>(m: Mat4<T>, tol: &Tolerances<T>) -> Result<DensityMatrix<T>> {
    if !m.is_finite() {
        return Err(Error::NotHermitian {
            deviation: f64::INFINITY,
        });
    }
    let herm = m.hermiticity_deviation();
    if herm > tol.hermiticity {
        return Err(Error::NotHermitian {
            deviation: herm.to_f64_lossy(),
        });
    }
    let tr = m.trace();
    let tdev = (tr.re - T::one()).abs().max(tr.im.abs());
    if tdev > tol.trace {
        return Err(Error::TraceNotOne {
            deviation: tdev.to_f64_lossy(),
        });
    }
    let spectrum = hermitian_eigen(&m, tol.hermiticity)?;
    if spectrum.min() < -tol.psd {
        return Err(Error::NotPositive {
            min_eigenvalue: spectrum.min().to_f64_lossy(),
        });
    }
    Ok(DensityMatrix::new_unchecked(m))
}

/// Normalized amplitudes `(a, b, c, d)` on `|↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PureState<T> {
    amps: [Complex<T>; 4],
}

impl<T: Real> PureState<T> {
    pub fn new(amps: [Complex<T>; 4], tol: &Tolerances<T>) -> Result<Self> {
        let n2 = amps.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr());
        let dev = (n2 - T::one()).abs();
        if !(dev <= tol.normalization) {
            return Err(Error::NotNormalized {
                deviation: dev.to_f64_lossy(),
            });
        }
        Ok(Self { amps })
    }

    /// Scales `amps` to unit norm.
    pub fn normalized(amps: [Complex<T>; 4]) -> Result<Self> {
        let n = amps.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr()).sqrt();
        if !(n > T::zero()) || !n.is_finite() {
            return Err(Error::NotNormalized { deviation: 1.0 });
        }
        Ok(Self {
            amps: amps.map(|z| z / n),
        })
    }

    /// `|u⟩ ⊗ |v⟩`; the factors are normalized first.
    pub fn product(u: [Complex<T>; 2], v: [Complex<T>; 2]) -> Result<Self> {
        Self::normalized([u[0] * v[0], u[0] * v[1], u[1] * v[0], u[1] * v[1]])
    }

    pub fn amplitudes(&self) -> &[Complex<T>; 4] {
        &self.amps
    }

    /// The residual `ad − bc`; zero exactly for product states.
    pub fn product_residual(&self) -> Complex<T> {
        let [a, b, cc, d] = self.amps;
        a * d - b * cc
    }

    pub fn with_global_phase(&self, phase: T) -> Self {
        let (s, co) = phase.sin_cos();
        let f = c(co, s);
        Self {
            amps: self.amps.map(|z| z * f),
        }
    }

    pub fn density(&self) -> DensityMatrix<T> {
        DensityMatrix::new_unchecked(Mat4::outer(&self.amps, &self.amps))
    }

    pub fn up_up() -> Self {
        let (o, l) = (re(T::zero()), re(T::one()));
        Self { amps: [l, o, o, o] }
    }

    /// `(|↑↓⟩ − |↓↑⟩)/√2`.
    pub fn singlet() -> Self {
        Self::bell(Bell::PsiMinus)
    }

    pub fn bell(which: Bell) -> Self {
        let h = re(T::FRAC_1_SQRT_2());
        let o = re(T::zero());
        let amps = match which {
            Bell::PhiPlus => [h, o, o, h],
            Bell::PhiMinus => [h, o, o, -h],
            Bell::PsiPlus => [o, h, h, o],
            Bell::PsiMinus => [o, h, -h, o],
        };
        Self { amps }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bell {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

fn check_probability<T: Real>(p: T) -> Result<()> {
    if p >= T::zero() && p <= T::one() {
        Ok(())
    } else {
        Err(Error::ParameterOutOfRange {
            name: "p",
            value: p.to_f64_lossy(),
            range: "[0, 1]",
        })
    }
}

/// `(1−p)/4·𝟙 + p·|ψ⁻⟩⟨ψ⁻|`.
pub fn werner<T: Real>(p: T) -> Result<DensityMatrix<T>> {
    check_probability(p)?;
    let singlet = PureState::<T>::singlet().density();
    let m = Mat4::identity().scale((T::one() - p) / T::lit(4.0)) + singlet.m.scale(p);
    Ok(DensityMatrix::new_unchecked(m))
}

/// `p·|ψ⁻⟩⟨ψ⁻| + (1−p)·(⅔|↑↑⟩⟨↑↑| + ⅓|↑↓⟩⟨↑↓|)`.
pub fn noisy_singlet<T: Real>(p: T) -> Result<DensityMatrix<T>> {
    check_probability(p)?;
    let singlet = PureState::<T>::singlet().density();
    let third = T::one() / T::lit(3.0);
    let noise = Mat4::diagonal([third + third, third, T::zero(), T::zero()]);
    let m = singlet.m.scale(p) + noise.scale(T::one() - p);
    Ok(DensityMatrix::new_unchecked(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn tol() -> Tolerances<f64> {
        Tolerances::default()
    }

    #[test]
    fn maximally_mixed_validates() {
        let rho = validate(Mat4::<f64>::identity().scale(0.25), &tol()).unwrap();
        assert_eq!(rho, DensityMatrix::maximally_mixed());
    }

    #[test]
    fn negative_eigenvalue_is_named() {
        let m = Mat4::diagonal([1.0, 0.0, 0.001, -1e-3]);
        match validate(m, &tol()) {
            Err(Error::NotPositive { min_eigenvalue }) => assert_abs_diff_eq!(min_eigenvalue, -1e-3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn trace_and_hermiticity_failures() {
        let m = Mat4::<f64>::identity().scale(0.3);
        assert!(matches!(validate(m, &tol()), Err(Error::TraceNotOne { .. })));
        let mut m = Mat4::<f64>::identity().scale(0.25);
        m[(0, 2)] = c(0.0, 0.1);
        assert!(matches!(validate(m, &tol()), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn werner_endpoints_and_spectrum() {
        assert_eq!(werner(0.0).unwrap(), DensityMatrix::maximally_mixed());
        let w1 = werner(1.0).unwrap();
        assert!(w1.matrix().max_abs_diff(PureState::singlet().density().matrix()) < 1e-15);
        let w = werner(0.5).unwrap();
        let s = hermitian_eigen(w.matrix(), 1e-10).unwrap();
        assert_abs_diff_eq!(s.min(), 0.125, epsilon = 1e-12);
        assert!(validate(*w.matrix(), &tol()).is_ok());
        let pt = w.pt_spectrum(&tol()).unwrap();
        assert_abs_diff_eq!(pt.min(), -0.125, epsilon = 1e-12);
        assert!(matches!(werner(1.5), Err(Error::ParameterOutOfRange { .. })));
        assert!(matches!(werner(-0.1), Err(Error::ParameterOutOfRange { .. })));
    }

    #[test]
    fn werner_ppt_threshold_is_one_third() {
        for k in 0..=100 {
            let p = k as f64 / 100.0;
            let min = werner(p).unwrap().pt_spectrum(&tol()).unwrap().min();
            assert_abs_diff_eq!(min, (1.0 - 3.0 * p) / 4.0, epsilon = 1e-12);
            assert_eq!(min >= -1e-9, p <= 1.0 / 3.0 + 1e-9, "p = {p}");
        }
    }

    #[test]
    fn noisy_singlet_endpoints() {
        let n1 = noisy_singlet(1.0).unwrap();
        assert!(n1.matrix().max_abs_diff(PureState::singlet().density().matrix()) < 1e-15);
        let n0 = noisy_singlet(0.0).unwrap();
        assert!(n0
            .matrix()
            .max_abs_diff(&Mat4::diagonal([2.0 / 3.0, 1.0 / 3.0, 0.0, 0.0]))
            < 1e-15);
        let zz = crate::qmat::kron(&crate::qmat::sigma_z(), &crate::qmat::sigma_z());
        let v = noisy_singlet(0.3).unwrap().expect(&zz);
        assert_abs_diff_eq!(v, -0.3 + 0.7 / 3.0, epsilon = 1e-15);
        assert!(validate(*noisy_singlet(0.3).unwrap().matrix(), &tol()).is_ok());
    }

    #[test]
    fn pure_state_normalization() {
        let o = re(0.0);
        assert!(PureState::new([re(1.0), o, o, re(0.1)], &tol()).is_err());
        let p = PureState::normalized([re(3.0), o, o, re(4.0)]).unwrap();
        assert_abs_diff_eq!(p.amplitudes()[3].re, 0.8, epsilon = 1e-15);
        assert!(PureState::<f64>::normalized([o; 4]).is_err());
    }

    #[test]
    fn product_residual_vanishes_on_products() {
        let p = PureState::product([re(0.6), c(0.0, 0.8)], [c(0.3, 0.1), re(-0.9)]).unwrap();
        assert!(p.product_residual().norm() < 1e-15);
        assert_abs_diff_eq!(PureState::<f64>::singlet().product_residual().norm(), 0.5, epsilon = 1e-15);
    }
}
