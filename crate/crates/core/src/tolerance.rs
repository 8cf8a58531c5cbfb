//! Centralized numerical tolerances.
//!
//! Every verdict produced by the crate records the tolerance it was
//! computed with, so thresholds here are defaults, never constants baked
//! into the algorithms.

use serde::{Deserialize, Serialize};

use crate::scalar::{floor_eps, Real};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances<T> {
    /// Maximum ‖M − M†‖∞ accepted for a Hermitian operator.
    pub hermiticity: T,
    /// Maximum |Tr ρ − 1|.
    pub trace: T,
    /// Eigenvalues down to `-psd` count as non-negative.
    pub psd: T,
    /// A criterion is violated only when its slack is below `-equality`.
    pub equality: T,
    /// Maximum | ‖n‖ − 1 | for a spin direction.
    pub unit: T,
    /// Maximum Gram-matrix deviation for a spin triple or LOO basis.
    pub orthonormal: T,
    /// Maximum | ‖ψ‖² − 1 | for a pure state.
    pub normalization: T,
    /// Pure states with Schmidt coefficient s ≤ this are products.
    pub separable_pure: T,
}

impl<T: Real> Default for Tolerances<T> {
    fn default() -> Self {
        Self {
            hermiticity: floor_eps(1e-10, 256.0),
            trace: floor_eps(1e-10, 256.0),
            psd: floor_eps(1e-9, 1024.0),
            equality: floor_eps(1e-9, 1024.0),
            unit: floor_eps(1e-10, 256.0),
            orthonormal: floor_eps(1e-10, 256.0),
            normalization: floor_eps(1e-12, 64.0),
            separable_pure: floor_eps(1e-9, 1024.0),
        }
    }
}

impl<T: Real> Tolerances<T> {
    /// Same defaults but with a different verdict tolerance.
    pub fn with_equality(equality: T) -> Self {
        Self {
            equality,
            ..Self::default()
        }
    }
}
