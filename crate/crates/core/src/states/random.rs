//! Seeded random states and frames.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{DensityMatrix, PureState};
use crate::linalg3::{self, Mat3, Vec3};
use crate::qmat::{c, Complex, Mat4};
use crate::scalar::Real;

/// Generator for `(seed, stream)`. Independent workers use distinct streams
/// of one seed.
pub fn seeded_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn complex_normal<T: Real, R: Rng + ?Sized>(rng: &mut R) -> Complex<T> {
    c(T::sample_normal(rng), T::sample_normal(rng))
}

pub fn random_unit_vector<T: Real, R: Rng + ?Sized>(rng: &mut R) -> Vec3<T> {
    loop {
        let v = [T::sample_normal(rng), T::sample_normal(rng), T::sample_normal(rng)];
        if let Some(u) = linalg3::normalize(&v) {
            return u;
        }
    }
}

/// Haar-random proper rotation (uniform unit quaternion).
pub fn random_rotation<T: Real, R: Rng + ?Sized>(rng: &mut R) -> Mat3<T> {
    let q = [
        T::sample_normal(rng),
        T::sample_normal(rng),
        T::sample_normal(rng),
        T::sample_normal(rng),
    ];
    linalg3::quaternion_to_rotation(&q)
}

/// Uniformly distributed single-qubit pure state.
pub fn random_qubit<T: Real, R: Rng + ?Sized>(rng: &mut R) -> [Complex<T>; 2] {
    loop {
        let v: [Complex<T>; 2] = [complex_normal(rng), complex_normal(rng)];
        let n = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
        if n > T::zero() {
            return [v[0] / n, v[1] / n];
        }
    }
}

/// Unit-sphere-uniform amplitude vector.
pub fn random_pure<T: Real, R: Rng + ?Sized>(rng: &mut R) -> PureState<T> {
    loop {
        let amps = [
            complex_normal(rng),
            complex_normal(rng),
            complex_normal(rng),
            complex_normal(rng),
        ];
        if let Ok(p) = PureState::normalized(amps) {
            return p;
        }
    }
}

pub fn random_product_pure<T: Real, R: Rng + ?Sized>(rng: &mut R) -> PureState<T> {
    let (u, v) = (random_qubit(rng), random_qubit(rng));
    PureState::product(u, v).expect("unit factors")
}

/// `G G† / Tr(G G†)` for complex-Gaussian `G` (Hilbert–Schmidt measure).
pub fn random_mixed<T: Real, R: Rng + ?Sized>(rng: &mut R) -> DensityMatrix<T> {
    let mut g = Mat4::zeros();
    for i in 0..4 {
        for j in 0..4 {
            g[(i, j)] = complex_normal(rng);
        }
    }
    let m = g * g.adjoint();
    let m = (m + m.adjoint()).scale(T::lit(0.5));
    let tr = m.trace().re;
    DensityMatrix::new_unchecked(m.scale(T::one() / tr))
}

/// Convex mixture of one to eight random product states.
pub fn random_separable<T: Real, R: Rng + ?Sized>(rng: &mut R) -> DensityMatrix<T> {
    let k = rng.random_range(1..=8usize);
    let mut weights: Vec<T> = (0..k).map(|_| T::sample_unit(rng) + T::lit(1e-3)).collect();
    let total: T = weights.iter().copied().sum();
    for w in weights.iter_mut() {
        *w /= total;
    }
    let parts: Vec<(T, DensityMatrix<T>)> = weights
        .into_iter()
        .map(|w| (w, random_product_pure(rng).density()))
        .collect();
    DensityMatrix::mixture(&parts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RandomKind {
    PureUniform,
    MixedTraceMetric,
    SeparableMixture,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RandomState<T> {
    Pure(PureState<T>),
    Mixed(DensityMatrix<T>),
}

impl<T: Real> RandomState<T> {
    pub fn density(&self) -> DensityMatrix<T> {
        match self {
            RandomState::Pure(p) => p.density(),
            RandomState::Mixed(m) => *m,
        }
    }
}

/// One state drawn from a fresh generator seeded with `seed`.
pub fn random_state<T: Real>(seed: u64, kind: RandomKind) -> RandomState<T> {
    let mut rng = seeded_rng(seed, 0);
    match kind {
        RandomKind::PureUniform => RandomState::Pure(random_pure(&mut rng)),
        RandomKind::MixedTraceMetric => RandomState::Mixed(random_mixed(&mut rng)),
        RandomKind::SeparableMixture => RandomState::Mixed(random_separable(&mut rng)),
    }
}
