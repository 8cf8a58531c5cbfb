//! Separability inequalities for two qubits built from locally orthogonal
//! spin triples, together with the PPT, CHSH, fidelity and local-orthogonal
//! witness criteria they are compared against.
//!
//! Every numeric type is generic over [`Real`] (`f32` or `f64`); the aliases
//! below fix the scalar for the common cases.

#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod criteria;
pub mod error;
pub mod frames;
pub mod linalg3;
pub mod optimize;
pub mod puretest;
pub mod qmat;
pub mod scalar;
pub mod schema;
pub mod states;
pub mod tolerance;

pub use criteria::{CriterionReport, Mixsep2Report, Sense, Verdict};
pub use error::{Error, Result};
pub use frames::{NamedSetting, OperatorOctet, SettingPair, SpinTriple};
pub use optimize::{Budget, NsEvidence, NsVerdict, Objective, OptimizationResult};
pub use puretest::{PureTestReport, PureVerdict};
pub use qmat::{Complex, Mat2, Mat4};
pub use scalar::Real;
pub use states::{DensityMatrix, PauliForm, PureState};
pub use tolerance::Tolerances;

pub type Mat2F64 = Mat2<f64>;
pub type Mat2F32 = Mat2<f32>;
pub type Mat4F64 = Mat4<f64>;
pub type Mat4F32 = Mat4<f32>;
pub type DensityMatrixF64 = DensityMatrix<f64>;
pub type DensityMatrixF32 = DensityMatrix<f32>;
pub type PureStateF64 = PureState<f64>;
pub type PureStateF32 = PureState<f32>;
pub type SpinTripleF64 = SpinTriple<f64>;
pub type SpinTripleF32 = SpinTriple<f32>;
pub type SettingPairF64 = SettingPair<f64>;
pub type SettingPairF32 = SettingPair<f32>;
pub type CriterionReportF64 = CriterionReport<f64>;
pub type CriterionReportF32 = CriterionReport<f32>;
pub type TolerancesF64 = Tolerances<f64>;
pub type TolerancesF32 = Tolerances<f32>;
