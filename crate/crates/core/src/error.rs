use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failures reported by the numeric kernel and the state/criteria layers.
///
/// Magnitudes are stored as `f64` regardless of the working scalar so the
/// error type stays non-generic.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian: max |M - M†| = {deviation:e}")]
    NotHermitian { deviation: f64 },
    #[error("trace is not one: |Tr - 1| = {deviation:e}")]
    TraceNotOne { deviation: f64 },
    #[error("matrix is not positive semidefinite: min eigenvalue = {min_eigenvalue:e}")]
    NotPositive { min_eigenvalue: f64 },
    #[error("pure state is not normalized: |norm² - 1| = {deviation:e}")]
    NotNormalized { deviation: f64 },
    #[error("parameter {name} = {value} is outside {range}")]
    ParameterOutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },
    #[error("direction is not a unit vector: |‖n‖ - 1| = {deviation:e}")]
    NotUnit { deviation: f64 },
    #[error("axes are not orthonormal: max Gram deviation = {deviation:e}")]
    NotOrthonormal { deviation: f64 },
    #[error("operators do not form a local orthogonal basis: max |Tr[G_k G_l] - δ_kl| = {deviation:e}")]
    NotLooBasis { deviation: f64 },
    #[error("orientation check failed: |[A, A'] - 2i h A''| = {deviation:e}")]
    OrientationMismatch { deviation: f64 },
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },
    #[error("optimization budget exhausted before convergence; best value {best}")]
    BudgetExhausted { best: f64 },
    #[error("invalid input in field `{field}`: {message}")]
    Schema { field: String, message: String },
}

impl Error {
    pub(crate) fn schema(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema {
            field: field.into(),
            message: message.into(),
        }
    }
}
