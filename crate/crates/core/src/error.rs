use thiserror::Error;

/// Errors produced by simulators, estimators and oracles.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("non-finite value at row {row}, column {col}")]
    NonFinite { row: usize, col: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("no exceedances of the threshold {threshold}")]
    NoExceedances { threshold: f64 },

    #[error("zero denominator: no observation falls in the conditioning set")]
    ZeroDenominator,

    #[error("stationarity check failed: estimated E log A = {mean_log}")]
    NotStationary { mean_log: f64 },

    #[error("no root of E|A|^k = 1 in [{lo}, {hi}]")]
    NoRoot { lo: f64, hi: f64 },

    #[error("quadrature did not reach tolerance {tol}")]
    QuadratureFailed { tol: f64 },

    #[error("extrapolation gap {gap} exceeds tolerance {tol}")]
    ExtrapolationGap { gap: f64, tol: f64 },

    #[error("stopping rule not reached within {budget} Poisson points")]
    PointBudgetExceeded { budget: usize },

    #[error("covariance matrix is not positive semidefinite (pivot {pivot} = {value})")]
    NotPositiveDefinite { pivot: usize, value: f64 },

    #[error("series has zero variance")]
    ZeroVariance,

    #[error("{dropped} of {total} replicates failed")]
    TooManyFailedReplicates { dropped: usize, total: usize },

    #[error("series is not summable at truncation lag {0}")]
    NotSummable(usize),

    #[error("csv: {0}")]
    Csv(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name,
        reason: reason.into(),
    }
}
