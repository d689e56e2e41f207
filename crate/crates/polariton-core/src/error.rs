use thiserror::Error;

/// Failures raised by the physics routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A response function was evaluated exactly on a pole.
    #[error("pole: {0}")]
    Pole(String),
    /// A dressed frequency squared came out non-positive.
    #[error("invalid dressing: {0}")]
    InvalidDressing(String),
    /// Hopfield parameters with an imaginary lower branch.
    #[error("unstable parameters: {0}")]
    Unstable(String),
    /// A grid or lattice with nothing to work on.
    #[error("empty input: {0}")]
    Empty(String),
    /// Eigen decomposition did not return what was asked for.
    #[error("eigensolver: {0}")]
    Eigen(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn finite(name: &str, v: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Domain(format!("{name} must be finite, got {v}")))
    }
}

pub(crate) fn positive(name: &str, v: f64) -> Result<f64> {
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(Error::Domain(format!("{name} must be positive, got {v}")))
    }
}

pub(crate) fn non_negative(name: &str, v: f64) -> Result<f64> {
    if v.is_finite() && v >= 0.0 {
        Ok(v)
    } else {
        Err(Error::Domain(format!("{name} must be non-negative, got {v}")))
    }
}
