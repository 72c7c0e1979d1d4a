use thiserror::Error;

/// Errors raised by the spectral, operator and oracle routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("outside the bound-state domain: {0}")]
    Domain(String),
    #[error("reflection term is singular at the origin and the function carries no parity hint")]
    SingularOrigin,
    #[error("angular operator has a pole at theta = {0}")]
    AngularPole(f64),
    #[error("sector mismatch: {0}")]
    SectorMismatch(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("mass matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("quadrature failure: {0}")]
    Quadrature(String),
    #[error("derivative of order {0} is not available")]
    UnsupportedOrder(u8),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
