use thiserror::Error;

/// Errors raised by the exact-geometry kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("homogeneous parameter vector is zero")]
    ZeroVector,
    #[error("degenerate curve parameter: beta must avoid 0 and 3")]
    DegenerateParameter,
    #[error("matrix is not lower triangular")]
    NotLowerTriangular,
    #[error("point does not lie on the surface")]
    NotOnSurface,
    #[error("point is a singular point of the surface")]
    SingularPoint,
    #[error("curve does not pass through the interior of the affine chart")]
    ChartFailure,
    #[error("matrix tag does not match the requested action")]
    TagMismatch,
}

pub type Result<T> = std::result::Result<T, Error>;
