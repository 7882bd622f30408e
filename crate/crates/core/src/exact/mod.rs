//! Exact linear algebra over `Q(i)`.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::{dot, hermitian, Matrix};
pub use scalar::GaussianRational;
pub use subspace::{unit, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse scalar {0:?}; expected a form like 3, -1/2*i or 1/2+3/4*i")]
pub struct ParseScalarError(pub String);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("subspace is not contained in the given space")]
    NotContained,
}
