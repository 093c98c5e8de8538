//! Error type shared by every module.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("subspace is not a subalgebra")]
    NotSubalgebra,

    #[error("subspace is not an ideal")]
    NotIdeal,

    #[error("Killing form is not negative definite on the isotropy subalgebra (signature {pos},{neg},{zero})")]
    NotNegativeDefinite { pos: usize, neg: usize, zero: usize },

    #[error("Killing form is degenerate on the semisimple subalgebra")]
    DegenerateKilling,

    #[error("no generic centroid element found within the search budget")]
    NoGenericCentroidElement,

    #[error("Jacobi identity fails for basis triple ({i},{j},{k}): residual {residual}")]
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        residual: String,
    },

    #[error("parse error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid algebra file: {0}")]
    Format(String),

    #[error("unknown catalog entry '{0}'")]
    UnknownCatalog(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("numerical overflow: {0}")]
    Overflow(String),

    #[error("internal verification failed: {0}")]
    Verification(String),
}

impl Error {
    /// True for failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::Verification(_) | Error::NoGenericCentroidElement | Error::DegenerateKilling
        )
    }
}

/// Returns `Error::Verification` with `message` unless `ok`.
pub(crate) fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Verification(message()))
    }
}
