//! Structure theory of real Lie algebras with rational structure constants
//! and the subalgebra of bounded vectors.
//!
//! The pipeline runs entirely in exact rational arithmetic: radical,
//! nilradical, Levi subalgebra and compact/noncompact split
//! ([`structure`]), then the centralizer chain and the bounded subalgebra
//! `b = c_{s_c}(r) + v` ([`bounded`]). The [`oracle`] module cross-checks
//! membership numerically with adjoint-orbit random walks and exactly with
//! polynomial escape along the nilradical.

pub mod bounded;
pub mod catalog;
pub mod error;
pub mod format;
pub mod lie;
pub mod linalg;
pub mod oracle;
pub mod report;
pub mod structure;

pub use error::{Error, Result};
pub use lie::{Element, LieAlgebra};
pub use linalg::{Matrix, Polynomial, Rational, Subspace};
