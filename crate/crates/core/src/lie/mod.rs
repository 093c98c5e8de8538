//! Lie-algebra arithmetic over the rationals.

pub mod algebra;
pub mod ops;

pub use algebra::{Element, JacobiViolation, LieAlgebra};
pub use ops::{SeriesChain, SeriesKind};
