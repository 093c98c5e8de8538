//! Exact rational linear algebra and polynomials.

pub mod factor;
pub mod jordan;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod subspace;

pub use factor::{factor_rationals, irreducible_factors};
pub use jordan::jordan_chevalley;
pub use matrix::Matrix;
pub use poly::Polynomial;
pub use rational::{ExtendedRational, Rational};
pub use subspace::{kernel, Subspace};
