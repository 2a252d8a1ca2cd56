//! Exact scalar arithmetic and dense linear algebra.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::{Matrix, Rref, Solution};
pub use scalar::{Field, Scalar, RATIONAL_SAMPLE_BOUND};
pub use subspace::Subspace;

pub(crate) use matrix::rref_mod_p;
