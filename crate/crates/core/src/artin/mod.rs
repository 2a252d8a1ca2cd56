//! Finite-dimensional models of Artinian local algebras and their ideals.

mod algebra;
mod build;
mod ideal;
mod truncated;

pub use algebra::{ArtinAlgebra, PresentationData, WordBasis};
pub use build::{build_algebra, Presentation, DEFAULT_MAX_N, MAX_TRUNCATION_DIM};
pub use ideal::IdealRep;
pub use truncated::TruncatedSpace;
