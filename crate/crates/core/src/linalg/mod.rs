//! Exact sparse linear algebra over the rationals.
//!
//! Everything here is exact; the prime-field rank in [`modular`] exists only
//! as an independent cross-check.

mod echelon;
pub mod modular;
pub mod rational;
mod sparse;
mod subspace;

pub use echelon::{dense_inverse, echelon_of, Echelon};
pub use rational::{format_rational, parse_rational, Rational};
pub use sparse::{SparseMat, SparseVec};
pub use subspace::{image_basis, kernel_basis, rank, solve, sum_and_intersection_dims, Subspace};
