//! Yang-Baxter operators of racks and quandles.
//!
//! The crate builds the permutation operator `c_Q: x ⊗ y ↦ y ⊗ (x * y)` of a
//! finite rack, checks the Yang-Baxter equation, computes the Yang-Baxter
//! cohomology of `c_Q` in exact rational arithmetic, and constructs and
//! normalizes deformations over truncated polynomial rings `Q[h]/(h^N)`.

pub mod cohomology;
pub mod config;
pub mod deform;
pub mod error;
pub mod json;
pub mod linalg;
pub mod poly;
pub mod rack;
pub mod sample;
pub mod yb;

pub use config::Config;
pub use error::Error;
