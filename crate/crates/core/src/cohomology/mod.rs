//! The Yang-Baxter cochain complex of a rack operator `c_Q`.
//!
//! Coefficients are rational: a degree-`d` cochain is an `n^d × n^d`
//! rational matrix (see [`Cochain`]). Coboundaries are evaluated with the
//! explicit two-term formula for each partial map `d_i`.

mod classify;
mod coboundary;
mod cochain;
mod entropic;

pub use classify::{classify_h2, rack_cocycle_check, rack_cocycle_witness, H2Report};
pub use coboundary::{
    coboundary, coboundary_i, coboundary_i_matrix, coboundary_matrix, coboundary_space, cocycle_space,
    partial_coboundaries_matrix,
};
pub use cochain::{decode, encode, Cochain};
pub use entropic::{
    entropic_basis, is_entropic, is_fully_equivariant, is_quasi_diagonal, symmetrize, EntropicBasis, IndexPair,
};
