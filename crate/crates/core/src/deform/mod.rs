//! Deformations of rack operators over `Q[h]/(h^N)`.
//!
//! A deformation is written `c = c_Q (I + f)`; `f` is the perturbation
//! term. Entropic families, the r-matrix comparison, and the normalization
//! of an arbitrary deformation to an entropic one live here.

pub mod d4;
mod normalize;
mod rmatrix;

pub use normalize::{normalize_to_entropic, Equivalence, Normalized};
pub use rmatrix::{rmatrix_equivalence, RMatrixVerdicts};

use crate::cohomology::{entropic_basis, is_entropic, Cochain, EntropicBasis};
use crate::config::Config;
use crate::error::Error;
use crate::poly::TruncPoly;
use crate::rack::Rack;
use crate::yb::{PolyMatrix, YBOperator, YbeVerdict};

/// Entropic deformation `c_Q (I + Σ λ_k · indicator_k)` over the degree-2 orbit basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationFamily {
    rack: Rack,
    basis: EntropicBasis,
    params: Vec<TruncPoly>,
}

impl DeformationFamily {
    pub fn new(rack: Rack, basis: EntropicBasis, params: Vec<TruncPoly>) -> Result<Self, Error> {
        if basis.degree() != 2 || basis.n() != rack.size() {
            return Err(Error::Dimension("family needs the degree-2 basis of the same rack".into()));
        }
        if params.len() != basis.len() {
            return Err(Error::Dimension(format!("{} parameters for {} orbits", params.len(), basis.len())));
        }
        if params.windows(2).any(|w| w[0].order() != w[1].order()) {
            return Err(Error::Dimension("parameters of different truncation orders".into()));
        }
        Ok(DeformationFamily { rack, basis, params })
    }

    pub fn from_rack(rack: &Rack, params: Vec<TruncPoly>, cfg: &Config) -> Result<Self, Error> {
        let basis = entropic_basis(rack, 2, cfg)?;
        DeformationFamily::new(rack.clone(), basis, params)
    }

    pub fn rack(&self) -> &Rack {
        &self.rack
    }

    pub fn basis(&self) -> &EntropicBasis {
        &self.basis
    }

    pub fn params(&self) -> &[TruncPoly] {
        &self.params
    }

    pub fn order(&self) -> usize {
        self.params[0].order()
    }

    /// `f(λ) = Σ λ_k · indicator_k`.
    pub fn perturbation(&self) -> PolyMatrix {
        let n = self.rack.size();
        let triplets = self.basis.orbits().iter().zip(&self.params).flat_map(|(orbit, lambda)| {
            orbit.iter().map(move |(x, y)| {
                (crate::cohomology::encode(n, y), crate::cohomology::encode(n, x), lambda.clone())
            })
        });
        PolyMatrix::from_triplets(n * n, n * n, self.order(), triplets).expect("orbit indices in range")
    }

    /// `c_Q (I + f(λ))`.
    pub fn assemble(&self) -> Result<YBOperator, Error> {
        let n = self.rack.size();
        let order = self.order();
        let one_plus_f = PolyMatrix::identity(n * n, order).add(&self.perturbation())?;
        let cq = YBOperator::from_rack(&self.rack, order);
        YBOperator::new(n, cq.matrix().mul(&one_plus_f)?)
    }

    pub fn ybe_deformed(&self) -> Result<YbeVerdict, Error> {
        Ok(self.assemble()?.check_ybe())
    }
}

/// `c_Q (I + f)` for a matrix `f` over the truncated ring.
pub fn deform(rack: &Rack, f: &PolyMatrix) -> Result<YBOperator, Error> {
    let n = rack.size();
    let cq = YBOperator::from_rack(rack, f.order());
    YBOperator::new(n, cq.matrix().mul(&PolyMatrix::identity(n * n, f.order()).add(f)?)?)
}

/// The perturbation term `c_Q^{-1} c - I` of a deformation of `c_Q`.
pub fn perturbation_of(rack: &Rack, c: &YBOperator) -> Result<PolyMatrix, Error> {
    if c.n() != rack.size() {
        return Err(Error::Dimension(format!("operator on n = {}, rack of size {}", c.n(), rack.size())));
    }
    let cq_inv = YBOperator::from_rack(rack, c.order()).inverse();
    cq_inv.matrix().mul(c.matrix())?.sub(&PolyMatrix::identity(c.n() * c.n(), c.order()))
}

/// Whether each `h`-coefficient of an `n² × n²` matrix is an entropic 2-cochain.
pub fn entropic_by_degree(rack: &Rack, m: &PolyMatrix) -> Result<Vec<bool>, Error> {
    (0..m.order())
        .map(|k| is_entropic(rack, &Cochain::new(rack.size(), 2, m.coefficient(k))?))
        .collect()
}
