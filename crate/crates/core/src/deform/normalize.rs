use num_traits::Zero;

use super::{entropic_by_degree, perturbation_of};
use crate::cohomology::{coboundary_matrix, entropic_basis, is_entropic, symmetrize, Cochain};
use crate::config::Config;
use crate::error::Error;
use crate::linalg::{solve, SparseMat, SparseVec};
use crate::poly::TruncPoly;
use crate::rack::Rack;
use crate::yb::{PolyMatrix, YBOperator, YbeVerdict};

/// An `n × n` matrix over `Q[h]/(h^N)` congruent to the identity modulo `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equivalence {
    n: usize,
    matrix: PolyMatrix,
}

impl Equivalence {
    pub fn new(matrix: PolyMatrix) -> Result<Self, Error> {
        let n = matrix.rows();
        if matrix.cols() != n || n == 0 {
            return Err(Error::Dimension("equivalence must be a nonempty square matrix".into()));
        }
        if matrix.constant_term() != SparseMat::identity(n) {
            return Err(Error::OutOfRange("equivalence is not congruent to the identity modulo h".into()));
        }
        Ok(Equivalence { n, matrix })
    }

    pub fn identity(n: usize, order: usize) -> Self {
        Equivalence { n, matrix: PolyMatrix::identity(n, order) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.matrix.order()
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    /// `self · other`.
    pub fn then(&self, other: &Equivalence) -> Result<Equivalence, Error> {
        Equivalence::new(self.matrix.mul(&other.matrix)?)
    }

    /// `(α ⊗ α)^{-1} c (α ⊗ α)`.
    pub fn conjugate(&self, c: &YBOperator) -> Result<YBOperator, Error> {
        if c.n() != self.n {
            return Err(Error::Dimension(format!("operator on n = {}, equivalence on n = {}", c.n(), self.n)));
        }
        let inv = self.matrix.inverse()?;
        let aa = self.matrix.kron(&self.matrix);
        let aa_inv = inv.kron(&inv);
        YBOperator::new(self.n, aa_inv.mul(c.matrix())?.mul(&aa)?)
    }
}

/// Result of [`normalize_to_entropic`]: `operator = (α ⊗ α)^{-1} c (α ⊗ α)`
/// with `c_Q^{-1} · operator` entropic in every degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub alpha: Equivalence,
    pub operator: YBOperator,
    /// `c_Q^{-1} · operator - I`.
    pub perturbation: PolyMatrix,
}

/// Conjugates a deformation of `c_Q` into an entropic one, one `h`-degree at
/// a time: symmetrize the degree-`k` term, keep its quasi-diagonal part,
/// split the rest as entropic part plus `d¹g`, and conjugate by `I + h^k g`,
/// which subtracts `d¹g` from the degree-`k` term.
pub fn normalize_to_entropic(rack: &Rack, c: &YBOperator, cfg: &Config) -> Result<Normalized, Error> {
    let n = rack.size();
    cfg.check_rack_size(n)?;
    if c.n() != n {
        return Err(Error::Dimension(format!("operator on n = {}, rack of size {n}", c.n())));
    }
    let order = c.order();
    if c.matrix().constant_term() != YBOperator::from_rack(rack, 1).matrix().constant_term() {
        return Err(Error::NotADeformation);
    }
    if let YbeVerdict::Fails { witness } = c.check_ybe() {
        return Err(Error::NotYangBaxter(witness));
    }

    let group = rack.inner_group(cfg.inner_group_cap)?;
    let labels = rack.behavior_labels();
    let basis = entropic_basis(rack, 2, cfg)?;
    let d1 = coboundary_matrix(rack, 1, cfg)?;
    let mut columns = basis.vectors();
    let n_entropic = columns.len();
    columns.extend(d1.columns());
    let system = SparseMat::from_columns(n.pow(4), columns);

    let mut alpha = Equivalence::identity(n, order);
    let mut current = c.clone();
    for k in 1..order {
        let e = perturbation_of(rack, &current)?;
        let ek = Cochain::new(n, 2, e.coefficient(k))?;
        if is_entropic(rack, &ek)? {
            continue;
        }
        let sym = symmetrize(&group, &ek)?;
        let quasi = sym
            .entries()
            .into_iter()
            .filter(|(x, y, _)| x.iter().zip(y).all(|(&a, &b)| labels[a] == labels[b]));
        let f = Cochain::from_entries(n, 2, quasi)?;
        let delta = ek.sub(&f)?;
        let x = solve(&system, &delta.to_vector())?
            .ok_or_else(|| Error::Internal(format!("degree-{k} remainder is not in E² + B²")))?;
        let g = SparseVec::from_pairs(
            n * n,
            x.iter().filter(|(i, _)| *i >= n_entropic).map(|(i, v)| (i - n_entropic, v.clone())),
        );
        let step = Equivalence::new(identity_plus(n, order, k, &g))?;
        current = step.conjugate(&current)?;
        alpha = alpha.then(&step)?;
        let ek_new = Cochain::new(n, 2, perturbation_of(rack, &current)?.coefficient(k))?;
        if !is_entropic(rack, &ek_new)? {
            return Err(Error::Internal(format!("degree-{k} term still not entropic after conjugation")));
        }
    }

    let perturbation = perturbation_of(rack, &current)?;
    if entropic_by_degree(rack, &perturbation)?.contains(&false) || alpha.conjugate(c)? != current {
        return Err(Error::Internal("normalization failed its final check".into()));
    }
    Ok(Normalized { alpha, operator: current, perturbation })
}

/// `I + h^k g` with `g` given as the vector of an `n × n` matrix (row-major).
fn identity_plus(n: usize, order: usize, k: usize, g: &SparseVec) -> PolyMatrix {
    let id = (0..n).map(|i| (i, i, TruncPoly::one(order)));
    let corr = g
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (i / n, i % n, TruncPoly::monomial(k, v.clone(), order)));
    PolyMatrix::from_triplets(n, n, order, id.chain(corr)).expect("indices in range")
}


#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::deform::DeformationFamily;
    use crate::linalg::rational::int;
    use crate::rack::{d3_transpositions, d4_reflections};
    use crate::sample;

    #[test]
    fn entropic_input_is_fixed() {
        let r = d4_reflections();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let params = (0..16).map(|_| sample::poly(&mut rng, 3, 1, 4)).collect();
        let c = DeformationFamily::from_rack(&r, params, &Config::default()).unwrap().assemble().unwrap();
        let out = normalize_to_entropic(&r, &c, &Config::default()).unwrap();
        assert!(out.alpha.is_identity());
        assert_eq!(out.operator, c);
    }

    #[test]
    fn conjugated_family_round_trip() {
        let r = d4_reflections();
        let cfg = Config::default();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let params = (0..16).map(|_| sample::poly(&mut rng, 3, 1, 4)).collect();
        let c0 = DeformationFamily::from_rack(&r, params, &cfg).unwrap().assemble().unwrap();
        let beta = sample::equivalence(&mut rng, 4, 3, 3);
        let input = beta.conjugate(&c0).unwrap();
        let out = normalize_to_entropic(&r, &input, &cfg).unwrap();
        assert_eq!(out.alpha.conjugate(&input).unwrap(), out.operator);
        assert!(entropic_by_degree(&r, &out.perturbation).unwrap().iter().all(|&e| e));
        assert!(out.operator.check_ybe().holds());
    }

    #[test]
    fn rigid_rack_normalizes_to_scalar() {
        let r = d3_transpositions();
        let cfg = Config::default();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let s = sample::poly(&mut rng, 3, 1, 5) + TruncPoly::one(3);
        let scaled = YBOperator::new(3, YBOperator::from_rack(&r, 3).matrix().scale(&s)).unwrap();
        let input = sample::equivalence(&mut rng, 3, 3, 3).conjugate(&scaled).unwrap();
        let out = normalize_to_entropic(&r, &input, &cfg).unwrap();
        let expected = PolyMatrix::identity(9, 3).scale(&(&s - &TruncPoly::one(3)));
        assert_eq!(out.perturbation, expected);
    }

    #[test]
    fn rejects_bad_inputs() {
        let r = d3_transpositions();
        let cfg = Config::default();
        let tau = YBOperator::tau(3, 2).unwrap();
        assert_eq!(normalize_to_entropic(&r, &tau, &cfg), Err(Error::NotADeformation));
        let bump = Cochain::indicator(3, &[0, 1], &[1, 0]).unwrap();
        let f = PolyMatrix::from_coefficients(&[SparseMat::zero(9, 9), bump.matrix().clone()], 2);
        let c = crate::deform::deform(&r, &f).unwrap();
        assert!(matches!(normalize_to_entropic(&r, &c, &cfg), Err(Error::NotYangBaxter(_))));
        let e = Equivalence::new(PolyMatrix::identity(3, 1).scale(&TruncPoly::constant(int(2), 1)));
        assert!(e.is_err());
    }
}
