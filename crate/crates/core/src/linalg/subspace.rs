use num_traits::{One, Zero};

use super::echelon::{echelon_of, Echelon};
use super::rational::Rational;
use super::sparse::{SparseMat, SparseVec};
use crate::error::Error;

/// Linear subspace of Q^n, held as a reduced row echelon basis.
///
/// The reduced basis of a subspace is unique, so derived equality is
/// subspace equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<SparseVec>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: (0..ambient_dim).map(|i| SparseVec::unit(ambient_dim, i)).collect(),
        }
    }

    pub fn span<I>(ambient_dim: usize, vectors: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = SparseVec>,
    {
        let vectors: Vec<SparseVec> = vectors.into_iter().collect();
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::Dimension(format!(
                "vector of length {} in ambient dimension {ambient_dim}",
                v.len()
            )));
        }
        Ok(Subspace { ambient_dim, basis: echelon_of(ambient_dim, vectors).into_rref() })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis.iter().filter_map(|v| v.leading().map(|(i, _)| i)).collect()
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.ambient_dim);
        for v in &self.basis {
            e.insert(v.clone());
        }
        e
    }

    pub fn contains(&self, v: &SparseVec) -> Result<bool, Error> {
        if v.len() != self.ambient_dim {
            return Err(Error::Dimension(format!(
                "vector of length {} tested against ambient dimension {}",
                v.len(),
                self.ambient_dim
            )));
        }
        // reduced basis: one elimination per pivot hit suffices
        let mut r = v.clone();
        for b in &self.basis {
            let (p, _) = b.leading().expect("nonzero basis vector");
            let c = r.get(p);
            if !c.is_zero() {
                r = r.add_scaled(&-c, b);
            }
        }
        Ok(r.is_zero())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, Error> {
        for v in &self.basis {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        check_same_ambient(self, other)?;
        let mut e = self.echelon();
        for v in &other.basis {
            e.insert(v.clone());
        }
        Ok(Subspace { ambient_dim: self.ambient_dim, basis: e.into_rref() })
    }
}

fn check_same_ambient(a: &Subspace, b: &Subspace) -> Result<(), Error> {
    if a.ambient_dim != b.ambient_dim {
        return Err(Error::Dimension(format!(
            "subspaces of ambient dimensions {} and {}",
            a.ambient_dim, b.ambient_dim
        )));
    }
    Ok(())
}

/// `(dim(a + b), dim(a ∩ b))`.
pub fn sum_and_intersection_dims(a: &Subspace, b: &Subspace) -> Result<(usize, usize), Error> {
    let s = a.sum(b)?.dim();
    Ok((s, a.dim() + b.dim() - s))
}

pub fn rank(m: &SparseMat) -> usize {
    echelon_of(m.cols(), m.row_vectors().iter().cloned()).rank()
}

/// Basis of `{ v : m v = 0 }`.
pub fn kernel_basis(m: &SparseMat) -> Subspace {
    let rref = echelon_of(m.cols(), m.row_vectors().iter().cloned()).into_rref();
    let pivots: Vec<usize> = rref.iter().map(|r| r.leading().expect("nonzero row").0).collect();
    let mut is_pivot = vec![false; m.cols()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    // column-wise view of the non-pivot part of the rref
    let mut free_entries: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); m.cols()];
    for (row, &p) in rref.iter().zip(&pivots) {
        for (c, v) in row.iter() {
            if c != p {
                free_entries[c].push((p, -v.clone()));
            }
        }
    }
    let vectors = (0..m.cols()).filter(|&c| !is_pivot[c]).map(|free| {
        let mut pairs = std::mem::take(&mut free_entries[free]);
        pairs.push((free, Rational::one()));
        SparseVec::from_pairs(m.cols(), pairs)
    });
    Subspace::span(m.cols(), vectors).expect("kernel vectors have the right length")
}

/// Basis of the column span of `m`.
pub fn image_basis(m: &SparseMat) -> Subspace {
    Subspace::span(m.rows(), m.columns()).expect("columns have the right length")
}

/// Some `x` with `m x = b`, or `None` when the system is inconsistent.
/// Free variables are set to zero, so the answer is deterministic.
pub fn solve(m: &SparseMat, b: &SparseVec) -> Result<Option<SparseVec>, Error> {
    if b.len() != m.rows() {
        return Err(Error::Dimension(format!(
            "right-hand side of length {} for {} rows",
            b.len(),
            m.rows()
        )));
    }
    let n = m.cols();
    let augmented = m.row_vectors().iter().enumerate().map(|(r, row)| {
        let mut pairs: Vec<(usize, Rational)> = row.entries().to_vec();
        let br = b.get(r);
        pairs.push((n, br));
        SparseVec::from_pairs(n + 1, pairs)
    });
    let mut ech = Echelon::new(n + 1);
    for row in augmented {
        ech.insert(row);
    }
    let rref = ech.into_rref();
    let mut x = Vec::new();
    for row in &rref {
        let (p, _) = row.leading().expect("nonzero row");
        if p == n {
            return Ok(None);
        }
        let rhs = row.get(n);
        x.push((p, rhs));
    }
    Ok(Some(SparseVec::from_pairs(n, x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::int;

    fn v(xs: &[i64]) -> SparseVec {
        SparseVec::from_dense(&xs.iter().map(|&x| int(x)).collect::<Vec<_>>())
    }

    fn m(rows: &[&[i64]]) -> SparseMat {
        SparseMat::from_dense(&rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&SparseMat::zero(3, 3)).dim(), 3);
        assert_eq!(kernel_basis(&SparseMat::identity(4)).dim(), 0);
        let k = kernel_basis(&m(&[&[1, 2], &[2, 4]]));
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&v(&[2, -1])).unwrap());
        assert!(!k.contains(&v(&[1, 1])).unwrap());
    }

    #[test]
    fn image_examples() {
        assert_eq!(image_basis(&SparseMat::identity(4)).dim(), 4);
        assert_eq!(image_basis(&SparseMat::zero(3, 2)).dim(), 0);
        assert_eq!(image_basis(&m(&[&[1, 2], &[2, 4]])).dim(), 1);
    }

    #[test]
    fn contains_examples() {
        let s = Subspace::span(2, [v(&[1, 0])]).unwrap();
        assert!(s.contains(&v(&[3, 0])).unwrap());
        assert!(!s.contains(&v(&[0, 1])).unwrap());
        let plane = Subspace::span(2, [v(&[1, 2]), v(&[0, 1])]).unwrap();
        assert!(plane.contains(&v(&[5, 7])).unwrap());
        assert!(s.contains(&v(&[1, 0, 0])).is_err());
    }

    #[test]
    fn sum_intersection_examples() {
        let e1 = Subspace::span(2, [v(&[1, 0])]).unwrap();
        let e2 = Subspace::span(2, [v(&[0, 1])]).unwrap();
        assert_eq!(sum_and_intersection_dims(&e1, &e1).unwrap(), (1, 1));
        assert_eq!(sum_and_intersection_dims(&e1, &e2).unwrap(), (2, 0));
        let a = Subspace::span(2, [v(&[1, 1])]).unwrap();
        let b = Subspace::span(2, [v(&[1, -1])]).unwrap();
        assert_eq!(sum_and_intersection_dims(&a, &b).unwrap(), (2, 0));
        assert!(sum_and_intersection_dims(&a, &Subspace::zero(3)).is_err());
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = m(&[&[1, 2], &[2, 4]]);
        let x = solve(&a, &v(&[3, 6])).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), v(&[3, 6]));
        assert!(solve(&a, &v(&[1, 0])).unwrap().is_none());
    }
}
