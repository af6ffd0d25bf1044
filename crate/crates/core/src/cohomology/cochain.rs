use num_traits::One;

use crate::error::Error;
use crate::linalg::{Rational, SparseMat, SparseVec};

/// Lexicographic base-`n` index of a tuple.
pub fn encode(n: usize, digits: &[usize]) -> usize {
    digits.iter().fold(0, |acc, &d| acc * n + d)
}

pub fn decode(n: usize, len: usize, mut index: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = index % n;
        index /= n;
    }
    out
}

/// A degree-`d` cochain: a linear map on `V^{⊗d}`, stored as an
/// `n^d × n^d` matrix whose entry at row `encode(y)`, column `encode(x)` is
/// the coefficient of `y` in the image of `x`.
///
/// As a vector (for the coboundary matrices) the entry `(y, x)` sits at
/// index `encode(y) * n^d + encode(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    n: usize,
    degree: usize,
    matrix: SparseMat,
}

impl Cochain {
    pub fn new(n: usize, degree: usize, matrix: SparseMat) -> Result<Self, Error> {
        let side = side(n, degree)?;
        if matrix.shape() != (side, side) {
            return Err(Error::Dimension(format!(
                "degree-{degree} cochain on {n} elements needs a {side}x{side} matrix, got {:?}",
                matrix.shape()
            )));
        }
        Ok(Cochain { n, degree, matrix })
    }

    pub fn zero(n: usize, degree: usize) -> Self {
        let s = side(n, degree).expect("cochain size");
        Cochain { n, degree, matrix: SparseMat::zero(s, s) }
    }

    pub fn identity(n: usize, degree: usize) -> Self {
        let s = side(n, degree).expect("cochain size");
        Cochain { n, degree, matrix: SparseMat::identity(s) }
    }

    /// The cochain with a single entry `1` at `x ↦ y`.
    pub fn indicator(n: usize, x: &[usize], y: &[usize]) -> Result<Self, Error> {
        let degree = x.len();
        if y.len() != degree || x.iter().chain(y).any(|&v| v >= n) {
            return Err(Error::OutOfRange("indicator indices".into()));
        }
        Cochain::from_entries(n, degree, [(x.to_vec(), y.to_vec(), Rational::one())])
    }

    /// Entries given as `(x, y, value)` meaning `f⟨x → y⟩ = value`; duplicates add up.
    pub fn from_entries<I>(n: usize, degree: usize, entries: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (Vec<usize>, Vec<usize>, Rational)>,
    {
        let s = side(n, degree)?;
        let triplets = entries.into_iter().map(|(x, y, v)| (encode(n, &y), encode(n, &x), v));
        Ok(Cochain { n, degree, matrix: SparseMat::from_triplets(s, s, triplets)? })
    }

    pub fn from_vector(n: usize, degree: usize, v: &SparseVec) -> Result<Self, Error> {
        let s = side(n, degree)?;
        if v.len() != s * s {
            return Err(Error::Dimension(format!("vector of length {} for {s}x{s} cochain", v.len())));
        }
        let triplets = v.iter().map(|(i, x)| (i / s, i % s, x.clone()));
        Ok(Cochain { n, degree, matrix: SparseMat::from_triplets(s, s, triplets)? })
    }

    pub fn to_vector(&self) -> SparseVec {
        let s = self.matrix.rows();
        SparseVec::from_pairs(s * s, self.matrix.triplets().map(|(r, c, v)| (r * s + c, v.clone())))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn matrix(&self) -> &SparseMat {
        &self.matrix
    }

    pub fn get(&self, x: &[usize], y: &[usize]) -> Rational {
        self.matrix.get(encode(self.n, y), encode(self.n, x))
    }

    /// Nonzero entries as `(x, y, value)`.
    pub fn entries(&self) -> Vec<(Vec<usize>, Vec<usize>, Rational)> {
        self.matrix
            .triplets()
            .map(|(r, c, v)| (decode(self.n, self.degree, c), decode(self.n, self.degree, r), v.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    fn check_compatible(&self, other: &Cochain) -> Result<(), Error> {
        if (self.n, self.degree) != (other.n, other.degree) {
            return Err(Error::Dimension("cochains of different size or degree".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain, Error> {
        self.check_compatible(other)?;
        Ok(Cochain { n: self.n, degree: self.degree, matrix: self.matrix.add(&other.matrix)? })
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain, Error> {
        self.check_compatible(other)?;
        Ok(Cochain { n: self.n, degree: self.degree, matrix: self.matrix.sub(&other.matrix)? })
    }

    pub fn scale(&self, s: &Rational) -> Cochain {
        Cochain { n: self.n, degree: self.degree, matrix: self.matrix.scale(s) }
    }

    pub fn nnz(&self) -> usize {
        self.matrix.nnz()
    }
}

pub(crate) fn side(n: usize, degree: usize) -> Result<usize, Error> {
    if n == 0 || degree == 0 {
        return Err(Error::OutOfRange("cochains need n >= 1 and degree >= 1".into()));
    }
    n.checked_pow(degree as u32)
        .filter(|s| s.checked_mul(*s).is_some())
        .ok_or_else(|| Error::SizeLimit(format!("{n}^{degree} overflows")))
}
