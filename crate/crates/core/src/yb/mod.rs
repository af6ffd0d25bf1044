//! Yang-Baxter operators on `V ⊗ V` and the braid group representations
//! they induce.
//!
//! The basis of `V` is indexed by `0..n`; `x ⊗ y` has index `x * n + y`, and
//! `V^{⊗k}` uses the same lexicographic base-`n` encoding. Matrices act on
//! column vectors: column `j` is the image of basis vector `j`.

mod braid;
mod matrix;

use num_traits::Zero;

pub use braid::{braid_rep, BraidWord, MAX_BRAID_DIM};
pub use matrix::{apply_local, PolyMatrix, PolyVec};

use crate::error::Error;
use crate::linalg::rational::one as rat_one;
use crate::linalg::Rational;
use crate::poly::TruncPoly;
use crate::rack::Rack;

/// An invertible operator on `V ⊗ V` with entries in `Q[h]/(h^N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YBOperator {
    n: usize,
    matrix: PolyMatrix,
}

/// Outcome of a Yang-Baxter check. A failure names the lexicographically
/// first basis triple `(x, y, z)` on which the two sides differ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum YbeVerdict {
    Holds,
    Fails { witness: [usize; 3] },
}

impl YbeVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, YbeVerdict::Holds)
    }
}

impl YBOperator {
    /// Wraps an `n² × n²` matrix, rejecting it if it is not invertible.
    pub fn new(n: usize, matrix: PolyMatrix) -> Result<Self, Error> {
        let dim = n * n;
        if n == 0 || matrix.rows() != dim || matrix.cols() != dim {
            return Err(Error::Dimension(format!(
                "expected a {dim}x{dim} matrix for n = {n}, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        matrix.inverse()?;
        Ok(YBOperator { n, matrix })
    }

    /// The rack operator `x ⊗ y ↦ y ⊗ (x * y)`.
    pub fn from_rack(rack: &Rack, order: usize) -> Self {
        let n = rack.size();
        let images: Vec<usize> = (0..n * n).map(|i| {
            let (x, y) = (i / n, i % n);
            y * n + rack.op(x, y)
        })
        .collect();
        YBOperator { n, matrix: PolyMatrix::from_permutation(&images, order) }
    }

    /// The transposition `x ⊗ y ↦ y ⊗ x`.
    pub fn tau(n: usize, order: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::Dimension("tau needs n >= 1".into()));
        }
        let images: Vec<usize> = (0..n * n).map(|i| (i % n) * n + i / n).collect();
        Ok(YBOperator { n, matrix: PolyMatrix::from_permutation(&images, order) })
    }

    /// The rank-two operator with corners `q` and middle block `[[0, q²], [q², q - q³]]`.
    pub fn jones(q: &Rational) -> Result<Self, Error> {
        if q.is_zero() {
            return Err(Error::NotInvertible("q = 0".into()));
        }
        let q2 = q * q;
        let c = |v: Rational| TruncPoly::constant(v, 1);
        let entries = vec![
            (0, 0, c(q.clone())),
            (1, 2, c(q2.clone())),
            (2, 1, c(q2.clone())),
            (2, 2, c(q - &q2 * q)),
            (3, 3, c(q.clone())),
        ];
        YBOperator::new(2, PolyMatrix::from_triplets(4, 4, 1, entries)?)
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

    pub fn into_matrix(self) -> PolyMatrix {
        self.matrix
    }

    pub fn inverse(&self) -> YBOperator {
        YBOperator { n: self.n, matrix: self.matrix.inverse().expect("checked invertible") }
    }

    /// Compares `(c⊗I)(I⊗c)(c⊗I)` with `(I⊗c)(c⊗I)(I⊗c)` column by column.
    pub fn check_ybe(&self) -> YbeVerdict {
        let n = self.n;
        let c = &self.matrix;
        let one = TruncPoly::one(c.order());
        for idx in 0..n * n * n {
            let e = vec![(idx, one.clone())];
            let left = apply_local(c, n, 3, 0, &apply_local(c, n, 3, 1, &apply_local(c, n, 3, 0, &e)));
            let right = apply_local(c, n, 3, 1, &apply_local(c, n, 3, 0, &apply_local(c, n, 3, 1, &e)));
            if left != right {
                return YbeVerdict::Fails { witness: [idx / (n * n), (idx / n) % n, idx % n] };
            }
        }
        YbeVerdict::Holds
    }

    /// Trace of `c^k`.
    pub fn trace_power(&self, k: u32) -> Result<TruncPoly, Error> {
        if k == 0 {
            return Err(Error::OutOfRange("trace_power needs k >= 1".into()));
        }
        Ok(self.matrix.pow(k)?.trace())
    }
}

pub fn build_cq(rack: &Rack) -> YBOperator {
    YBOperator::from_rack(rack, 1)
}

pub fn build_tau(n: usize) -> Result<YBOperator, Error> {
    YBOperator::tau(n, 1)
}

pub fn build_jones(q: &Rational) -> Result<YBOperator, Error> {
    YBOperator::jones(q)
}

pub fn check_ybe(c: &YBOperator) -> YbeVerdict {
    c.check_ybe()
}

pub fn trace_power(c: &YBOperator, k: u32) -> Result<TruncPoly, Error> {
    c.trace_power(k)
}

/// Recovers the rack table from a permutation operator of the form `c_Q`.
pub fn decode_rack_operator(c: &YBOperator) -> Option<Vec<Vec<usize>>> {
    let n = c.n();
    let one = rat_one();
    let mut table = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            let col = c.matrix().column(x * n + y);
            let [(r, v)] = col else { return None };
            if v.coeffs().iter().skip(1).any(|c| !c.is_zero()) || *v.constant_term() != one || r / n != y {
                return None;
            }
            table[x][y] = r % n;
        }
    }
    Some(table)
}
