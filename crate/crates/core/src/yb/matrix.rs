use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::Error;
use crate::linalg::{dense_inverse, Rational, SparseMat};
use crate::poly::TruncPoly;

/// Sparse vector over `Q[h]/(h^N)`: increasing indices, no zero entries.
pub type PolyVec = Vec<(usize, TruncPoly)>;

/// Sparse matrix over `Q[h]/(h^N)`, stored by columns.
///
/// Column `j` lists the image of basis vector `j`. Entries are kept sorted
/// by row and nonzero, so derived equality is matrix equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    order: usize,
    columns: Vec<PolyVec>,
}

fn accumulate(order: usize, acc: &mut BTreeMap<usize, TruncPoly>, index: usize, value: &TruncPoly) {
    let slot = acc.entry(index).or_insert_with(|| TruncPoly::zero(order));
    *slot = &*slot + value;
}

fn finish(acc: BTreeMap<usize, TruncPoly>) -> PolyVec {
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

impl PolyMatrix {
    pub fn zero(rows: usize, cols: usize, order: usize) -> Self {
        PolyMatrix { rows, cols, order, columns: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize, order: usize) -> Self {
        PolyMatrix {
            rows: n,
            cols: n,
            order,
            columns: (0..n).map(|j| vec![(j, TruncPoly::one(order))]).collect(),
        }
    }

    /// Permutation matrix sending basis vector `j` to `images[j]`.
    pub fn from_permutation(images: &[usize], order: usize) -> Self {
        let n = images.len();
        PolyMatrix {
            rows: n,
            cols: n,
            order,
            columns: images.iter().map(|&i| vec![(i, TruncPoly::one(order))]).collect(),
        }
    }

    pub fn from_triplets<I>(rows: usize, cols: usize, order: usize, triplets: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (usize, usize, TruncPoly)>,
    {
        let mut acc: Vec<BTreeMap<usize, TruncPoly>> = vec![BTreeMap::new(); cols];
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(Error::Dimension(format!("entry ({r}, {c}) outside a {rows}x{cols} matrix")));
            }
            accumulate(order, &mut acc[c], r, &v.truncate(order));
        }
        Ok(PolyMatrix { rows, cols, order, columns: acc.into_iter().map(finish).collect() })
    }

    pub fn from_rational(m: &SparseMat, order: usize) -> Self {
        PolyMatrix::from_coefficients(std::slice::from_ref(m), order)
    }

    /// `Σ_k h^k · coeffs[k]`.
    pub fn from_coefficients(coeffs: &[SparseMat], order: usize) -> Self {
        let (rows, cols) = coeffs.first().map_or((0, 0), SparseMat::shape);
        let triplets = coeffs.iter().enumerate().take(order).flat_map(|(k, m)| {
            assert_eq!(m.shape(), (rows, cols), "coefficient shapes differ");
            m.triplets().map(move |(r, c, v)| (r, c, TruncPoly::monomial(k, v.clone(), order)))
        });
        PolyMatrix::from_triplets(rows, cols, order, triplets).expect("in-bounds triplets")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn column(&self, j: usize) -> &[(usize, TruncPoly)] {
        &self.columns[j]
    }

    pub fn get(&self, r: usize, c: usize) -> TruncPoly {
        match self.columns[c].binary_search_by_key(&r, |(i, _)| *i) {
            Ok(pos) => self.columns[c][pos].1.clone(),
            Err(_) => TruncPoly::zero(self.order),
        }
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// Row-major `(row, col, value)` triples.
    pub fn triplets(&self) -> Vec<(usize, usize, &TruncPoly)> {
        let mut t: Vec<_> =
            self.columns.iter().enumerate().flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v))).collect();
        t.sort_by_key(|(r, c, _)| (*r, *c));
        t
    }

    /// The coefficient of `h^k` as a rational matrix.
    pub fn coefficient(&self, k: usize) -> SparseMat {
        let triplets = self.columns.iter().enumerate().flat_map(|(c, col)| {
            col.iter().filter_map(move |(r, v)| {
                let x = v.coeff(k);
                (!x.is_zero()).then_some((*r, c, x))
            })
        });
        SparseMat::from_triplets(self.rows, self.cols, triplets).expect("in-bounds triplets")
    }

    pub fn constant_term(&self) -> SparseMat {
        self.coefficient(0)
    }

    pub fn truncate(&self, order: usize) -> PolyMatrix {
        let columns = self
            .columns
            .iter()
            .map(|col| col.iter().map(|(r, v)| (*r, v.truncate(order))).filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        PolyMatrix { rows: self.rows, cols: self.cols, order, columns }
    }

    pub fn apply(&self, v: &[(usize, TruncPoly)]) -> PolyVec {
        let mut acc = BTreeMap::new();
        for (j, x) in v {
            for (r, m) in &self.columns[*j] {
                accumulate(self.order, &mut acc, *r, &(m * x));
            }
        }
        finish(acc)
    }

    /// Matrix product `self · other` (apply `other` first).
    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix, Error> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let order = self.order.min(other.order);
        let columns = other.columns.iter().map(|col| self.apply(col)).collect();
        Ok(PolyMatrix { rows: self.rows, cols: other.cols, order, columns }.truncate(order))
    }

    fn combine(&self, other: &PolyMatrix, negate: bool) -> Result<PolyMatrix, Error> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Dimension("matrix shapes differ".into()));
        }
        let order = self.order.min(other.order);
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| {
                let mut acc = BTreeMap::new();
                for (r, v) in a {
                    accumulate(order, &mut acc, *r, v);
                }
                for (r, v) in b {
                    accumulate(order, &mut acc, *r, &if negate { -v } else { v.clone() });
                }
                finish(acc)
            })
            .collect();
        Ok(PolyMatrix { rows: self.rows, cols: self.cols, order, columns })
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix, Error> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<PolyMatrix, Error> {
        self.combine(other, true)
    }

    pub fn scale(&self, s: &TruncPoly) -> PolyMatrix {
        let order = self.order.min(s.order());
        let columns = self
            .columns
            .iter()
            .map(|col| col.iter().map(|(r, v)| (*r, v * s)).filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        PolyMatrix { rows: self.rows, cols: self.cols, order, columns }
    }

    /// Kronecker product; index `(i, j)` of the result is `i * other.dim + j`.
    pub fn kron(&self, other: &PolyMatrix) -> PolyMatrix {
        let order = self.order.min(other.order);
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut columns = Vec::with_capacity(cols);
        for a_col in &self.columns {
            for b_col in &other.columns {
                let mut col: PolyVec = Vec::new();
                for (ra, va) in a_col {
                    for (rb, vb) in b_col {
                        let v = va * vb;
                        if !v.is_zero() {
                            col.push((ra * other.rows + rb, v));
                        }
                    }
                }
                columns.push(col);
            }
        }
        PolyMatrix { rows, cols, order, columns }
    }

    pub fn trace(&self) -> TruncPoly {
        let mut t = TruncPoly::zero(self.order);
        for j in 0..self.cols.min(self.rows) {
            t = &t + &self.get(j, j);
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        *self == PolyMatrix::identity(self.rows, self.order) && self.rows == self.cols
    }

    /// Inverse over `Q[h]/(h^N)`: the constant term is inverted exactly and
    /// the higher terms are corrected by a truncated geometric series.
    pub fn inverse(&self) -> Result<PolyMatrix, Error> {
        if self.rows != self.cols {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let c0 = self.constant_term();
        let dense: Vec<Vec<Rational>> = (0..n).map(|r| c0.row(r).to_dense()).collect();
        let inv0 = dense_inverse(&dense)
            .ok_or_else(|| Error::NotInvertible("constant term is singular".into()))?;
        let inv0 = PolyMatrix::from_rational(&SparseMat::from_dense(&inv0), self.order);
        // self = C0 (I + E) with E = C0^-1 (self - C0), nilpotent mod h^N
        let c0p = PolyMatrix::from_rational(&c0, self.order);
        let e = inv0.mul(&self.sub(&c0p)?)?;
        let neg_e = e.scale(&-TruncPoly::one(self.order));
        let mut series = PolyMatrix::identity(n, self.order);
        let mut term = PolyMatrix::identity(n, self.order);
        for _ in 1..self.order {
            term = term.mul(&neg_e)?;
            series = series.add(&term)?;
        }
        series.mul(&inv0)
    }

    pub fn pow(&self, k: u32) -> Result<PolyMatrix, Error> {
        let mut acc = PolyMatrix::identity(self.rows, self.order);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }
}

/// Applies `op` (an operator on `V ⊗ V`, `dim V = n`) to the tensor factors
/// `pos` and `pos + 1` (0-based) of a vector in `V^{⊗k}`.
pub fn apply_local(op: &PolyMatrix, n: usize, k: usize, pos: usize, v: &[(usize, TruncPoly)]) -> PolyVec {
    debug_assert!(pos + 1 < k);
    let w1 = n.pow((k - 1 - pos) as u32);
    let w2 = w1 / n;
    let mut acc = BTreeMap::new();
    for (idx, x) in v {
        let d1 = (idx / w1) % n;
        let d2 = (idx / w2) % n;
        let base = idx - d1 * w1 - d2 * w2;
        for (r, m) in op.column(d1 * n + d2) {
            accumulate(op.order(), &mut acc, base + (r / n) * w1 + (r % n) * w2, &(m * x));
        }
    }
    finish(acc)
}
