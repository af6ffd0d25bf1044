use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::Error;

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVec {
    len: usize,
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn zero(len: usize) -> Self {
        SparseVec { len, entries: Vec::new() }
    }

    pub fn unit(len: usize, index: usize) -> Self {
        assert!(index < len, "unit index {index} out of range {len}");
        SparseVec { len, entries: vec![(index, Rational::one())] }
    }

    /// Builds a vector from arbitrary `(index, value)` pairs; duplicates are summed.
    pub fn from_pairs<I>(len: usize, pairs: I) -> Self
    where
        I: IntoIterator<Item = (usize, Rational)>,
    {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, v) in pairs {
            assert!(i < len, "index {i} out of range {len}");
            *acc.entry(i).or_insert_with(Rational::zero) += v;
        }
        SparseVec {
            len,
            entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        SparseVec {
            len: values.len(),
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn get(&self, index: usize) -> Rational {
        match self.entries.binary_search_by_key(&index, |(i, _)| *i) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn scale(&self, s: &Rational) -> SparseVec {
        if s.is_zero() {
            return SparseVec::zero(self.len);
        }
        SparseVec {
            len: self.len,
            entries: self.entries.iter().map(|(i, v)| (*i, v * s)).collect(),
        }
    }

    /// `self + s * other`, merged in one pass.
    pub fn add_scaled(&self, s: &Rational, other: &SparseVec) -> SparseVec {
        debug_assert_eq!(self.len, other.len);
        if s.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((ia, va)), Some((ib, vb))) => {
                    if ia < ib {
                        out.push((*ia, va.clone()));
                        a.next();
                    } else if ib < ia {
                        out.push((*ib, vb * s));
                        b.next();
                    } else {
                        let v = va + vb * s;
                        if !v.is_zero() {
                            out.push((*ia, v));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((ia, va)), None) => {
                    out.push((*ia, va.clone()));
                    a.next();
                }
                (None, Some((ib, vb))) => {
                    out.push((*ib, vb * s));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { len: self.len, entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(&Rational::one(), other)
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(&-Rational::one(), other)
    }

    pub fn dot(&self, other: &SparseVec) -> Rational {
        let mut acc = Rational::zero();
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        while let (Some((ia, va)), Some((ib, vb))) = (a.peek(), b.peek()) {
            if ia < ib {
                a.next();
            } else if ib < ia {
                b.next();
            } else {
                acc += va * vb;
                a.next();
                b.next();
            }
        }
        acc
    }
}

/// Sparse rational matrix stored row by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl SparseMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMat { rows, cols, data: vec![SparseVec::zero(cols); rows] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMat { rows: n, cols: n, data: (0..n).map(|i| SparseVec::unit(n, i)).collect() }
    }

    /// Coordinate triples; duplicate positions are summed, zeros dropped.
    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut buckets: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); rows];
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(Error::Dimension(format!(
                    "entry ({r}, {c}) outside a {rows}x{cols} matrix"
                )));
            }
            buckets[r].push((c, v));
        }
        Ok(SparseMat {
            rows,
            cols,
            data: buckets.into_iter().map(|b| SparseVec::from_pairs(cols, b)).collect(),
        })
    }

    pub fn from_rows(cols: usize, rows: Vec<SparseVec>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "row length mismatch");
        SparseMat { rows: rows.len(), cols, data: rows }
    }

    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Self {
        assert!(columns.iter().all(|c| c.len() == rows), "column length mismatch");
        SparseMat::from_rows(rows, columns).transpose()
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        SparseMat::from_rows(cols, rows.iter().map(|r| SparseVec::from_dense(r)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, r: usize) -> &SparseVec {
        &self.data[r]
    }

    pub fn row_vectors(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.data[r].get(c)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(SparseVec::is_zero)
    }

    /// Row-major `(row, col, value)` triples.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.data.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, c, v)))
    }

    pub fn transpose(&self) -> SparseMat {
        let mut buckets: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.cols];
        for (r, c, v) in self.triplets() {
            buckets[c].push((r, v.clone()));
        }
        SparseMat {
            rows: self.cols,
            cols: self.rows,
            data: buckets.into_iter().map(|entries| SparseVec { len: self.rows, entries }).collect(),
        }
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        self.transpose().data
    }

    pub fn mul_vec(&self, v: &SparseVec) -> Result<SparseVec, Error> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok(SparseVec::from_pairs(
            self.rows,
            self.data.iter().enumerate().filter_map(|(r, row)| {
                let d = row.dot(v);
                (!d.is_zero()).then_some((r, d))
            }),
        ))
    }

    pub fn mul(&self, other: &SparseMat) -> Result<SparseMat, Error> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc = SparseVec::zero(other.cols);
                for (k, v) in row.iter() {
                    acc = acc.add_scaled(v, &other.data[k]);
                }
                acc
            })
            .collect();
        Ok(SparseMat { rows: self.rows, cols: other.cols, data })
    }

    pub fn add(&self, other: &SparseMat) -> Result<SparseMat, Error> {
        self.combine(&Rational::one(), other)
    }

    pub fn sub(&self, other: &SparseMat) -> Result<SparseMat, Error> {
        self.combine(&-Rational::one(), other)
    }

    fn combine(&self, s: &Rational, other: &SparseMat) -> Result<SparseMat, Error> {
        if self.shape() != other.shape() {
            return Err(Error::Dimension(format!(
                "shape mismatch {:?} vs {:?}",
                self.shape(),
                other.shape()
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add_scaled(s, b)).collect();
        Ok(SparseMat { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, s: &Rational) -> SparseMat {
        SparseMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|r| r.scale(s)).collect(),
        }
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(blocks: &[&SparseMat]) -> Result<SparseMat, Error> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        if blocks.iter().any(|b| b.cols != cols) {
            return Err(Error::Dimension("vstack of matrices with different widths".into()));
        }
        let data: Vec<SparseVec> = blocks.iter().flat_map(|b| b.data.iter().cloned()).collect();
        Ok(SparseMat { rows: data.len(), cols, data })
    }
}
