use std::collections::{BTreeMap, HashSet};

use num_traits::{One, Zero};

use super::rational::Rational;
use super::sparse::SparseVec;

/// Incremental row echelon form over the rationals.
///
/// Rows are kept with a leading coefficient of one, keyed by their leading
/// column. Reduction only ever eliminates the leading entry, so fill-in stays
/// to the right of the pivot. [`Echelon::into_rref`] back-substitutes to the
/// unique reduced form.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    pivots: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon { dim, pivots: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` until its leading column is not a pivot column.
    /// The result is zero iff `v` lies in the span of the rows.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        debug_assert_eq!(v.len(), self.dim);
        loop {
            let (lead, coeff) = match v.leading() {
                Some((i, c)) => (i, c.clone()),
                None => return v,
            };
            match self.pivots.get(&lead) {
                Some(p) => v = v.add_scaled(&-coeff, p),
                None => return v,
            }
        }
    }

    /// Adds `v` to the row space; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce(v);
        match r.leading() {
            None => false,
            Some((lead, c)) => {
                let inv = Rational::one() / c;
                let row = r.scale(&inv);
                self.pivots.insert(lead, row);
                true
            }
        }
    }

    pub fn is_full(&self) -> bool {
        self.pivots.len() == self.dim
    }

    /// Rows of the reduced row echelon form, ordered by pivot column.
    pub fn into_rref(self) -> Vec<SparseVec> {
        let pivot_cols: Vec<usize> = self.pivots.keys().copied().collect();
        let pivot_set: HashSet<usize> = pivot_cols.iter().copied().collect();
        let mut reduced: BTreeMap<usize, SparseVec> = BTreeMap::new();
        let mut pivots = self.pivots;
        for &col in pivot_cols.iter().rev() {
            let mut row = pivots.remove(&col).expect("pivot row");
            // every later pivot row is already fully reduced
            let hits: Vec<(usize, Rational)> = row
                .iter()
                .filter(|(c, _)| *c != col && pivot_set.contains(c))
                .map(|(c, v)| (c, v.clone()))
                .collect();
            for (c, v) in hits {
                row = row.add_scaled(&-v, &reduced[&c]);
            }
            reduced.insert(col, row);
        }
        reduced.into_values().collect()
    }
}

/// Echelon form of a batch of rows; duplicate rows (up to scaling) are
/// skipped and short rows are processed first.
pub fn echelon_of<I>(dim: usize, rows: I) -> Echelon
where
    I: IntoIterator<Item = SparseVec>,
{
    let mut seen: HashSet<SparseVec> = HashSet::new();
    let mut unique: Vec<SparseVec> = Vec::new();
    for r in rows {
        let Some((_, lead)) = r.leading() else { continue };
        let normalized = r.scale(&(Rational::one() / lead));
        if seen.insert(normalized.clone()) {
            unique.push(normalized);
        }
    }
    unique.sort_by_key(|r| (r.nnz(), r.leading().map(|(i, _)| i)));
    let mut ech = Echelon::new(dim);
    for r in unique {
        ech.insert(r);
        if ech.is_full() {
            break;
        }
    }
    ech
}

/// Inverse of a square matrix given densely, by Gauss-Jordan elimination.
/// Pivot rule: first nonzero entry in the column, scanning rows downward.
pub fn dense_inverse(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = Rational::one() / &a[col][col];
        for j in 0..n {
            a[col][j] = &a[col][j] * &p;
            inv[col][j] = &inv[col][j] * &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let da = &a[col][j] * &f;
                a[r][j] -= da;
                let di = &inv[col][j] * &f;
                inv[r][j] -= di;
            }
        }
    }
    Some(inv)
}
