use super::matrix::{apply_local, PolyMatrix};
use super::YBOperator;
use crate::error::Error;
use crate::poly::TruncPoly;

/// Largest `n^k` for which [`braid_rep`] materialises a matrix.
pub const MAX_BRAID_DIM: usize = 1 << 16;

/// A word in the Artin generators of the braid group on `strands` strands.
/// Letter `i` stands for `σ_i`, letter `-i` for its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, Error> {
        if strands < 2 {
            return Err(Error::OutOfRange(format!("braid needs at least 2 strands, got {strands}")));
        }
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands) {
            return Err(Error::OutOfRange(format!("generator {bad} invalid on {strands} strands")));
        }
        Ok(BraidWord { strands, letters })
    }

    /// Whitespace-separated signed generator indices, e.g. `"1 2 -1"`.
    pub fn parse(strands: usize, s: &str) -> Result<Self, Error> {
        let letters = s
            .split_whitespace()
            .map(|t| t.parse::<i32>().map_err(|_| Error::Parse(format!("bad braid letter {t:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, Error> {
        if self.strands != other.strands {
            return Err(Error::Dimension("braids on different strand counts".into()));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }
}

/// The matrix of `w` on `V^{⊗k}`: `σ_i ↦ c_i = I^{⊗(i-1)} ⊗ c ⊗ I^{⊗(k-i-1)}`,
/// letters composed as maps, so the last letter acts first.
pub fn braid_rep(c: &YBOperator, w: &BraidWord) -> Result<PolyMatrix, Error> {
    let n = c.n();
    let k = w.strands();
    let dim = n
        .checked_pow(k as u32)
        .filter(|&d| d <= MAX_BRAID_DIM)
        .ok_or_else(|| Error::SizeLimit(format!("{n}^{k} exceeds {MAX_BRAID_DIM}")))?;
    let forward = c.matrix();
    let backward = if w.letters().iter().any(|&l| l < 0) { Some(c.inverse().into_matrix()) } else { None };
    let one = TruncPoly::one(c.order());
    let mut columns = Vec::with_capacity(dim);
    for j in 0..dim {
        let mut v = vec![(j, one.clone())];
        for &l in w.letters().iter().rev() {
            let op = if l > 0 { forward } else { backward.as_ref().expect("inverse computed") };
            v = apply_local(op, n, k, l.unsigned_abs() as usize - 1, &v);
        }
        columns.push(v);
    }
    let triplets = columns.into_iter().enumerate().flat_map(|(j, col)| col.into_iter().map(move |(r, x)| (r, j, x)));
    PolyMatrix::from_triplets(dim, dim, c.order(), triplets)
}
