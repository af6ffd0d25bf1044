use std::collections::HashMap;

use num_traits::Zero;

use super::cochain::{decode, encode, side, Cochain};
use crate::config::Config;
use crate::error::Error;
use crate::linalg::{kernel_basis, image_basis, Rational, SparseMat, Subspace};
use crate::rack::Rack;

/// Calls `emit(x, y, sign)` for every output entry that the input entry
/// `f⟨x' → y'⟩` contributes to in `d_i f`.
fn partial_terms<F>(rack: &Rack, i: usize, x: &[usize], y: &[usize], mut emit: F)
where
    F: FnMut(&[usize], &[usize], bool),
{
    let n = rack.size();
    let d = x.len();
    let mut xo = Vec::with_capacity(d + 1);
    let mut yo = Vec::with_capacity(d + 1);
    for a in 0..n {
        let b = rack.act_word_inv(rack.act_word(a, &x[i..]), &y[i..]);
        xo.clear();
        yo.clear();
        xo.extend_from_slice(&x[..i]);
        xo.push(a);
        xo.extend_from_slice(&x[i..]);
        yo.extend_from_slice(&y[..i]);
        yo.push(b);
        yo.extend_from_slice(&y[i..]);
        emit(&xo, &yo, true);
    }
    for z in 0..n {
        xo.clear();
        yo.clear();
        xo.extend(x[..i].iter().map(|&v| rack.op_inv(v, z)));
        xo.push(z);
        xo.extend_from_slice(&x[i..]);
        yo.extend(y[..i].iter().map(|&v| rack.op_inv(v, z)));
        yo.push(z);
        yo.extend_from_slice(&y[i..]);
        emit(&xo, &yo, false);
    }
}

fn check_rack(rack: &Rack, f: &Cochain) -> Result<(), Error> {
    if rack.size() != f.n() {
        return Err(Error::Dimension(format!("cochain on {} elements, rack of size {}", f.n(), rack.size())));
    }
    Ok(())
}

/// The partial coboundary `d_i f` for `0 <= i <= deg f`.
pub fn coboundary_i(rack: &Rack, f: &Cochain, i: usize) -> Result<Cochain, Error> {
    check_rack(rack, f)?;
    let d = f.degree();
    if i > d {
        return Err(Error::OutOfRange(format!("partial index {i} exceeds degree {d}")));
    }
    let n = rack.size();
    side(n, d + 1)?;
    let mut acc: HashMap<(usize, usize), Rational> = HashMap::new();
    for (x, y, v) in f.entries() {
        partial_terms(rack, i, &x, &y, |xo, yo, plus| {
            let e = acc.entry((encode(n, yo), encode(n, xo))).or_insert_with(Rational::zero);
            if plus {
                *e += &v;
            } else {
                *e -= &v;
            }
        });
    }
    let s = side(n, d + 1)?;
    let m = SparseMat::from_triplets(s, s, acc.into_iter().map(|((r, c), v)| (r, c, v)))?;
    Cochain::new(n, d + 1, m)
}

/// `d f = Σ (-1)^i d_i f`.
pub fn coboundary(rack: &Rack, f: &Cochain) -> Result<Cochain, Error> {
    check_rack(rack, f)?;
    let mut acc = Cochain::zero(f.n(), f.degree() + 1);
    for i in 0..=f.degree() {
        let t = coboundary_i(rack, f, i)?;
        acc = if i % 2 == 0 { acc.add(&t)? } else { acc.sub(&t)? };
    }
    Ok(acc)
}

fn guard(rack: &Rack, degree: usize, cfg: &Config) -> Result<(usize, usize), Error> {
    if !(1..=3).contains(&degree) {
        return Err(Error::OutOfRange(format!("coboundary matrices are available in degrees 1..=3, got {degree}")));
    }
    let n = rack.size();
    let cols = side(n, degree)?.pow(2);
    let rows = side(n, degree + 1)?
        .checked_pow(2)
        .filter(|&r| r <= cfg.max_matrix_rows)
        .ok_or_else(|| Error::SizeLimit(format!("degree-{degree} coboundary for n = {n} exceeds {} rows", cfg.max_matrix_rows)))?;
    Ok((rows, cols))
}

fn assemble(rack: &Rack, degree: usize, cfg: &Config, parts: &[(usize, bool)]) -> Result<SparseMat, Error> {
    let (rows, cols) = guard(rack, degree, cfg)?;
    let n = rack.size();
    let s_in = side(n, degree)?;
    let s_out = side(n, degree + 1)?;
    let mut triplets = Vec::new();
    for col in 0..cols {
        let y = decode(n, degree, col / s_in);
        let x = decode(n, degree, col % s_in);
        let mut column: HashMap<usize, i64> = HashMap::new();
        for &(i, negate) in parts {
            partial_terms(rack, i, &x, &y, |xo, yo, plus| {
                let row = encode(n, yo) * s_out + encode(n, xo);
                *column.entry(row).or_insert(0) += if plus != negate { 1 } else { -1 };
            });
        }
        triplets.extend(column.into_iter().filter(|&(_, v)| v != 0).map(|(r, v)| (r, col, Rational::from_integer(v.into()))));
    }
    SparseMat::from_triplets(rows, cols, triplets)
}

/// Matrix of `d_i : C^d → C^{d+1}` in the indicator bases.
pub fn coboundary_i_matrix(rack: &Rack, degree: usize, i: usize, cfg: &Config) -> Result<SparseMat, Error> {
    if i > degree {
        return Err(Error::OutOfRange(format!("partial index {i} exceeds degree {degree}")));
    }
    assemble(rack, degree, cfg, &[(i, false)])
}

/// Matrix of `d : C^d → C^{d+1}` in the indicator bases.
pub fn coboundary_matrix(rack: &Rack, degree: usize, cfg: &Config) -> Result<SparseMat, Error> {
    let parts: Vec<(usize, bool)> = (0..=degree).map(|i| (i, i % 2 == 1)).collect();
    assemble(rack, degree, cfg, &parts)
}

/// Stacked matrices of all `d_i` in degree `d`; its kernel is the space of entropic cochains.
pub fn partial_coboundaries_matrix(rack: &Rack, degree: usize, cfg: &Config) -> Result<SparseMat, Error> {
    let blocks = (0..=degree).map(|i| coboundary_i_matrix(rack, degree, i, cfg)).collect::<Result<Vec<_>, _>>()?;
    SparseMat::vstack(&blocks.iter().collect::<Vec<_>>())
}

/// `Z^d`, the kernel of the degree-`d` coboundary.
pub fn cocycle_space(rack: &Rack, degree: usize, cfg: &Config) -> Result<Subspace, Error> {
    Ok(kernel_basis(&coboundary_matrix(rack, degree, cfg)?))
}

/// `B^d`, the image of the degree-`(d-1)` coboundary; `B^1 = 0`.
pub fn coboundary_space(rack: &Rack, degree: usize, cfg: &Config) -> Result<Subspace, Error> {
    if degree == 0 || degree > 3 {
        return Err(Error::OutOfRange(format!("coboundary spaces are available in degrees 1..=3, got {degree}")));
    }
    if degree == 1 {
        return Ok(Subspace::zero(side(rack.size(), 1)?.pow(2)));
    }
    Ok(image_basis(&coboundary_matrix(rack, degree - 1, cfg)?))
}
