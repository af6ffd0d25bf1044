//! The sixteen-parameter family of the D₄ reflection quandle in the
//! customary `λ₁..λ₁₆` labelling.

use super::DeformationFamily;
use crate::error::Error;
use crate::poly::TruncPoly;
use crate::rack::d4_reflections;
use crate::yb::PolyMatrix;

/// Layout of `c(λ) - c_Q` in the lexicographic basis, listed by input
/// vector: basis vector `r` is sent to `λ_l` times basis vector `c` for each
/// `(c, l)` in `LAMBDA_LAYOUT[r]`.
pub const LAMBDA_LAYOUT: [[(usize, usize); 4]; 16] = [
    [(0, 1), (1, 2), (4, 3), (5, 4)],
    [(0, 3), (1, 4), (4, 1), (5, 2)],
    [(8, 5), (9, 6), (12, 7), (13, 8)],
    [(8, 7), (9, 8), (12, 5), (13, 6)],
    [(0, 2), (1, 1), (4, 4), (5, 3)],
    [(0, 4), (1, 3), (4, 2), (5, 1)],
    [(8, 6), (9, 5), (12, 8), (13, 7)],
    [(8, 8), (9, 7), (12, 6), (13, 5)],
    [(2, 9), (3, 10), (6, 11), (7, 12)],
    [(2, 11), (3, 12), (6, 9), (7, 10)],
    [(10, 13), (11, 14), (14, 15), (15, 16)],
    [(10, 15), (11, 16), (14, 13), (15, 14)],
    [(2, 10), (3, 9), (6, 12), (7, 11)],
    [(2, 12), (3, 11), (6, 10), (7, 9)],
    [(10, 14), (11, 13), (14, 16), (15, 15)],
    [(10, 16), (11, 15), (14, 14), (15, 13)],
];

/// `ORBIT_TO_LAMBDA[k]` is the label `l` of `λ_l` carried by orbit `k` of
/// the degree-2 entropic basis.
pub const ORBIT_TO_LAMBDA: [usize; 16] = [1, 3, 2, 4, 6, 8, 5, 7, 10, 12, 9, 11, 13, 15, 14, 16];

/// `c(λ) - c_Q` laid out from [`LAMBDA_LAYOUT`]; `lambda[l - 1]` is `λ_l`.
pub fn layout_matrix(lambda: &[TruncPoly]) -> Result<PolyMatrix, Error> {
    check_len(lambda)?;
    let order = lambda[0].order();
    let triplets = LAMBDA_LAYOUT
        .iter()
        .enumerate()
        .flat_map(|(r, row)| row.iter().map(move |&(c, l)| (c, r, lambda[l - 1].clone())));
    PolyMatrix::from_triplets(16, 16, order, triplets)
}

/// Reorders `λ₁..λ₁₆` into orbit order.
pub fn orbit_params(lambda: &[TruncPoly]) -> Result<Vec<TruncPoly>, Error> {
    check_len(lambda)?;
    Ok(ORBIT_TO_LAMBDA.iter().map(|&l| lambda[l - 1].clone()).collect())
}

/// Inverse of [`orbit_params`].
pub fn lambda_params(fam: &DeformationFamily) -> Result<Vec<TruncPoly>, Error> {
    check_family(fam)?;
    let mut out = fam.params().to_vec();
    for (k, &l) in ORBIT_TO_LAMBDA.iter().enumerate() {
        out[l - 1] = fam.params()[k].clone();
    }
    Ok(out)
}

/// `4(λ₁+1)² + 4λ₄² + 4(λ₁₃+1)² + 4λ₁₆² + 8(λ₆+1)λ₁₁ + 8(λ₁₀+1)λ₇
/// + 8λ₂λ₃ + 8λ₁₄λ₁₅ + 8λ₅λ₉ + 8λ₈λ₁₂`.
pub fn trace_square_polynomial(lambda: &[TruncPoly]) -> Result<TruncPoly, Error> {
    check_len(lambda)?;
    let order = lambda[0].order();
    let l = |i: usize| &lambda[i - 1];
    let one = TruncPoly::one(order);
    let c = |k: i64| TruncPoly::constant(crate::linalg::rational::int(k), order);
    let sq = |p: TruncPoly| &p * &p;
    let terms = [
        &c(4) * &sq(l(1) + &one),
        &c(4) * &sq(l(4).clone()),
        &c(4) * &sq(l(13) + &one),
        &c(4) * &sq(l(16).clone()),
        &c(8) * &(&(l(6) + &one) * l(11)),
        &c(8) * &(&(l(10) + &one) * l(7)),
        &c(8) * &(l(2) * l(3)),
        &c(8) * &(l(14) * l(15)),
        &c(8) * &(l(5) * l(9)),
        &c(8) * &(l(8) * l(12)),
    ];
    Ok(terms.iter().fold(TruncPoly::zero(order), |acc, t| &acc + t))
}

/// Both sides of the trace identity: `tr[c(λ)²]` from the assembled
/// operator, and the closed polynomial at the same parameters.
pub fn trace_square_formula(fam: &DeformationFamily) -> Result<(TruncPoly, TruncPoly), Error> {
    let lambda = lambda_params(fam)?;
    let computed = fam.assemble()?.trace_power(2)?;
    Ok((computed, trace_square_polynomial(&lambda)?))
}

fn check_len(lambda: &[TruncPoly]) -> Result<(), Error> {
    if lambda.len() != 16 {
        return Err(Error::Dimension(format!("expected 16 parameters, got {}", lambda.len())));
    }
    Ok(())
}

fn check_family(fam: &DeformationFamily) -> Result<(), Error> {
    if *fam.rack() != d4_reflections() {
        return Err(Error::Dimension("the family is not over the D4 reflection quandle".into()));
    }
    Ok(())
}
