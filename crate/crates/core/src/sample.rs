//! Seeded random inputs: rationals, cochains, parameters and equivalences.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::cohomology::Cochain;
use crate::deform::Equivalence;
use crate::error::Error;
use crate::linalg::{Rational, SparseVec};
use crate::poly::TruncPoly;
use crate::yb::PolyMatrix;

/// `p/q` with `|p| <= bound` and `1 <= q <= bound`.
pub fn rational<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    let bound = bound.max(1);
    Rational::new(rng.gen_range(-bound..=bound).into(), rng.gen_range(1..=bound).into())
}

pub fn nonzero_rational<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    loop {
        let r = rational(rng, bound);
        if r != Rational::from_integer(0.into()) {
            return r;
        }
    }
}

/// A polynomial whose coefficients from `h^from` on are random.
pub fn poly<R: Rng + ?Sized>(rng: &mut R, order: usize, from: usize, bound: i64) -> TruncPoly {
    let coeffs = (0..order)
        .map(|k| if k < from { Rational::from_integer(0.into()) } else { rational(rng, bound) })
        .collect();
    TruncPoly::from_coeffs(coeffs, order)
}

/// A degree-`d` cochain with `nnz` random entries at random positions.
pub fn cochain<R: Rng + ?Sized>(rng: &mut R, n: usize, degree: usize, nnz: usize, bound: i64) -> Result<Cochain, Error> {
    let entries: Vec<_> = (0..nnz)
        .map(|_| {
            let x = (0..degree).map(|_| rng.gen_range(0..n)).collect();
            let y = (0..degree).map(|_| rng.gen_range(0..n)).collect();
            (x, y, nonzero_rational(rng, bound))
        })
        .collect();
    Cochain::from_entries(n, degree, entries)
}

/// A random combination of `vectors`, each used with probability one half
/// (at least one is always used when the list is nonempty).
pub fn combination<R: Rng + ?Sized>(rng: &mut R, dim: usize, vectors: &[SparseVec], bound: i64) -> SparseVec {
    let mut acc = SparseVec::zero(dim);
    let forced = if vectors.is_empty() { None } else { Some(rng.gen_range(0..vectors.len())) };
    for (i, v) in vectors.iter().enumerate() {
        if Some(i) == forced || rng.gen_bool(0.5) {
            acc = acc.add_scaled(&nonzero_rational(rng, bound), v);
        }
    }
    acc
}

/// `I + Σ_{k>=1} h^k g_k` with sparse random `g_k`.
pub fn equivalence<R: Rng + ?Sized>(rng: &mut R, n: usize, order: usize, bound: i64) -> Equivalence {
    let mut triplets: Vec<(usize, usize, TruncPoly)> = (0..n).map(|i| (i, i, TruncPoly::one(order))).collect();
    let mut cells: Vec<(usize, usize)> = (0..n).flat_map(|r| (0..n).map(move |c| (r, c))).collect();
    for k in 1..order {
        cells.shuffle(rng);
        let count = rng.gen_range(1..=n.max(2));
        for &(r, c) in cells.iter().take(count) {
            triplets.push((r, c, TruncPoly::monomial(k, nonzero_rational(rng, bound), order)));
        }
    }
    let m = PolyMatrix::from_triplets(n, n, order, triplets).expect("indices in range");
    Equivalence::new(m).expect("congruent to the identity")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn deterministic_for_a_seed() {
        let a = cochain(&mut ChaCha8Rng::seed_from_u64(7), 3, 2, 5, 4).unwrap();
        let b = cochain(&mut ChaCha8Rng::seed_from_u64(7), 3, 2, 5, 4).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn equivalence_is_identity_mod_h() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let e = equivalence(&mut rng, 4, 3, 5);
        assert!(!e.is_identity());
        assert_eq!(e.order(), 3);
    }
}
