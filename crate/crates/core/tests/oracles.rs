//! Values frozen from brute-force computations that share no code with the
//! library beyond the rack tables.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use yb_core::cohomology::{coboundary, coboundary_matrix, entropic_basis, rack_cocycle_witness, Cochain};
use yb_core::deform::{deform, Equivalence};
use yb_core::poly::TruncPoly;
use yb_core::yb::{PolyMatrix, YBOperator};
use yb_core::linalg::rational::int;
use yb_core::linalg::{kernel_basis, Rational, SparseMat};
use yb_core::rack::{d3_transpositions, d4_reflections, Rack};
use yb_core::Config;

/// Dimension of `{g : g⊗I + I⊗g commutes with c_Q}`, solved as a linear
/// system in the `n²` entries of `g` from dense matrices.
fn centralizer_dim(r: &Rack) -> usize {
    let n = r.size();
    let nn = n * n;
    let mut cq = vec![vec![0i64; nn]; nn];
    for x in 0..n {
        for y in 0..n {
            cq[y * n + r.op(x, y)][x * n + y] = 1;
        }
    }
    // the column for unknown g[a][b] is the commutator of c_Q with
    // E_ab ⊗ I + I ⊗ E_ab
    let mut columns = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let mut s = vec![vec![0i64; nn]; nn];
            for t in 0..n {
                s[a * n + t][b * n + t] += 1;
                s[t * n + a][t * n + b] += 1;
            }
            let mul = |p: &Vec<Vec<i64>>, q: &Vec<Vec<i64>>| {
                let mut out = vec![vec![0i64; nn]; nn];
                for i in 0..nn {
                    for k in 0..nn {
                        if p[i][k] != 0 {
                            for j in 0..nn {
                                out[i][j] += p[i][k] * q[k][j];
                            }
                        }
                    }
                }
                out
            };
            let (l, rgt) = (mul(&cq, &s), mul(&s, &cq));
            columns.push((0..nn * nn).map(|idx| l[idx / nn][idx % nn] - rgt[idx / nn][idx % nn]).collect::<Vec<_>>());
        }
    }
    let rows: Vec<Vec<Rational>> = (0..nn * nn).map(|i| columns.iter().map(|c| int(c[i])).collect()).collect();
    kernel_basis(&SparseMat::from_dense(&rows)).dim()
}

#[test]
fn kernel_of_d1_matches_centralizer() {
    let cfg = Config::default();
    for (r, frozen) in [
        (d3_transpositions(), 1),
        (Rack::trivial(2).unwrap(), 4),
        (Rack::dihedral(4).unwrap(), 4),
        (Rack::dihedral(5).unwrap(), 1),
    ] {
        let oracle = centralizer_dim(&r);
        assert_eq!(oracle, frozen);
        assert_eq!(kernel_basis(&coboundary_matrix(&r, 1, &cfg).unwrap()).dim(), frozen);
    }
}

#[test]
fn d4_orbit_count_factors_over_slots() {
    let cfg = Config::default();
    let r = d4_reflections();
    let one_slot = entropic_basis(&r, 1, &cfg).unwrap().len();
    assert_eq!(one_slot, 4);
    assert_eq!(entropic_basis(&r, 2, &cfg).unwrap().len(), one_slot * one_slot);
    assert_eq!(entropic_basis(&d3_transpositions(), 2, &cfg).unwrap().len(), 1);
    assert_eq!(entropic_basis(&Rack::trivial(3).unwrap(), 2, &cfg).unwrap().len(), 81);
}

fn brute_cocycle(r: &Rack, a: &[Vec<u64>], m: u64) -> bool {
    let n = r.size();
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                (a[x][y] + a[r.op(x, y)][z]) % m == (a[x][z] + a[r.op(x, z)][r.op(y, z)]) % m
            })
        })
    })
}

#[test]
fn rack_cocycle_check_matches_brute_force() {
    let r = d3_transpositions();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut seen = [0usize; 2];
    for trial in 0..300u64 {
        let a: Vec<Vec<u64>> = if trial < 3 {
            vec![vec![trial; 3]; 3]
        } else {
            (0..3).map(|_| (0..3).map(|_| rng.gen_range(0..3)).collect()).collect()
        };
        let brute = brute_cocycle(&r, &a, 3);
        let witness = rack_cocycle_witness(&r, &a, 3).unwrap();
        assert_eq!(witness.is_none(), brute);
        if let Some([x, y, z]) = witness {
            assert_ne!((a[x][y] + a[r.op(x, y)][z]) % 3, (a[x][z] + a[r.op(x, z)][r.op(y, z)]) % 3);
        }
        seen[brute as usize] += 1;
    }
    assert!(seen[0] > 0 && seen[1] > 0, "{seen:?}");
}

/// Over `Q[h]/(h²)`, conjugating `c_Q` by `I + h·g` gives `c_Q(I - h·d¹g)`.
#[test]
fn first_order_conjugation_sign() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for r in [d3_transpositions(), d4_reflections(), Rack::dihedral(5).unwrap()] {
        let n = r.size();
        for _ in 0..5 {
            let g = yb_core::sample::cochain(&mut rng, n, 1, 3, 4).unwrap();
            let alpha = Equivalence::new(PolyMatrix::from_coefficients(
                &[SparseMat::identity(n), g.matrix().clone()],
                2,
            ))
            .unwrap();
            let conjugated = alpha.conjugate(&YBOperator::from_rack(&r, 2)).unwrap();
            let dg: Cochain = coboundary(&r, &g).unwrap();
            let f = PolyMatrix::from_coefficients(&[SparseMat::zero(n * n, n * n), dg.matrix().clone()], 2)
                .scale(&TruncPoly::constant(int(-1), 2));
            assert_eq!(conjugated, deform(&r, &f).unwrap());
        }
    }
}
