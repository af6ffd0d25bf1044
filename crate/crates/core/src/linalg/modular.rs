//! Rank over a prime field, used only to cross-check rational results.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::rational::Rational;
use super::sparse::SparseMat;

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

fn reduce_int(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
}

/// Image of `x` in Z/p, or `None` if p divides the denominator.
pub fn reduce_mod(x: &Rational, p: u64) -> Option<u64> {
    let d = reduce_int(x.denom(), p);
    if d.is_zero() {
        return None;
    }
    let n = reduce_int(x.numer(), p);
    Some(((n as u128 * inv_mod(d, p) as u128) % p as u128) as u64)
}

/// Rank of `m` over Z/p for a prime `p < 2^63`. `None` when some entry has a
/// denominator divisible by `p`.
pub fn rank_mod_p(m: &SparseMat, p: u64) -> Option<usize> {
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let mut pivots: BTreeMap<usize, Vec<(usize, u64)>> = BTreeMap::new();
    for row in m.row_vectors() {
        let mut r: Vec<(usize, u64)> = Vec::with_capacity(row.nnz());
        for (c, v) in row.iter() {
            let x = reduce_mod(v, p)?;
            if x != 0 {
                r.push((c, x));
            }
        }
        while let Some(&(lead, coeff)) = r.first() {
            let Some(prow) = pivots.get(&lead) else {
                let inv = inv_mod(coeff, p);
                let normalized = r.iter().map(|&(c, v)| (c, mul(v, inv))).collect();
                pivots.insert(lead, normalized);
                break;
            };
            // r -= coeff * prow
            let mut out = Vec::with_capacity(r.len() + prow.len());
            let (mut i, mut j) = (0, 0);
            while i < r.len() || j < prow.len() {
                let take_r = j >= prow.len() || (i < r.len() && r[i].0 < prow[j].0);
                let take_p = i >= r.len() || (j < prow.len() && prow[j].0 < r[i].0);
                if take_r {
                    out.push(r[i]);
                    i += 1;
                } else if take_p {
                    out.push((prow[j].0, (p - mul(coeff, prow[j].1)) % p));
                    j += 1;
                } else {
                    let v = (r[i].1 + p - mul(coeff, prow[j].1)) % p;
                    if v != 0 {
                        out.push((r[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            r = out;
        }
    }
    Some(pivots.len())
}
