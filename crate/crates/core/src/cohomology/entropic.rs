use std::collections::HashMap;

use num_traits::{One, Zero};

use super::coboundary::coboundary_i;
use super::cochain::{encode, side, Cochain};
use crate::config::Config;
use crate::error::Error;
use crate::linalg::{Rational, SparseVec, Subspace};
use crate::rack::{PermGroup, Rack};

/// An index pair `(x⃗, y⃗)` of a cochain entry `f⟨x⃗ → y⃗⟩`.
pub type IndexPair = (Vec<usize>, Vec<usize>);

/// Basis of the entropic cochains of one degree: the indicator functions of
/// the orbits of quasi-diagonal index pairs under the componentwise action of
/// `Inn(Q)^d`. Orbits are sorted internally and listed by their least pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntropicBasis {
    n: usize,
    degree: usize,
    orbits: Vec<Vec<IndexPair>>,
}

impl EntropicBasis {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn orbits(&self) -> &[Vec<IndexPair>] {
        &self.orbits
    }

    /// Indicator cochain of orbit `k`.
    pub fn cochain(&self, k: usize) -> Cochain {
        let entries = self.orbits[k].iter().map(|(x, y)| (x.clone(), y.clone(), Rational::one()));
        Cochain::from_entries(self.n, self.degree, entries).expect("orbit indices in range")
    }

    pub fn cochains(&self) -> Vec<Cochain> {
        (0..self.len()).map(|k| self.cochain(k)).collect()
    }

    /// `Σ coeffs[k] · indicator_k`.
    pub fn combination(&self, coeffs: &[Rational]) -> Result<Cochain, Error> {
        if coeffs.len() != self.len() {
            return Err(Error::Dimension(format!("{} coefficients for {} orbits", coeffs.len(), self.len())));
        }
        let entries = self
            .orbits
            .iter()
            .zip(coeffs)
            .filter(|(_, c)| !c.is_zero())
            .flat_map(|(orbit, c)| orbit.iter().map(move |(x, y)| (x.clone(), y.clone(), c.clone())));
        Cochain::from_entries(self.n, self.degree, entries)
    }

    pub fn vectors(&self) -> Vec<SparseVec> {
        self.cochains().iter().map(Cochain::to_vector).collect()
    }

    pub fn subspace(&self) -> Subspace {
        let dim = side(self.n, self.degree).expect("checked at construction").pow(2);
        Subspace::span(dim, self.vectors()).expect("vectors of the cochain dimension")
    }

    /// Map from `(encode(y⃗), encode(x⃗))` to the orbit containing that pair.
    pub fn orbit_lookup(&self) -> HashMap<(usize, usize), usize> {
        let mut out = HashMap::new();
        for (k, orbit) in self.orbits.iter().enumerate() {
            for (x, y) in orbit {
                out.insert((encode(self.n, y), encode(self.n, x)), k);
            }
        }
        out
    }

    /// Coefficients of `f` in this basis, if `f` is entropic.
    pub fn coordinates(&self, f: &Cochain) -> Option<Vec<Rational>> {
        let coeffs: Vec<Rational> = self.orbits.iter().map(|o| f.get(&o[0].0, &o[0].1)).collect();
        let rebuilt = self.combination(&coeffs).ok()?;
        (rebuilt == *f).then_some(coeffs)
    }
}

/// Orbits of behaviorally equivalent pairs `(x, y)` under the diagonal action
/// of the right translations.
fn pair_orbits(rack: &Rack) -> Vec<Vec<(usize, usize)>> {
    let n = rack.size();
    let labels = rack.behavior_labels();
    let mut seen = vec![false; n * n];
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if labels[x] != labels[y] || seen[x * n + y] {
                continue;
            }
            seen[x * n + y] = true;
            let mut orbit = vec![(x, y)];
            let mut next = 0;
            while next < orbit.len() {
                let (a, b) = orbit[next];
                next += 1;
                for g in 0..n {
                    let (a2, b2) = (rack.op(a, g), rack.op(b, g));
                    if !seen[a2 * n + b2] {
                        seen[a2 * n + b2] = true;
                        orbit.push((a2, b2));
                    }
                }
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
    }
    out
}

/// The orbit basis of degree-`d` entropic cochains. Orbits are computed from
/// the generators `ρ(y)` only, so the inner group is never enumerated.
pub fn entropic_basis(rack: &Rack, degree: usize, cfg: &Config) -> Result<EntropicBasis, Error> {
    let n = rack.size();
    let pairs = side(n, degree)?.pow(2);
    if pairs > cfg.max_matrix_rows {
        return Err(Error::SizeLimit(format!("degree-{degree} cochains on {n} elements exceed {}", cfg.max_matrix_rows)));
    }
    let slot = pair_orbits(rack);
    let mut orbits = Vec::new();
    let mut choice = vec![0usize; degree];
    loop {
        let mut members: Vec<IndexPair> = vec![(Vec::with_capacity(degree), Vec::with_capacity(degree))];
        for &k in &choice {
            members = members
                .into_iter()
                .flat_map(|(x, y)| {
                    slot[k].iter().map(move |&(a, b)| {
                        let (mut x2, mut y2) = (x.clone(), y.clone());
                        x2.push(a);
                        y2.push(b);
                        (x2, y2)
                    })
                })
                .collect();
        }
        members.sort_unstable();
        orbits.push(members);

        let mut pos = degree;
        loop {
            if pos == 0 {
                orbits.sort_unstable_by(|a: &Vec<IndexPair>, b| a[0].cmp(&b[0]));
                return Ok(EntropicBasis { n, degree, orbits });
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < slot.len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// True iff every partial coboundary `d_i f` vanishes.
pub fn is_entropic(rack: &Rack, f: &Cochain) -> Result<bool, Error> {
    for i in 0..=f.degree() {
        if !coboundary_i(rack, f, i)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `f⟨x⃗ → y⃗⟩ = 0` unless `x_i ≡ y_i` for every slot.
pub fn is_quasi_diagonal(rack: &Rack, f: &Cochain) -> bool {
    let labels = rack.behavior_labels();
    f.entries().iter().all(|(x, y, _)| x.iter().zip(y).all(|(&a, &b)| labels[a] == labels[b]))
}

/// Invariance under `Inn(Q)` acting independently on each slot, tested on generators.
pub fn is_fully_equivariant(rack: &Rack, f: &Cochain) -> bool {
    let entries = f.entries();
    for slot in 0..f.degree() {
        for g in 0..rack.size() {
            for (x, y, v) in &entries {
                let (mut x2, mut y2) = (x.clone(), y.clone());
                x2[slot] = rack.op(x[slot], g);
                y2[slot] = rack.op(y[slot], g);
                if f.get(&x2, &y2) != *v {
                    return false;
                }
            }
        }
    }
    true
}

/// Average of `α f` over the group, `(α f)⟨x⃗ → y⃗⟩ = f⟨x⃗^α → y⃗^α⟩`
/// with the same `α` in every slot.
pub fn symmetrize(group: &PermGroup, f: &Cochain) -> Result<Cochain, Error> {
    if group.degree() != f.n() {
        return Err(Error::Dimension(format!("group of degree {} acting on cochains over {} elements", group.degree(), f.n())));
    }
    let weight = Rational::new(1.into(), group.order().into());
    let mut entries = Vec::new();
    for (x, y, v) in f.entries() {
        let w = &v * &weight;
        for g in group.elements() {
            let xs = x.iter().map(|&a| g.apply(a)).collect();
            let ys = y.iter().map(|&b| g.apply(b)).collect();
            entries.push((xs, ys, w.clone()));
        }
    }
    Cochain::from_entries(f.n(), f.degree(), entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::int;
    use crate::rack::{d3_transpositions, d4_reflections};

    #[test]
    fn orbit_counts() {
        let cfg = Config::default();
        assert_eq!(entropic_basis(&Rack::trivial(3).unwrap(), 2, &cfg).unwrap().len(), 81);
        assert_eq!(entropic_basis(&d3_transpositions(), 2, &cfg).unwrap().len(), 1);
        assert_eq!(entropic_basis(&d4_reflections(), 2, &cfg).unwrap().len(), 16);
        assert_eq!(entropic_basis(&d3_transpositions(), 1, &cfg).unwrap().len(), 1);
    }

    #[test]
    fn orbits_are_ordered_and_disjoint() {
        let b = entropic_basis(&d4_reflections(), 2, &Config::default()).unwrap();
        let firsts: Vec<_> = b.orbits().iter().map(|o| o[0].clone()).collect();
        assert!(firsts.windows(2).all(|w| w[0] < w[1]));
        let total: usize = b.orbits().iter().map(Vec::len).sum();
        assert_eq!(b.orbit_lookup().len(), total);
    }

    #[test]
    fn identity_is_entropic() {
        for r in [d3_transpositions(), d4_reflections()] {
            for d in 1..=2 {
                assert!(is_entropic(&r, &Cochain::identity(r.size(), d)).unwrap());
            }
        }
    }

    #[test]
    fn trivial_rack_everything_entropic() {
        let r = Rack::trivial(2).unwrap();
        let f = Cochain::from_entries(2, 2, [(vec![0, 1], vec![1, 1], int(3)), (vec![1, 0], vec![0, 0], int(-2))]).unwrap();
        assert!(is_entropic(&r, &f).unwrap());
    }

    #[test]
    fn off_diagonal_indicator_not_entropic() {
        let r = d3_transpositions();
        let f = Cochain::indicator(3, &[0, 0], &[0, 1]).unwrap();
        assert!(!is_entropic(&r, &f).unwrap());
        assert!(!is_quasi_diagonal(&r, &f));
    }

    #[test]
    fn basis_cochains_satisfy_both_characterizations() {
        let r = d4_reflections();
        for f in entropic_basis(&r, 2, &Config::default()).unwrap().cochains() {
            assert!(is_entropic(&r, &f).unwrap());
            assert!(is_quasi_diagonal(&r, &f) && is_fully_equivariant(&r, &f));
        }
    }

    #[test]
    fn symmetrize_fixes_equivariant_and_is_idempotent() {
        let r = d3_transpositions();
        let g = r.inner_group(1000).unwrap();
        let id = Cochain::identity(3, 2);
        assert_eq!(symmetrize(&g, &id).unwrap(), id);
        let f = Cochain::indicator(3, &[0, 1], &[2, 1]).unwrap();
        let s = symmetrize(&g, &f).unwrap();
        assert_eq!(symmetrize(&g, &s).unwrap(), s);
        assert_ne!(s, f);
    }

    #[test]
    fn symmetrize_trivial_group_is_identity() {
        let r = Rack::trivial(3).unwrap();
        let g = r.inner_group(10).unwrap();
        let f = Cochain::indicator(3, &[0, 1], &[2, 1]).unwrap();
        assert_eq!(symmetrize(&g, &f).unwrap(), f);
    }

    #[test]
    fn coordinates_roundtrip() {
        let r = d4_reflections();
        let b = entropic_basis(&r, 2, &Config::default()).unwrap();
        let coeffs: Vec<Rational> = (0..16).map(int).collect();
        let f = b.combination(&coeffs).unwrap();
        assert_eq!(b.coordinates(&f), Some(coeffs));
        assert_eq!(b.coordinates(&Cochain::indicator(4, &[0, 0], &[0, 0]).unwrap()), None);
    }
}
