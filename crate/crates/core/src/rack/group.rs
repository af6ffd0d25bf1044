use std::collections::{HashSet, VecDeque};

use super::perm::Perm;
use crate::error::Error;

/// Default bound on the number of elements enumerated by [`PermGroup::closure`].
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

/// A finite permutation group, enumerated explicitly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    /// Sorted, so two groups with the same elements compare equal.
    elements: Vec<Perm>,
}

impl PermGroup {
    /// Breadth-first closure of `generators` under right multiplication.
    pub fn closure(degree: usize, generators: Vec<Perm>, cap: usize) -> Result<Self, Error> {
        let id = Perm::identity(degree);
        let mut seen: HashSet<Perm> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(id.clone());
        queue.push_back(id);
        while let Some(g) = queue.pop_front() {
            for s in &generators {
                let h = g.then(s);
                if !seen.contains(&h) {
                    if seen.len() >= cap {
                        return Err(Error::GroupCapExceeded { cap });
                    }
                    seen.insert(h.clone());
                    queue.push_back(h);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort();
        Ok(PermGroup { degree, generators, elements })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Orbits of `0..degree`, each sorted, listed by smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut label = vec![usize::MAX; self.degree];
        let mut out = Vec::new();
        for start in 0..self.degree {
            if label[start] != usize::MAX {
                continue;
            }
            let mut orbit: Vec<usize> = self.elements.iter().map(|g| g.apply(start)).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &x in &orbit {
                label[x] = out.len();
            }
            out.push(orbit);
        }
        out
    }
}
