//! Finite racks and quandles.
//!
//! A rack is stored as its operation table `table[x][y] = x * y` on the
//! indices `0..n`. Right translations `ρ(y): x ↦ x * y` are bijections and
//! rack automorphisms; the group they generate is the inner automorphism
//! group.

mod group;
mod named;
mod perm;

use serde::{Deserialize, Serialize};

pub use group::{PermGroup, DEFAULT_ELEMENT_CAP};
pub use named::{d3_transpositions, d4_reflections, parse_rack_spec, tetrahedral, load_rack};
pub use perm::Perm;

use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rack {
    size: usize,
    table: Vec<usize>,
    /// `inverse[x * n + y]` is the unique `z` with `z * y = x`.
    inverse: Vec<usize>,
    is_quandle: bool,
}

/// On-disk form: `{"size": n, "table": [[...]]}`, row `x`, column `y` holding `x * y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RackJson {
    pub size: usize,
    pub table: Vec<Vec<usize>>,
}

impl Rack {
    /// Checks the rack axioms on `table` and builds the rack. With
    /// `quandle_required`, idempotency is enforced too.
    pub fn validate(table: Vec<Vec<usize>>, quandle_required: bool) -> Result<Rack, Error> {
        let n = table.len();
        if n == 0 {
            return Err(Error::EmptyRack);
        }
        if let Some((x, row)) = table.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::Parse(format!("row {x} has {} entries, expected {n}", row.len())));
        }
        for (x, row) in table.iter().enumerate() {
            for (y, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::EntryOutOfRange { x, y, value: v, size: n });
                }
            }
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        let op = |x: usize, y: usize| flat[x * n + y];

        let mut inverse = vec![usize::MAX; n * n];
        for y in 0..n {
            for x in 0..n {
                let slot = &mut inverse[op(x, y) * n + y];
                if *slot != usize::MAX {
                    return Err(Error::NotRightInvertible { y });
                }
                *slot = x;
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if op(op(x, y), z) != op(op(x, z), op(y, z)) {
                        return Err(Error::NotSelfDistributive { x, y, z });
                    }
                }
            }
        }
        let is_quandle = (0..n).all(|x| op(x, x) == x);
        if quandle_required && !is_quandle {
            let x = (0..n).find(|&x| op(x, x) != x).expect("non-idempotent element");
            return Err(Error::NotIdempotent { x });
        }
        Ok(Rack { size: n, table: flat, inverse, is_quandle })
    }

    /// `x * y = x`.
    pub fn trivial(n: usize) -> Result<Rack, Error> {
        Rack::validate((0..n).map(|x| vec![x; n]).collect(), true)
    }

    /// `x * y = 2y - x mod n`.
    pub fn dihedral(n: usize) -> Result<Rack, Error> {
        Rack::validate(
            (0..n).map(|x| (0..n).map(|y| (2 * y + n - x) % n).collect()).collect(),
            true,
        )
    }

    /// Conjugation quandle `x * y = y⁻¹ x y` on a conjugation-closed set of
    /// permutations, indexed in the given order.
    pub fn conjugation_quandle(elements: &[Perm]) -> Result<Rack, Error> {
        let index = |p: &Perm| elements.iter().position(|q| q == p);
        let mut table = vec![vec![0; elements.len()]; elements.len()];
        for (x, px) in elements.iter().enumerate() {
            for (y, py) in elements.iter().enumerate() {
                table[x][y] = index(&px.conjugate_by(py)).ok_or(Error::NotConjugationClosed { x, y })?;
            }
        }
        Rack::validate(table, true)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_quandle(&self) -> bool {
        self.is_quandle
    }

    /// `x * y`.
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.size + y]
    }

    /// The unique `z` with `z * y = x`.
    #[inline]
    pub fn op_inv(&self, x: usize, y: usize) -> usize {
        self.inverse[x * self.size + y]
    }

    /// `x^(y_1 y_2 ... y_k) = (((x * y_1) * y_2) ... ) * y_k`.
    pub fn act_word(&self, x: usize, word: &[usize]) -> usize {
        word.iter().fold(x, |acc, &y| self.op(acc, y))
    }

    /// Inverse of [`Rack::act_word`].
    pub fn act_word_inv(&self, x: usize, word: &[usize]) -> usize {
        word.iter().rev().fold(x, |acc, &y| self.op_inv(acc, y))
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.size).map(<[usize]>::to_vec).collect()
    }

    /// The right translation `ρ(y): x ↦ x * y`.
    pub fn translation(&self, y: usize) -> Perm {
        Perm::from_images((0..self.size).map(|x| self.op(x, y)).collect()).expect("validated rack")
    }

    pub fn translations(&self) -> Vec<Perm> {
        (0..self.size).map(|y| self.translation(y)).collect()
    }

    /// The inner automorphism group, generated by all right translations.
    pub fn inner_group(&self, cap: usize) -> Result<PermGroup, Error> {
        let mut gens = self.translations();
        gens.sort();
        gens.dedup();
        PermGroup::closure(self.size, gens, cap)
    }

    /// `label[x]` numbers the behavioural class of `x` (equal translations),
    /// classes numbered in order of their smallest element.
    pub fn behavior_labels(&self) -> Vec<usize> {
        let translations = self.translations();
        let mut label = vec![usize::MAX; self.size];
        let mut next = 0;
        for x in 0..self.size {
            if label[x] != usize::MAX {
                continue;
            }
            for y in x..self.size {
                if translations[y] == translations[x] {
                    label[y] = next;
                }
            }
            next += 1;
        }
        label
    }

    /// Partition of `0..n` into behavioural classes: `x ≡ y` iff `ρ(x) = ρ(y)`.
    pub fn behavioral_classes(&self) -> Vec<Vec<usize>> {
        let labels = self.behavior_labels();
        let count = labels.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); count];
        for (x, &l) in labels.iter().enumerate() {
            blocks[l].push(x);
        }
        blocks
    }

    pub fn to_json(&self) -> RackJson {
        RackJson { size: self.size, table: self.table() }
    }

    pub fn from_json(json: RackJson) -> Result<Rack, Error> {
        if json.table.len() != json.size {
            return Err(Error::Parse(format!(
                "size {} but table has {} rows",
                json.size,
                json.table.len()
            )));
        }
        Rack::validate(json.table, false)
    }

    pub fn from_json_str(s: &str) -> Result<Rack, Error> {
        let json: RackJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Rack::from_json(json)
    }

    /// Canonical serialization used for hashing and equality across processes.
    pub fn canonical_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("rack serializes")
    }
}
