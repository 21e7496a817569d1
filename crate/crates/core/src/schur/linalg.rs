//! Incremental row echelon forms over an exact field.

use std::collections::BTreeMap;

use crate::scalars::{add_into, FieldScalar};

/// A sparse vector keyed by coordinate.
pub type SparseVec<E> = BTreeMap<usize, E>;

/// Row echelon basis of a subspace, built one vector at a time.
///
/// Every stored row has leading coordinate equal to one and no other stored
/// row has a nonzero entry at that coordinate's pivot position below it.
#[derive(Clone, Debug)]
pub struct Echelon<E> {
    rows: BTreeMap<usize, SparseVec<E>>,
}

impl<E: FieldScalar> Default for Echelon<E> {
    fn default() -> Self {
        Echelon { rows: BTreeMap::new() }
    }
}

impl<E: FieldScalar> Echelon<E> {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows; the result is zero iff `v` is in the span.
    pub fn reduce(&self, v: &SparseVec<E>) -> SparseVec<E> {
        let mut v = v.clone();
        let mut cursor = 0;
        loop {
            let hit = v
                .range(cursor..)
                .find(|(k, _)| self.rows.contains_key(k))
                .map(|(&k, c)| (k, c.clone()));
            let Some((k, c)) = hit else { break };
            for (&j, x) in &self.rows[&k] {
                add_into(&mut v, j, -(x.clone() * &c));
            }
            cursor = k + 1;
        }
        v
    }

    pub fn contains(&self, v: &SparseVec<E>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the spanning set; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec<E>) -> bool {
        let reduced = self.reduce(v);
        let Some((&pivot, lead)) = reduced.iter().next() else {
            return false;
        };
        let inv = lead.inverse().expect("nonzero field element is invertible");
        let row: SparseVec<E> = reduced.iter().map(|(&j, x)| (j, x.clone() * &inv)).collect();
        self.rows.insert(pivot, row);
        true
    }

    pub fn extend<'a, I: IntoIterator<Item = &'a SparseVec<E>>>(&mut self, vs: I)
    where
        E: 'a,
    {
        for v in vs {
            self.insert(v);
        }
    }

    /// Whether the two subspaces coincide.
    pub fn same_span(&self, other: &Echelon<E>) -> bool {
        self.rank() == other.rank() && other.rows.values().all(|v| self.contains(v))
    }
}

/// Rank of a family of sparse vectors.
pub fn rank<'a, E: FieldScalar + 'a, I: IntoIterator<Item = &'a SparseVec<E>>>(vs: I) -> usize {
    let mut ech = Echelon::new();
    ech.extend(vs);
    ech.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{CycloScalar, Cyclotomic, Ring};

    fn vec_of(ring: &Cyclotomic, entries: &[(usize, i64)]) -> SparseVec<CycloScalar> {
        entries.iter().map(|&(k, c)| (k, ring.from_int(c))).filter(|(_, c)| !crate::scalars::Scalar::is_zero(c)).collect()
    }

    #[test]
    fn rank_of_dependent_family() {
        let ring = Cyclotomic::new(3);
        let a = vec_of(&ring, &[(0, 1), (2, 1)]);
        let b = vec_of(&ring, &[(1, 1), (2, 1)]);
        let c = vec_of(&ring, &[(0, 1), (1, -1)]);
        assert_eq!(rank([&a, &b, &c]), 2);
        let mut ech = Echelon::new();
        ech.extend([&a, &b]);
        assert!(ech.contains(&c));
        assert!(!ech.contains(&vec_of(&ring, &[(2, 1)])));
    }
}
