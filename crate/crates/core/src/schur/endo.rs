use std::collections::BTreeMap;

use crate::scalars::{add_into, Ring, Scalar};

/// A sparse square matrix acting on the right of row vectors.
///
/// Row `i` is the image of the basis vector with index `i`; the product
/// `a.then(&b)` is the map "first `a`, then `b`", i.e. the matrix product `AB`.
#[derive(Clone, Debug, PartialEq)]
pub struct Endo<E> {
    dim: usize,
    rows: Vec<BTreeMap<usize, E>>,
}

impl<E: Scalar> Endo<E> {
    pub fn zero(dim: usize) -> Self {
        Endo { dim, rows: vec![BTreeMap::new(); dim] }
    }

    pub fn identity<R: Ring<Elem = E>>(ring: &R, dim: usize) -> Self {
        let mut e = Endo::zero(dim);
        for i in 0..dim {
            e.add_entry(i, i, ring.one());
        }
        e
    }

    /// The elementary map `e_{i,j}` sending basis vector `i` to basis vector `j`.
    pub fn elementary<R: Ring<Elem = E>>(ring: &R, dim: usize, i: usize, j: usize) -> Self {
        let mut e = Endo::zero(dim);
        e.add_entry(i, j, ring.one());
        e
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&E> {
        self.rows[i].get(&j)
    }

    pub fn row(&self, i: usize) -> &BTreeMap<usize, E> {
        &self.rows[i]
    }

    pub fn add_entry(&mut self, i: usize, j: usize, c: E) {
        add_into(&mut self.rows[i], j, c);
    }

    /// Adds `c` times `row` to row `i`.
    pub fn add_row(&mut self, i: usize, row: &BTreeMap<usize, E>, c: &E) {
        for (&j, x) in row {
            self.add_entry(i, j, x.clone() * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// All nonzero entries `(i, j, value)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &E)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(&j, c)| (i, j, c)))
    }

    /// The composite "first `self`, then `other`".
    pub fn then(&self, other: &Endo<E>) -> Endo<E> {
        assert_eq!(self.dim, other.dim);
        let mut out = Endo::zero(self.dim);
        for (i, row) in self.rows.iter().enumerate() {
            for (&k, c) in row {
                out.add_row(i, &other.rows[k], c);
            }
        }
        out
    }

    pub fn add(&self, other: &Endo<E>) -> Endo<E> {
        let mut out = self.clone();
        for (i, j, c) in other.entries() {
            out.add_entry(i, j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Endo<E>) -> Endo<E> {
        let mut out = self.clone();
        for (i, j, c) in other.entries() {
            out.add_entry(i, j, -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &E) -> Endo<E> {
        let mut out = Endo::zero(self.dim);
        for (i, j, x) in self.entries() {
            out.add_entry(i, j, x.clone() * c);
        }
        out
    }

    /// Image of a sparse row vector.
    pub fn apply(&self, v: &BTreeMap<usize, E>) -> BTreeMap<usize, E> {
        let mut out = BTreeMap::new();
        for (&k, c) in v {
            for (&j, x) in &self.rows[k] {
                add_into(&mut out, j, x.clone() * c);
            }
        }
        out
    }

    pub fn commutes_with(&self, other: &Endo<E>) -> bool {
        self.then(other) == other.then(self)
    }

    /// Flattened entries keyed by `i * dim + j`, for linear algebra on `End(V)`.
    pub fn flatten(&self) -> BTreeMap<usize, E> {
        self.entries().map(|(i, j, c)| (i * self.dim + j, c.clone())).collect()
    }

    pub fn from_flat(dim: usize, flat: &BTreeMap<usize, E>) -> Endo<E> {
        let mut out = Endo::zero(dim);
        for (&key, c) in flat {
            out.add_entry(key / dim, key % dim, c.clone());
        }
        out
    }
}
