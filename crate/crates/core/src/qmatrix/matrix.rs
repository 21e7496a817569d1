use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hecke::is_super_rep;
use crate::symcomb::{coset_rep_for_labels, Permutation, SuperComposition};

/// A square matrix of nonnegative integers of size `m+n`, indexing the
/// monomial `x^A` of the quantum matrix superalgebra.
///
/// Entries in mixed-parity positions (one index among the first `m`, the
/// other not) must be 0 or 1 for the monomial to be nonzero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperMatrix {
    m: usize,
    n: usize,
    entries: Vec<usize>,
}

impl SuperMatrix {
    pub fn zero(m: usize, n: usize) -> Self {
        SuperMatrix { m, n, entries: vec![0; (m + n) * (m + n)] }
    }

    pub fn from_rows(m: usize, n: usize, rows: &[Vec<usize>]) -> Self {
        let s = m + n;
        assert!(rows.len() == s && rows.iter().all(|r| r.len() == s), "expected a {s}x{s} matrix");
        SuperMatrix { m, n, entries: rows.concat() }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.m + self.n
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.size() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: usize) {
        let s = self.size();
        self.entries[i * s + j] = v;
    }

    pub fn increment(&mut self, i: usize, j: usize) {
        let s = self.size();
        self.entries[i * s + j] += 1;
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.entries.chunks(self.size().max(1)).map(|c| c.to_vec()).collect()
    }

    /// `|A|`, the sum of all entries.
    pub fn total(&self) -> usize {
        self.entries.iter().sum()
    }

    pub fn is_mixed(&self, i: usize, j: usize) -> bool {
        (i < self.m) != (j < self.m)
    }

    /// Whether every mixed-parity entry is 0 or 1.
    pub fn is_super(&self) -> bool {
        let s = self.size();
        (0..s).all(|i| (0..s).all(|j| !self.is_mixed(i, j) || self.get(i, j) <= 1))
    }

    pub fn row_sums(&self) -> Vec<usize> {
        self.rows().iter().map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        let s = self.size();
        (0..s).map(|j| (0..s).map(|i| self.get(i, j)).sum()).collect()
    }

    /// The generators of `x^A` in row-major order, with multiplicity.
    pub fn word(&self) -> Vec<(usize, usize)> {
        let s = self.size();
        let mut w = Vec::with_capacity(self.total());
        for i in 0..s {
            for j in 0..s {
                w.extend(std::iter::repeat_n((i, j), self.get(i, j)));
            }
        }
        w
    }

    /// `sum floor(a_ij / l)`, the defect class of the corresponding basis element.
    pub fn l_class(&self, l: usize) -> usize {
        self.entries.iter().map(|a| a / l).sum()
    }

    /// Z/2-degree of `x^A`: the number of odd generators, mod 2.
    pub fn degree(&self) -> usize {
        let s = self.size();
        let mut deg = 0;
        for i in 0..s {
            for j in 0..s {
                if self.is_mixed(i, j) {
                    deg += self.get(i, j);
                }
            }
        }
        deg % 2
    }

    /// Whether all off-diagonal entries vanish.
    pub fn is_diagonal(&self) -> bool {
        let s = self.size();
        (0..s).all(|i| (0..s).all(|j| i == j || self.get(i, j) == 0))
    }

    /// `M(m|n, r)`: all super matrices with entry sum `r`.
    pub fn enumerate(m: usize, n: usize, r: usize) -> Vec<SuperMatrix> {
        let s = m + n;
        let cells = s * s;
        let mut out = Vec::new();
        let mut current = SuperMatrix::zero(m, n);
        fn rec(cell: usize, remaining: usize, cells: usize, cur: &mut SuperMatrix, out: &mut Vec<SuperMatrix>) {
            if cell == cells {
                if remaining == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let s = cur.size();
            let (i, j) = (cell / s, cell % s);
            let cap = if cur.is_mixed(i, j) { remaining.min(1) } else { remaining };
            for v in 0..=cap {
                cur.set(i, j, v);
                rec(cell + 1, remaining - v, cells, cur, out);
            }
            cur.set(i, j, 0);
        }
        rec(0, r, cells, &mut current, &mut out);
        out
    }
}

impl fmt::Debug for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

impl Serialize for SuperMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

/// The matrix `A` with `A_{ic}` the number of positions in the `i`-th block of
/// `mu` at which `i_lambda d` equals `c`.
///
/// Row sums are `mu`, column sums are `lambda`, and the rows read in order
/// give `lambda d ∩ mu`.
pub fn matrix_of_triple(lambda: &SuperComposition, mu: &SuperComposition, d: &Permutation) -> Result<SuperMatrix> {
    if !is_super_rep(lambda, mu, d) {
        return Err(Error::NotSuperRep(format!("{d} for ({lambda:?}, {mu:?})")));
    }
    let (m, n) = (lambda.m(), lambda.n());
    let ild = d.act_on(&lambda.flat().labels());
    let mut a = SuperMatrix::zero(m, n);
    for (i, block) in mu.flat().blocks().into_iter().enumerate() {
        for k in block {
            a.increment(i, ild[k]);
        }
    }
    Ok(a)
}

/// Inverse of [`matrix_of_triple`].
pub fn triple_of_matrix(a: &SuperMatrix) -> (SuperComposition, SuperComposition, Permutation) {
    let (m, s) = (a.m(), a.size());
    let lambda = SuperComposition::from_flat(&a.col_sums(), m);
    let mu = SuperComposition::from_flat(&a.row_sums(), m);
    let mut target = Vec::with_capacity(a.total());
    for i in 0..s {
        for c in 0..s {
            target.extend(std::iter::repeat_n(c, a.get(i, c)));
        }
    }
    let d = coset_rep_for_labels(&lambda.flat(), &target);
    (lambda, mu, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::{schur_dimension, NormBasisElt};

    #[test]
    fn enumeration_matches_closed_form() {
        for (m, n, r) in [(1, 1, 2), (1, 1, 3), (2, 1, 3), (2, 2, 2), (3, 0, 2)] {
            assert_eq!(SuperMatrix::enumerate(m, n, r).len(), schur_dimension(m, n, r));
        }
    }

    #[test]
    fn triples_round_trip() {
        for b in NormBasisElt::all(2, 1, 3, 3) {
            let a = matrix_of_triple(&b.lam, &b.mu, &b.d).unwrap();
            assert_eq!(a.row_sums(), b.mu.flat().parts());
            assert_eq!(a.col_sums(), b.lam.flat().parts());
            assert_eq!(triple_of_matrix(&a), (b.lam.clone(), b.mu.clone(), b.d.clone()));
        }
    }
}
