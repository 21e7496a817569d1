//! The tensor superspace `V(m|n)^{⊗r}` with its right Hecke action.
//!
//! Basis vectors `v_i` are indexed by tuples `i` with entries in
//! `0..m+n` (printed 1-based); entry `c` is even when `c < m` and odd
//! otherwise. The generator `calT_{s_k}` acts by
//!
//! - `v_i -> (-1)^{î_k î_{k+1}} v_{i s_k}` if `i_k < i_{k+1}`,
//! - `v_i -> q v_i` if `i_k = i_{k+1}` is even,
//! - `v_i -> -q^-1 v_i` if `i_k = i_{k+1}` is odd,
//! - `v_i -> (-1)^{î_k î_{k+1}} v_{i s_k} + (q - q^-1) v_i` if `i_k > i_{k+1}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use serde::{Serialize, Serializer};

use crate::hecke::{xy_element, HeckeElt};
use crate::scalars::{add_into, Ring};
use crate::schur::Endo;
use crate::symcomb::{coset_rep_for_labels, min_coset_reps, Permutation, SuperComposition};

/// A tuple `i` in `I(m|n, r)`, stored with 0-based entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(pub Vec<usize>);

impl MultiIndex {
    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `i w`, the place permutation `(i w)_k = i_{w(k)}`.
    pub fn permuted(&self, w: &Permutation) -> MultiIndex {
        MultiIndex(w.act_on(&self.0))
    }

    /// Parities `î_k`.
    pub fn parities(&self, m: usize) -> Vec<usize> {
        self.0.iter().map(|&c| parity(c, m)).collect()
    }

    /// Weight `wt(i)`: the number of occurrences of each value.
    pub fn weight(&self, m: usize, n: usize) -> SuperComposition {
        let mut counts = vec![0; m + n];
        for &c in &self.0 {
            counts[c] += 1;
        }
        SuperComposition::from_flat(&counts, m)
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_based: Vec<usize> = self.0.iter().map(|c| c + 1).collect();
        write!(f, "{one_based:?}")
    }
}

impl Serialize for MultiIndex {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let one_based: Vec<usize> = self.0.iter().map(|c| c + 1).collect();
        one_based.serialize(s)
    }
}

/// Parity of a 0-based value: 0 if it is one of the first `m`, else 1.
pub fn parity(c: usize, m: usize) -> usize {
    usize::from(c >= m)
}

/// `i_lambda`: the weakly increasing tuple with `lambda_c` copies of `c`.
pub fn index_of(lambda: &SuperComposition) -> MultiIndex {
    MultiIndex(lambda.flat().labels())
}

/// `(lambda, d)^`: the number of inversions of `i_lambda d` between two odd
/// entries, mod 2.
pub fn sign_hat(lambda: &SuperComposition, d: &Permutation) -> usize {
    let i = index_of(lambda).permuted(d);
    odd_inversions(&i, lambda.m())
}

/// Number of pairs `k < l` with `i_k > i_l` and both entries odd, mod 2.
pub fn odd_inversions(i: &MultiIndex, m: usize) -> usize {
    let e = i.entries();
    let mut count = 0;
    for a in 0..e.len() {
        for b in a + 1..e.len() {
            if e[a] > e[b] && e[a] >= m && e[b] >= m {
                count += 1;
            }
        }
    }
    count % 2
}

/// Writes `i = i_lambda d` with `lambda = wt(i)` and `d` in `D_lambda`, and
/// returns `(lambda, d, d^)`.
pub fn iso_f(i: &MultiIndex, m: usize, n: usize) -> (SuperComposition, Permutation, usize) {
    let lambda = i.weight(m, n);
    let d = coset_rep_for_labels(&lambda.flat(), i.entries());
    let hat = sign_hat(&lambda, &d);
    (lambda, d, hat)
}

/// `f(v_i) = (-1)^{d^} x_{lambda^(0)} y_{lambda^(1)} calT_d` in the Hecke algebra.
pub fn f_image<R: Ring>(ring: &R, i: &MultiIndex, m: usize, n: usize) -> HeckeElt<R::Elem> {
    let (lambda, d, hat) = iso_f(i, m, n);
    let sign = ring.signed_q_pow(hat, 0);
    xy_element(ring, &lambda).mul_cal_t(ring, &d).scale(&sign)
}

/// A sparse vector in the tensor superspace.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorVector<E> {
    terms: BTreeMap<MultiIndex, E>,
}

impl<E: crate::scalars::Scalar> TensorVector<E> {
    pub fn zero() -> Self {
        TensorVector { terms: BTreeMap::new() }
    }

    pub fn basis<R: Ring<Elem = E>>(ring: &R, i: MultiIndex) -> Self {
        let mut t = TensorVector::zero();
        t.add_term(i, ring.one());
        t
    }

    pub fn add_term(&mut self, i: MultiIndex, c: E) {
        add_into(&mut self.terms, i, c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &E)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: &MultiIndex) -> Option<&E> {
        self.terms.get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

type MatrixCache<E> = RwLock<HashMap<Permutation, Arc<Endo<E>>>>;

/// `V(m|n)^{⊗r}` over a coefficient ring, with cached action matrices.
///
/// Basis vectors are numbered by reading the tuple as a base `m+n` numeral,
/// so the numbering is lexicographic in the tuple.
pub struct TensorSpace<R: Ring> {
    ring: R,
    m: usize,
    n: usize,
    r: usize,
    dim: usize,
    generators: Vec<Endo<R::Elem>>,
    cal_t_cache: MatrixCache<R::Elem>,
}

impl<R: Ring> TensorSpace<R> {
    pub fn new(ring: R, m: usize, n: usize, r: usize) -> Self {
        assert!(m + n > 0 || r == 0, "the superspace needs m + n > 0");
        let dim = (m + n).pow(r as u32);
        let mut space = TensorSpace {
            ring,
            m,
            n,
            r,
            dim,
            generators: Vec::new(),
            cal_t_cache: RwLock::new(HashMap::new()),
        };
        let generators = (0..r.saturating_sub(1))
            .map(|k| {
                let mut e = Endo::zero(dim);
                for idx in 0..dim {
                    let i = space.multi_index(idx);
                    for (j, c) in space.act_gen_basis(&i, k) {
                        e.add_entry(idx, space.index(&j), c);
                    }
                }
                e
            })
            .collect();
        space.generators = generators;
        space
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn index(&self, i: &MultiIndex) -> usize {
        i.entries().iter().fold(0, |acc, &c| acc * (self.m + self.n) + c)
    }

    pub fn multi_index(&self, mut idx: usize) -> MultiIndex {
        let base = self.m + self.n;
        let mut entries = vec![0; self.r];
        for slot in entries.iter_mut().rev() {
            *slot = idx % base;
            idx /= base;
        }
        MultiIndex(entries)
    }

    /// Indices of the basis vectors of weight `lambda`, i.e. `{i_lambda d : d in D_lambda}`.
    pub fn weight_component(&self, lambda: &SuperComposition) -> Vec<usize> {
        let base = index_of(lambda);
        min_coset_reps(&lambda.flat()).iter().map(|d| self.index(&base.permuted(d))).collect()
    }

    /// `v_i calT_{s_k}` as a list of terms.
    pub fn act_gen_basis(&self, i: &MultiIndex, k: usize) -> Vec<(MultiIndex, R::Elem)> {
        let (a, b) = (i.0[k], i.0[k + 1]);
        let sign = self.ring.signed_q_pow(parity(a, self.m) * parity(b, self.m), 0);
        let swapped = || {
            let mut j = i.clone();
            j.0.swap(k, k + 1);
            j
        };
        match a.cmp(&b) {
            std::cmp::Ordering::Less => vec![(swapped(), sign)],
            std::cmp::Ordering::Equal if a < self.m => vec![(i.clone(), self.ring.q_pow(1))],
            std::cmp::Ordering::Equal => vec![(i.clone(), -self.ring.q_pow(-1))],
            std::cmp::Ordering::Greater => vec![(swapped(), sign), (i.clone(), self.ring.q_minus_q_inv())],
        }
    }

    pub fn act_gen(&self, t: &TensorVector<R::Elem>, k: usize) -> TensorVector<R::Elem> {
        let mut out = TensorVector::zero();
        for (i, c) in t.terms() {
            for (j, x) in self.act_gen_basis(i, k) {
                out.add_term(j, x * c);
            }
        }
        out
    }

    /// `t h` for a Hecke algebra element `h`.
    pub fn act(&self, t: &TensorVector<R::Elem>, h: &HeckeElt<R::Elem>) -> TensorVector<R::Elem> {
        let mut out = TensorVector::zero();
        for (w, c) in h.terms() {
            let moved = w.reduced_word().into_iter().fold(t.clone(), |acc, k| self.act_gen(&acc, k));
            for (j, x) in moved.terms() {
                out.add_term(j.clone(), x.clone() * c);
            }
        }
        out
    }

    /// Matrix of `calT_{s_k}`.
    pub fn generator(&self, k: usize) -> &Endo<R::Elem> {
        &self.generators[k]
    }

    pub fn generators(&self) -> &[Endo<R::Elem>] {
        &self.generators
    }

    /// Matrix of `calT_w`, cached per permutation.
    pub fn cal_t_matrix(&self, w: &Permutation) -> Arc<Endo<R::Elem>> {
        if let Some(m) = self.cal_t_cache.read().unwrap().get(w) {
            return Arc::clone(m);
        }
        let mut mat = Endo::identity(&self.ring, self.dim);
        for k in w.reduced_word() {
            mat = mat.then(&self.generators[k]);
        }
        let mat = Arc::new(mat);
        self.cal_t_cache.write().unwrap().insert(w.clone(), Arc::clone(&mat));
        mat
    }

    /// Matrix of an arbitrary Hecke algebra element.
    pub fn hecke_matrix(&self, h: &HeckeElt<R::Elem>) -> Endo<R::Elem> {
        let mut out = Endo::zero(self.dim);
        for (w, c) in h.terms() {
            out = out.add(&self.cal_t_matrix(w).scale(c));
        }
        out
    }

    /// Whether `e` commutes with the action of every generator.
    pub fn is_hecke_equivariant(&self, e: &Endo<R::Elem>) -> bool {
        self.generators.iter().all(|g| e.commutes_with(g))
    }

    /// Whether `e` commutes with the generators lying in `W_theta`.
    pub fn commutes_with_parabolic(&self, e: &Endo<R::Elem>, theta: &crate::symcomb::Composition) -> bool {
        theta.simple_generators().into_iter().all(|k| e.commutes_with(&self.generators[k]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Generic;

    #[test]
    fn index_and_weight() {
        let lam = SuperComposition::new(vec![2, 0], vec![1]);
        assert_eq!(index_of(&lam), MultiIndex(vec![0, 0, 2]));
        assert_eq!(MultiIndex(vec![2, 0, 0]).weight(2, 1), lam);
    }

    #[test]
    fn iso_f_sorts_the_index() {
        for idx in [vec![1, 0, 1], vec![1, 1, 0], vec![0, 1, 0]] {
            let i = MultiIndex(idx);
            let (lam, d, hat) = iso_f(&i, 1, 1);
            assert_eq!(index_of(&lam).permuted(&d), i);
            assert_eq!(hat, sign_hat(&lam, &d));
        }
        assert_eq!(odd_inversions(&MultiIndex(vec![2, 1]), 1), 1);
    }

    #[test]
    fn odd_swap_carries_a_sign() {
        let space = TensorSpace::new(Generic, 1, 1, 2);
        let out = space.act_gen_basis(&MultiIndex(vec![1, 1]), 0);
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].0, MultiIndex(vec![1, 1]));
        assert_eq!(out[0].1, -Generic.q_pow(-1));
    }
}
