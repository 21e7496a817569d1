use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use serde_json::{json, Value};

use crate::scalars::{add_into, Ring, Scalar};

use super::SuperMatrix;

/// A generator `x_ij`, 0-based.
pub type Gen = (usize, usize);

/// An element of `A_q(m|n)` in the ordered monomial basis `{x^A}`.
#[derive(Clone, Debug, PartialEq)]
pub struct QmsElement<E> {
    terms: BTreeMap<SuperMatrix, E>,
}

impl<E: Scalar> QmsElement<E> {
    pub fn zero() -> Self {
        QmsElement { terms: BTreeMap::new() }
    }

    pub fn monomial(a: SuperMatrix, c: E) -> Self {
        let mut e = QmsElement::zero();
        e.add_term(a, c);
        e
    }

    pub fn add_term(&mut self, a: SuperMatrix, c: E) {
        add_into(&mut self.terms, a, c);
    }

    pub fn add_scaled(&mut self, other: &QmsElement<E>, c: &E) {
        for (a, x) in &other.terms {
            self.add_term(a.clone(), x.clone() * c);
        }
    }

    pub fn coeff(&self, a: &SuperMatrix) -> Option<&E> {
        self.terms.get(a)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMatrix, &E)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sub(&self, other: &QmsElement<E>) -> QmsElement<E> {
        let mut out = self.clone();
        for (a, x) in &other.terms {
            out.add_term(a.clone(), -x.clone());
        }
        out
    }

    /// `{"terms":[{"A":[[..]],"coef":".."}]}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self.terms.iter().map(|(a, c)| json!({"A": a, "coef": c.to_string()})).collect();
        json!({ "terms": terms })
    }
}

/// An element of `A_q(m|n) ⊗ A_q(m|n)` on the basis `x^A ⊗ x^B`.
pub type TensorSquare<E> = BTreeMap<(SuperMatrix, SuperMatrix), E>;

/// Elements of `A ⊗ A ⊗ A`, keyed by triples of matrices.
pub type TensorCube<E> = BTreeMap<(SuperMatrix, SuperMatrix, SuperMatrix), E>;

/// Which adjacent out-of-order pair a rewriting step resolves first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

type Memo<E> = RwLock<HashMap<(Strategy, Vec<Gen>), QmsElement<E>>>;

/// The quantum matrix superalgebra `A_q(m|n)` with memoized normal forms.
pub struct QuantumMatrixAlgebra<R: Ring> {
    ring: R,
    m: usize,
    n: usize,
    memo: Memo<R::Elem>,
}

impl<R: Ring> QuantumMatrixAlgebra<R> {
    pub fn new(ring: R, m: usize, n: usize) -> Self {
        QuantumMatrixAlgebra { ring, m, n, memo: RwLock::new(HashMap::new()) }
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

    fn par(&self, i: usize) -> usize {
        usize::from(i >= self.m)
    }

    /// Z/2-degree of `x_ij`.
    pub fn gen_degree(&self, g: Gen) -> usize {
        (self.par(g.0) + self.par(g.1)) % 2
    }

    fn sign(&self, e: usize) -> R::Elem {
        self.ring.signed_q_pow(e, 0)
    }

    /// Rewrites an out-of-order adjacent pair `x_P x_Q` (with `P > Q` in
    /// row-major order) as a combination of ordered pairs, by inverting the
    /// defining relations.
    fn straighten_pair(&self, p: Gen, q: Gen) -> Vec<(R::Elem, [Gen; 2])> {
        let ring = &self.ring;
        let pr = |i: usize| self.par(i);
        if p.0 == q.0 {
            // x_ik x_ij with j < k: inverse of x_ij x_ik = s q^e x_ik x_ij.
            let (i, j, k) = (q.0, q.1, p.1);
            let s = ((pr(i) + pr(j)) * (pr(i) + pr(k))) % 2;
            let e: i64 = if pr(i) == 0 { -1 } else { 1 };
            vec![(ring.signed_q_pow(s, -e), [q, p])]
        } else if p.1 == q.1 {
            // x_kj x_ij with i < k: inverse of x_ij x_kj = s q^e x_kj x_ij.
            let (i, j, k) = (q.0, q.1, p.0);
            let s = ((pr(i) + pr(j)) * (pr(k) + pr(j))) % 2;
            let e: i64 = if pr(j) == 0 { -1 } else { 1 };
            vec![(ring.signed_q_pow(s, -e), [q, p])]
        } else if p.1 < q.1 {
            // x_kl x_ij with i < k, j > l: x_ij x_kl = s x_kl x_ij.
            let (i, j, k, l) = (q.0, q.1, p.0, p.1);
            let s = ((pr(i) + pr(j)) * (pr(k) + pr(l))) % 2;
            vec![(self.sign(s), [q, p])]
        } else {
            // x_kl x_ij with i < k, j < l:
            // x_ij x_kl = s x_kl x_ij + t (q^-1 - q) x_il x_kj.
            let (i, j, k, l) = (q.0, q.1, p.0, p.1);
            let s = ((pr(i) + pr(j)) * (pr(k) + pr(l))) % 2;
            let t = (pr(k) * pr(j) + pr(k) * pr(l) + pr(j) * pr(l)) % 2;
            let q_inv_minus_q = ring.q_pow(-1) - ring.q_pow(1);
            vec![
                (self.sign(s), [q, p]),
                (-(self.sign(s + t) * &q_inv_minus_q), [(i, l), (k, j)]),
            ]
        }
    }

    fn is_odd_square(&self, a: Gen, b: Gen) -> bool {
        a == b && self.gen_degree(a) == 1
    }

    /// Normal form of a word in the generators, resolving the leftmost
    /// out-of-order pair first.
    pub fn normal_form(&self, word: &[Gen]) -> QmsElement<R::Elem> {
        self.normal_form_with(word, Strategy::Leftmost)
    }

    pub fn normal_form_with(&self, word: &[Gen], strategy: Strategy) -> QmsElement<R::Elem> {
        let s = self.m + self.n;
        assert!(word.iter().all(|&(i, j)| i < s && j < s), "generator index out of range");
        let key = (strategy, word.to_vec());
        if let Some(hit) = self.memo.read().unwrap().get(&key) {
            return hit.clone();
        }
        let result = self.compute_normal_form(word, strategy);
        self.memo.write().unwrap().insert(key, result.clone());
        result
    }

    fn compute_normal_form(&self, word: &[Gen], strategy: Strategy) -> QmsElement<R::Elem> {
        if word.windows(2).any(|w| self.is_odd_square(w[0], w[1])) {
            return QmsElement::zero();
        }
        let mut descents = (0..word.len().saturating_sub(1)).filter(|&k| word[k] > word[k + 1]);
        let pos = match strategy {
            Strategy::Leftmost => descents.next(),
            Strategy::Rightmost => descents.next_back(),
        };
        let Some(k) = pos else {
            let mut a = SuperMatrix::zero(self.m, self.n);
            for &(i, j) in word {
                a.increment(i, j);
            }
            return QmsElement::monomial(a, self.ring.one());
        };
        let mut out = QmsElement::zero();
        for (c, pair) in self.straighten_pair(word[k], word[k + 1]) {
            let mut next = word.to_vec();
            next[k] = pair[0];
            next[k + 1] = pair[1];
            out.add_scaled(&self.normal_form_with(&next, strategy), &c);
        }
        out
    }

    /// Product of two normal-form elements.
    pub fn mul(&self, a: &QmsElement<R::Elem>, b: &QmsElement<R::Elem>) -> QmsElement<R::Elem> {
        let mut out = QmsElement::zero();
        for (x, c) in a.terms() {
            for (y, d) in b.terms() {
                let mut word = x.word();
                word.extend(y.word());
                out.add_scaled(&self.normal_form(&word), &(c.clone() * d));
            }
        }
        out
    }

    /// `x_{i,j} = x_{i_1 j_1} ... x_{i_r j_r}` in normal form.
    pub fn word_element(&self, i: &[usize], j: &[usize]) -> QmsElement<R::Elem> {
        let word: Vec<Gen> = i.iter().copied().zip(j.iter().copied()).collect();
        self.normal_form(&word)
    }

    /// `Delta` of a word: `prod_t sum_k x_{i_t k} ⊗ x_{k j_t}` with the super sign
    /// `(a ⊗ b)(c ⊗ d) = (-1)^{|b||c|} ac ⊗ bd`.
    pub fn comul_word(&self, word: &[Gen]) -> TensorSquare<R::Elem> {
        let s = self.m + self.n;
        let r = word.len();
        let mut out = TensorSquare::new();
        let mut ks = vec![0usize; r];
        loop {
            let left: Vec<Gen> = (0..r).map(|t| (word[t].0, ks[t])).collect();
            let right: Vec<Gen> = (0..r).map(|t| (ks[t], word[t].1)).collect();
            let mut sign = 0;
            for t in 0..r {
                for u in 0..t {
                    sign += self.gen_degree(right[u]) * self.gen_degree(left[t]);
                }
            }
            let nl = self.normal_form(&left);
            if !nl.is_zero() {
                let nr = self.normal_form(&right);
                let sgn = self.sign(sign);
                for (a, x) in nl.terms() {
                    for (b, y) in nr.terms() {
                        add_into(&mut out, (a.clone(), b.clone()), x.clone() * y * &sgn);
                    }
                }
            }
            // Advance the odometer over middle indices.
            let mut t = 0;
            while t < r {
                ks[t] += 1;
                if ks[t] < s {
                    break;
                }
                ks[t] = 0;
                t += 1;
            }
            if t == r {
                break;
            }
        }
        out
    }

    pub fn comul(&self, e: &QmsElement<R::Elem>) -> TensorSquare<R::Elem> {
        let mut out = TensorSquare::new();
        for (a, c) in e.terms() {
            for (key, x) in self.comul_word(&a.word()) {
                add_into(&mut out, key, x * c);
            }
        }
        out
    }

    /// Product in the tensor square, `(a ⊗ b)(c ⊗ d) = (-1)^{|b||c|} ac ⊗ bd`.
    pub fn tensor_mul(&self, x: &TensorSquare<R::Elem>, y: &TensorSquare<R::Elem>) -> TensorSquare<R::Elem> {
        let mut out = TensorSquare::new();
        for ((a, b), c1) in x {
            for ((c, d), c2) in y {
                let sign = self.sign(b.degree() * c.degree());
                let ac = self.mul(&QmsElement::monomial(a.clone(), self.ring.one()), &QmsElement::monomial(c.clone(), self.ring.one()));
                let bd = self.mul(&QmsElement::monomial(b.clone(), self.ring.one()), &QmsElement::monomial(d.clone(), self.ring.one()));
                let coeff = c1.clone() * c2 * &sign;
                for (p, u) in ac.terms() {
                    for (q, v) in bd.terms() {
                        add_into(&mut out, (p.clone(), q.clone()), u.clone() * v * &coeff);
                    }
                }
            }
        }
        out
    }

    /// The counit on a normal-form element: `epsilon(x^A) = 1` if `A` is diagonal, else 0.
    pub fn counit(&self, e: &QmsElement<R::Elem>) -> R::Elem {
        e.terms()
            .filter(|(a, _)| a.is_diagonal())
            .fold(self.ring.zero(), |acc, (_, c)| acc + c)
    }

    /// `(epsilon ⊗ id)` applied to a tensor-square element.
    pub fn counit_left(&self, x: &TensorSquare<R::Elem>) -> QmsElement<R::Elem> {
        let mut out = QmsElement::zero();
        for ((a, b), c) in x {
            if a.is_diagonal() {
                out.add_term(b.clone(), c.clone());
            }
        }
        out
    }

    /// `(id ⊗ epsilon)` applied to a tensor-square element.
    pub fn counit_right(&self, x: &TensorSquare<R::Elem>) -> QmsElement<R::Elem> {
        let mut out = QmsElement::zero();
        for ((a, b), c) in x {
            if b.is_diagonal() {
                out.add_term(a.clone(), c.clone());
            }
        }
        out
    }

    /// `(Delta ⊗ id) Delta` and `(id ⊗ Delta) Delta` of an element, as maps on triples.
    pub fn coassociativity_sides(
        &self,
        e: &QmsElement<R::Elem>,
    ) -> (TensorCube<R::Elem>, TensorCube<R::Elem>) {
        let once = self.comul(e);
        let mut left = BTreeMap::new();
        let mut right = BTreeMap::new();
        for ((a, b), c) in &once {
            for ((a1, a2), x) in self.comul_word(&a.word()) {
                add_into(&mut left, (a1, a2, b.clone()), x * c);
            }
            for ((b1, b2), x) in self.comul_word(&b.word()) {
                add_into(&mut right, (a.clone(), b1, b2), x * c);
            }
        }
        (left, right)
    }

    /// `x_ij^s` in normal form.
    pub fn power(&self, g: Gen, s: usize) -> QmsElement<R::Elem> {
        self.normal_form(&vec![g; s])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Generic;

    #[test]
    fn row_relation() {
        let alg = QuantumMatrixAlgebra::new(Generic, 2, 0);
        let a = SuperMatrix::from_rows(2, 0, &[vec![1, 1], vec![0, 0]]);
        assert_eq!(alg.normal_form(&[(0, 1), (0, 0)]), QmsElement::monomial(a, Generic.q_pow(1)));
    }

    #[test]
    fn odd_row_relation_and_nilpotence() {
        let alg = QuantumMatrixAlgebra::new(Generic, 1, 1);
        let a = SuperMatrix::from_rows(1, 1, &[vec![0, 0], vec![1, 1]]);
        assert_eq!(alg.normal_form(&[(1, 1), (1, 0)]), QmsElement::monomial(a, Generic.q_pow(-1)));
        assert!(alg.normal_form(&[(0, 1), (0, 1)]).is_zero());
        assert!(alg.normal_form(&[(0, 1), (1, 1), (0, 1)]).is_zero());
    }

    #[test]
    fn counit_of_generators() {
        let alg = QuantumMatrixAlgebra::new(Generic, 1, 1);
        assert_eq!(alg.counit(&alg.normal_form(&[(1, 1)])), Generic.one());
        assert!(alg.counit(&alg.normal_form(&[(0, 1)])).is_zero());
    }
}
