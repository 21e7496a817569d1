use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalars::{add_into, quantum_integer, Ring};

use super::{Gen, QmsElement, QuantumMatrixAlgebra, SuperMatrix, TensorSquare};

/// The sign convention used for the coaction on the tensor superspace.
///
/// `Stated` uses the exponent `sum_{k<l} j_k (i_l + i_k)` on parities;
/// `ProofVariant` uses `sum_{k<l} j_k (j_l + i_l)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoactionSign {
    Stated,
    ProofVariant,
}

impl CoactionSign {
    pub fn exponent(self, i: &[usize], j: &[usize]) -> usize {
        let r = i.len();
        let mut e = 0;
        for k in 0..r {
            for l in k + 1..r {
                e += match self {
                    CoactionSign::Stated => j[k] * (i[l] + i[k]),
                    CoactionSign::ProofVariant => j[k] * (j[l] + i[l]),
                };
            }
        }
        e % 2
    }
}

impl<R: Ring> QuantumMatrixAlgebra<R> {
    fn parities(&self, i: &[usize]) -> Vec<usize> {
        i.iter().map(|&c| usize::from(c >= self.m())).collect()
    }

    fn check_same_parity(&self, i: usize, j: usize) -> Result<()> {
        if (i < self.m()) != (j < self.m()) {
            return Err(Error::Domain(format!("x_{{{},{}}} has odd degree", i + 1, j + 1)));
        }
        Ok(())
    }

    /// The coaction `delta(v_i) = sum_j (-1)^e x_{i,j} ⊗ v_j`, returned as
    /// `j ↦ ±nf(x_{i,j})` over all `j` with a nonzero coefficient.
    pub fn coaction(&self, i: &[usize], variant: CoactionSign) -> BTreeMap<Vec<usize>, QmsElement<R::Elem>> {
        let s = self.m() + self.n();
        let r = i.len();
        let ip = self.parities(i);
        let mut out = BTreeMap::new();
        for flat in 0..s.pow(r as u32) {
            let mut j = vec![0; r];
            let mut x = flat;
            for k in (0..r).rev() {
                j[k] = x % s;
                x /= s;
            }
            let word: Vec<Gen> = i.iter().copied().zip(j.iter().copied()).collect();
            let nf = self.normal_form(&word);
            if nf.is_zero() {
                continue;
            }
            let sign = self.ring().signed_q_pow(variant.exponent(&ip, &self.parities(&j)), 0);
            let mut e = QmsElement::zero();
            e.add_scaled(&nf, &sign);
            out.insert(j, e);
        }
        out
    }

    /// Checks the comodule axiom `(Delta ⊗ id) delta = (id ⊗ delta) delta` on `v_i`.
    pub fn check_comodule(&self, i: &[usize], variant: CoactionSign) -> bool {
        let first = self.coaction(i, variant);
        let mut lhs: BTreeMap<(SuperMatrix, SuperMatrix, Vec<usize>), R::Elem> = BTreeMap::new();
        for (k, e) in &first {
            for ((a, b), c) in self.comul(e) {
                add_into(&mut lhs, (a, b, k.clone()), c);
            }
        }
        let mut rhs = BTreeMap::new();
        for (j, e) in &first {
            for (k, f) in self.coaction(j, variant) {
                for (a, x) in e.terms() {
                    for (b, y) in f.terms() {
                        add_into(&mut rhs, (a.clone(), b.clone(), k.clone()), x.clone() * y);
                    }
                }
            }
        }
        lhs == rhs
    }

    /// Whether `x_ij^l` commutes with every generator.
    pub fn check_central_power(&self, i: usize, j: usize, l: usize) -> Result<bool> {
        self.check_same_parity(i, j)?;
        let s = self.m() + self.n();
        let power = vec![(i, j); l];
        for k in 0..s {
            for c in 0..s {
                let mut left = power.clone();
                left.push((k, c));
                let mut right = vec![(k, c)];
                right.extend(power.iter().copied());
                if self.normal_form(&left) != self.normal_form(&right) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Checks `[x_ij^s, x_kl] = t (q^-1 - q) [[s]]_u x_ij^{s-1} x_il x_kj` for
    /// `i < k`, `j < l`, where `[[s]]_u = 1 + u^-1 + ... + u^{-(s-1)}` for `u = q^{2(-1)^{i+1}}`.
    pub fn check_commutator_formula(&self, (i, j): Gen, (k, l): Gen, s: usize) -> Result<bool> {
        self.check_same_parity(i, j)?;
        if !(i < k && j < l) || s == 0 {
            return Err(Error::Domain("expected i < k, j < l and s > 0".into()));
        }
        let ring = self.ring();
        let par = |a: usize| usize::from(a >= self.m());
        let mut ab = vec![(i, j); s];
        ab.push((k, l));
        let mut ba = vec![(k, l)];
        ba.extend(vec![(i, j); s]);
        let lhs = self.normal_form(&ab).sub(&self.normal_form(&ba));

        let t = par(k) * par(j) + par(k) * par(l) + par(j) * par(l);
        let u_exp = if par(i) == 0 { 2 } else { -2 };
        let bracket = ring.from_laurent(&quantum_integer(s).substitute_power(u_exp));
        let coeff = ring.signed_q_pow(t, 0) * &(ring.q_pow(-1) - ring.q_pow(1)) * &bracket;
        let mut word = vec![(i, j); s - 1];
        word.push((i, l));
        word.push((k, j));
        let mut rhs = QmsElement::zero();
        rhs.add_scaled(&self.normal_form(&word), &coeff);
        Ok(lhs == rhs)
    }

    /// Whether `Delta(x_ij^l) = sum_k x_ik^l ⊗ x_kj^l`, `k` running over the
    /// parity block of `i` and `j`.
    pub fn check_frobenius_comul(&self, i: usize, j: usize, l: usize) -> Result<bool> {
        self.check_same_parity(i, j)?;
        let lhs = self.comul_word(&vec![(i, j); l]);
        let block = if i < self.m() { 0..self.m() } else { self.m()..self.m() + self.n() };
        let mut rhs = TensorSquare::new();
        for k in block {
            for (a, x) in self.power((i, k), l).terms() {
                for (b, y) in self.power((k, j), l).terms() {
                    add_into(&mut rhs, (a.clone(), b.clone()), x.clone() * y);
                }
            }
        }
        Ok(lhs == rhs)
    }
}

/// Diagonal-block matrices `B` (zero in mixed positions) with `|B| = r0`.
fn block_matrices(m: usize, n: usize, r0: usize) -> Vec<SuperMatrix> {
    SuperMatrix::enumerate(m, n, r0)
        .into_iter()
        .filter(|b| {
            let s = m + n;
            (0..s).all(|i| (0..s).all(|j| !b.is_mixed(i, j) || b.get(i, j) == 0))
        })
        .collect()
}

/// The images `F(x^{A'} ⊗ t^B) = x^{A'} x^{lB}` for `A' ∈ M(m|n, r_{-1})` and
/// `B` a diagonal-block matrix of size `r0`, each in normal form.
pub fn frobenius_images<R: Ring>(alg: &QuantumMatrixAlgebra<R>, rbar: (usize, usize), l: usize) -> Vec<QmsElement<R::Elem>> {
    let (m, n) = (alg.m(), alg.n());
    let (r_minus, r0) = rbar;
    let mut out = Vec::new();
    for a in SuperMatrix::enumerate(m, n, r_minus) {
        for b in block_matrices(m, n, r0) {
            let mut word = a.word();
            for g in b.word() {
                word.extend(std::iter::repeat_n(g, l));
            }
            out.push(alg.normal_form(&word));
        }
    }
    out
}

/// Matrices `A ∈ M(m|n, r)` whose triple has `P_rbar` conjugate into
/// `W_lambda^d ∩ W_mu`, i.e. whose entries carry at least `r0` blocks of size `l`.
pub fn frobenius_image_basis(m: usize, n: usize, rbar: (usize, usize), l: usize) -> Vec<SuperMatrix> {
    let r = rbar.0 + l * rbar.1;
    SuperMatrix::enumerate(m, n, r).into_iter().filter(|a| a.l_class(l) >= rbar.1).collect()
}

