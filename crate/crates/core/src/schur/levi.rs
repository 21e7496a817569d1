use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalars::{add_into, Ring, Scalar};
use crate::symcomb::LParabolicClass;

use super::algebra::Expansion;
use super::SchurAlgebra;

/// The block structure of `S(m|n, r0 l) / I(P_{r0-1}, r0 l)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeviAudit {
    pub r0: usize,
    /// Dimension of the quotient.
    pub quotient_dim: usize,
    /// `dim e_i S e_i` for `i = 0..=r0`.
    pub blocks: Vec<usize>,
    /// `sum_i e_i = 1` in the quotient.
    pub idempotents_sum_to_one: bool,
    /// `e_i e_j = delta_ij e_i` in the quotient.
    pub orthogonal_idempotents: bool,
    /// `e_i b e_j = 0` for `i != j` and every basis element `b`.
    pub no_cross_terms: bool,
}

impl<R: Ring> SchurAlgebra<R> {
    fn truncate(&self, coeffs: Expansion<R::Elem>, top: LParabolicClass) -> Expansion<R::Elem> {
        coeffs.into_iter().filter(|(k, _)| self.basis()[*k].defect >= top).collect()
    }

    /// Product of two expansions modulo the basis elements below class `top`.
    pub fn multiply_modulo(
        &self,
        left: &Expansion<R::Elem>,
        right: &Expansion<R::Elem>,
        top: LParabolicClass,
    ) -> Result<Expansion<R::Elem>> {
        let mut out = BTreeMap::new();
        for (&a, x) in left {
            for (&b, y) in right {
                for (k, c) in self.multiply(a, b)? {
                    add_into(&mut out, k, c * x * y);
                }
            }
        }
        Ok(self.truncate(out, top))
    }
}

/// Computes the idempotents `e_i = sum_{|lambda^(0)| = il} zeta_{lambda lambda}`
/// of the quotient by `I(P_{r0-1})` and the dimensions of the blocks `e_i S e_i`.
pub fn levi_decomposition<R: Ring>(alg: &SchurAlgebra<R>, r0: usize) -> Result<LeviAudit> {
    let l = alg.l();
    let r = alg.space().r();
    if r != r0 * l || r0 == 0 {
        return Err(Error::Domain(format!("r = {r} is not a positive multiple r0 * l with r0 = {r0}, l = {l}")));
    }
    let top = LParabolicClass(r0);
    let ring = alg.ring();
    let quotient: Vec<usize> = (0..alg.len()).filter(|&k| alg.basis()[k].defect == top).collect();

    let mut idempotents: Vec<Expansion<R::Elem>> = vec![BTreeMap::new(); r0 + 1];
    for &k in &quotient {
        let e = &alg.basis()[k];
        if e.lam == e.mu && e.d.is_identity() {
            let i = e.lam.even.weight() / l;
            idempotents[i].insert(k, ring.one());
        }
    }

    let one = alg.truncate(alg.identity_expansion()?, top);
    let mut sum = BTreeMap::new();
    for e in &idempotents {
        for (&k, c) in e {
            add_into(&mut sum, k, c.clone());
        }
    }
    let idempotents_sum_to_one = sum == one;

    let mut orthogonal_idempotents = true;
    for i in 0..=r0 {
        for j in 0..=r0 {
            let prod = alg.multiply_modulo(&idempotents[i], &idempotents[j], top)?;
            let expected = if i == j { idempotents[i].clone() } else { BTreeMap::new() };
            orthogonal_idempotents &= prod == expected;
        }
    }

    let mut blocks = vec![0; r0 + 1];
    let mut no_cross_terms = true;
    for &k in &quotient {
        let b: Expansion<R::Elem> = BTreeMap::from([(k, ring.one())]);
        for i in 0..=r0 {
            let left = alg.multiply_modulo(&idempotents[i], &b, top)?;
            for j in 0..=r0 {
                let both = alg.multiply_modulo(&left, &idempotents[j], top)?;
                if i == j {
                    if both == b {
                        blocks[i] += 1;
                    }
                } else if both.values().any(|c| !c.is_zero()) {
                    no_cross_terms = false;
                }
            }
        }
    }

    Ok(LeviAudit {
        r0,
        quotient_dim: quotient.len(),
        blocks,
        idempotents_sum_to_one,
        orthogonal_idempotents,
        no_cross_terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Cyclotomic;

    #[test]
    fn blocks_at_two_one() {
        let alg = SchurAlgebra::new(Cyclotomic::new(3), 2, 1, 3, 3);
        let a = levi_decomposition(&alg, 1).unwrap();
        assert_eq!(a.blocks, vec![1, 4]);
        assert_eq!(a.quotient_dim, 5);
        assert!(a.no_cross_terms);
        assert!(levi_decomposition(&alg, 2).is_err());
    }
}
