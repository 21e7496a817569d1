//! The Iwahori-Hecke algebra of `S_r` over a coefficient ring.
//!
//! Elements are stored in the normalized basis `calT_w`, which satisfies
//! `calT_w calT_s = calT_{ws}` when `l(ws) > l(w)` and
//! `calT_w calT_s = (q - q^-1) calT_w + calT_{ws}` otherwise. The standard
//! basis `T_w = q^{l(w)} calT_w` is available as a view.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalars::{add_into, Ring, Scalar};
use crate::symcomb::{
    has_trivial_mixed_intersections, intersect_composition, is_double_coset_rep, min_coset_reps_within,
    Composition, Permutation, SuperComposition,
};

/// An element of the Hecke algebra in the `calT` basis.
#[derive(Clone, Debug, PartialEq)]
pub struct HeckeElt<E> {
    degree: usize,
    terms: BTreeMap<Permutation, E>,
}

impl<E: Scalar> HeckeElt<E> {
    pub fn zero(degree: usize) -> Self {
        HeckeElt { degree, terms: BTreeMap::new() }
    }

    /// `c * calT_w`.
    pub fn monomial(w: Permutation, c: E) -> Self {
        let mut h = HeckeElt::zero(w.degree());
        h.add_term(w, c);
        h
    }

    /// `calT_w`.
    pub fn cal_t<R: Ring<Elem = E>>(ring: &R, w: &Permutation) -> Self {
        HeckeElt::monomial(w.clone(), ring.one())
    }

    /// `T_w = q^{l(w)} calT_w`.
    pub fn t<R: Ring<Elem = E>>(ring: &R, w: &Permutation) -> Self {
        HeckeElt::monomial(w.clone(), ring.q_pow(w.length() as i64))
    }

    pub fn one<R: Ring<Elem = E>>(ring: &R, degree: usize) -> Self {
        HeckeElt::cal_t(ring, &Permutation::identity(degree))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Permutation, c: E) {
        assert_eq!(w.degree(), self.degree);
        add_into(&mut self.terms, w, c);
    }

    /// Coefficient of `calT_w`.
    pub fn coeff(&self, w: &Permutation) -> Option<&E> {
        self.terms.get(w)
    }

    /// Nonzero `(w, coefficient of calT_w)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &E)> {
        self.terms.iter()
    }

    /// Coefficients in the `T` basis: the coefficient of `T_w` is `q^{-l(w)}` times
    /// that of `calT_w`.
    pub fn t_coeffs<R: Ring<Elem = E>>(&self, ring: &R) -> BTreeMap<Permutation, E> {
        self.terms
            .iter()
            .map(|(w, c)| (w.clone(), c.clone() * &ring.q_pow(-(w.length() as i64))))
            .collect()
    }

    pub fn scale(&self, c: &E) -> Self {
        let mut out = HeckeElt::zero(self.degree);
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x.clone() * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    /// Right multiplication by the generator `calT_{s_k}` (0-based `k`).
    pub fn mul_gen<R: Ring<Elem = E>>(&self, ring: &R, k: usize) -> Self {
        assert!(k + 1 < self.degree, "generator s_{k} out of range");
        let qq = ring.q_minus_q_inv();
        let mut out = HeckeElt::zero(self.degree);
        for (w, c) in &self.terms {
            let ws = w.times_simple(k);
            if !w.lengthens_right(k) {
                out.add_term(w.clone(), c.clone() * &qq);
            }
            out.add_term(ws, c.clone());
        }
        out
    }

    /// Right multiplication by `calT_w`, along a reduced word of `w`.
    pub fn mul_cal_t<R: Ring<Elem = E>>(&self, ring: &R, w: &Permutation) -> Self {
        w.reduced_word().into_iter().fold(self.clone(), |acc, k| acc.mul_gen(ring, k))
    }

    pub fn mul<R: Ring<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        let mut out = HeckeElt::zero(self.degree);
        for (w, c) in &other.terms {
            out = out.add(&self.mul_cal_t(ring, w).scale(c));
        }
        out
    }

    /// `{"basis":"calT","terms":[{"perm":[..],"coef":".."}]}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(w, c)| json!({"perm": w, "coef": c.to_string()}))
            .collect();
        json!({"basis": "calT", "terms": terms})
    }
}

/// `sum_{w in W_lambda} c(w) calT_w` for a length-dependent weight `c`.
fn weighted_subgroup_sum<E: Scalar>(lambda: &Composition, weight: impl Fn(usize) -> E) -> HeckeElt<E> {
    let mut h = HeckeElt::zero(lambda.weight());
    for w in lambda.subgroup_elements() {
        let ell = w.length();
        h.add_term(w, weight(ell));
    }
    h
}

/// `x_{lambda^(0)} = sum_{w in W_{lambda^(0)}} T_w`.
pub fn x_element<R: Ring>(ring: &R, lambda: &SuperComposition) -> HeckeElt<R::Elem> {
    weighted_subgroup_sum(&lambda.even_subgroup(), |ell| ring.q_pow(ell as i64))
}

/// `y_{lambda^(1)} = sum_{w in W_{lambda^(1)}} (-q^2)^{-l(w)} T_w`, which is
/// `sum (-q^-1)^{l(w)} calT_w`.
pub fn y_element<R: Ring>(ring: &R, lambda: &SuperComposition) -> HeckeElt<R::Elem> {
    weighted_subgroup_sum(&lambda.odd_subgroup(), |ell| ring.signed_q_pow(ell, -(ell as i64)))
}

/// `x_{lambda^(0)} y_{lambda^(1)}`, generating the signed q-permutation module.
pub fn xy_element<R: Ring>(ring: &R, lambda: &SuperComposition) -> HeckeElt<R::Elem> {
    x_element(ring, lambda).mul(ring, &y_element(ring, lambda))
}

/// Whether `d` lies in `D°_{lambda mu}`.
pub fn is_super_rep(lambda: &SuperComposition, mu: &SuperComposition, d: &Permutation) -> bool {
    is_double_coset_rep(d, &lambda.flat(), &mu.flat()) && has_trivial_mixed_intersections(lambda, d, mu)
}

/// `T_{W_lambda d W_mu}`: the sum of
/// `(-q^2)^{-l(w1)} x_{lambda^(0)} y_{lambda^(1)} T_d T_{w0} T_{w1}` over
/// `w0 w1` in `W_mu ∩ D_nu` with `w0` in `W_{mu^(0)}`, `w1` in `W_{mu^(1)}`.
pub fn psi_image<R: Ring>(
    ring: &R,
    lambda: &SuperComposition,
    mu: &SuperComposition,
    d: &Permutation,
) -> Result<HeckeElt<R::Elem>> {
    if !is_super_rep(lambda, mu, d) {
        return Err(Error::NotSuperRep(format!("{d} for ({lambda:?}, {mu:?})")));
    }
    let nu = intersect_composition(&lambda.flat(), d, &mu.flat())?;
    let base = xy_element(ring, lambda).mul(ring, &HeckeElt::t(ring, d));
    let mut out = HeckeElt::zero(d.degree());
    for w in min_coset_reps_within(&nu, &mu.flat())? {
        let (w0, w1) = split_even_odd(&w, mu.even.weight());
        let ell1 = w1.length();
        let coeff = ring.signed_q_pow(ell1, -2 * ell1 as i64);
        let term = base
            .mul(ring, &HeckeElt::t(ring, &w0))
            .mul(ring, &HeckeElt::t(ring, &w1))
            .scale(&coeff);
        out = out.add(&term);
    }
    Ok(out)
}

/// Splits `w` in `W_{mu^(0)} x W_{mu^(1)}` into the factor moving the first
/// `cut` positions and the factor moving the rest.
fn split_even_odd(w: &Permutation, cut: usize) -> (Permutation, Permutation) {
    let r = w.degree();
    let w0 = (0..r).map(|k| if k < cut { w.apply(k) } else { k }).collect();
    let w1 = (0..r).map(|k| if k < cut { k } else { w.apply(k) }).collect();
    (Permutation::from_images(w0), Permutation::from_images(w1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Generic;

    fn s(r: usize, k: usize) -> Permutation {
        Permutation::simple(r, k)
    }

    #[test]
    fn quadratic_relation() {
        let ring = Generic;
        let t = HeckeElt::cal_t(&ring, &s(3, 1));
        let expected = t.scale(&ring.q_minus_q_inv()).add(&HeckeElt::one(&ring, 3));
        assert_eq!(t.mul(&ring, &t), expected);
    }

    #[test]
    fn x_and_y_are_eigenvectors() {
        let ring = Generic;
        let even = SuperComposition::new(vec![2], vec![]);
        let x = x_element(&ring, &even);
        assert_eq!(x.mul_gen(&ring, 0), x.scale(&ring.q_pow(1)));
        let odd = SuperComposition::new(vec![0], vec![2]);
        let y = y_element(&ring, &odd);
        assert_eq!(y.mul_gen(&ring, 0), y.scale(&-ring.q_pow(-1)));
    }

    #[test]
    fn psi_image_of_the_identity_coset() {
        let ring = Generic;
        let lam = SuperComposition::new(vec![1], vec![1]);
        let id = Permutation::identity(2);
        assert_eq!(psi_image(&ring, &lam, &lam, &id).unwrap(), HeckeElt::one(&ring, 2));
        let mixed = SuperComposition::new(vec![2], vec![0]);
        let odd = SuperComposition::new(vec![0], vec![2]);
        assert!(psi_image(&ring, &mixed, &odd, &id).is_err());
    }
}
