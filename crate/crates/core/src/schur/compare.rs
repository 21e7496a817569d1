use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hecke::{psi_image, xy_element, HeckeElt};
use crate::qmatrix::{CoactionSign, QuantumMatrixAlgebra, SuperMatrix};
use crate::scalars::{add_into, Ring};
use crate::superspace::{index_of, sign_hat, TensorSpace};
use crate::symcomb::{intersect_composition, min_coset_reps, Composition, Permutation, SuperComposition};

use super::{relative_norm_of_unit, Endo};

/// The basis element `psi^d_{mu lambda}` transported to the tensor space
/// through `f`: it sends `v_mu` to `f^-1(T_{W_lambda d W_mu})` and is
/// extended to the `mu`-weight component by Hecke equivariance.
pub fn psi_endo<R: Ring>(
    space: &TensorSpace<R>,
    lambda: &SuperComposition,
    mu: &SuperComposition,
    d: &Permutation,
) -> Result<Endo<R::Elem>> {
    let ring = space.ring();
    let target = psi_image(ring, lambda, mu, d)?;

    // Read off f^-1 on the coset representatives of W_lambda.
    let base_lambda = index_of(lambda);
    let xy = xy_element(ring, lambda);
    let mut image = BTreeMap::new();
    let mut check = HeckeElt::zero(d.degree());
    for dp in min_coset_reps(&lambda.flat()) {
        let Some(c) = target.coeff(&dp) else { continue };
        check = check.add(&xy.mul_cal_t(ring, &dp).scale(c));
        let sign = ring.signed_q_pow(sign_hat(lambda, &dp), 0);
        add_into(&mut image, space.index(&base_lambda.permuted(&dp)), sign * c);
    }
    if check != target {
        return Err(Error::Mismatch(format!("T_(W_lambda d W_mu) for d = {d} is not in x_lambda y_lambda H")));
    }

    let base_mu = index_of(mu);
    let mut out = Endo::zero(space.dim());
    for dpp in min_coset_reps(&mu.flat()) {
        let row = space.index(&base_mu.permuted(&dpp));
        let moved = space.cal_t_matrix(&dpp).apply(&image);
        let sign = ring.signed_q_pow(sign_hat(mu, &dpp), 0);
        out.add_row(row, &moved, &sign);
    }
    Ok(out)
}

/// `N_{W, W_nu}(e_{mu, lambda d})` for `nu = lambda d ∩ mu`.
pub fn norm_element<R: Ring>(
    space: &TensorSpace<R>,
    lambda: &SuperComposition,
    mu: &SuperComposition,
    d: &Permutation,
) -> Result<Endo<R::Elem>> {
    let nu = intersect_composition(&lambda.flat(), d, &mu.flat())?;
    let a = space.index(&index_of(mu));
    let b = space.index(&index_of(lambda).permuted(d));
    relative_norm_of_unit(space, a, b, &nu, &Composition::new(vec![space.r()]))
}

/// The scalar `q^{-l(d)} (-1)^{d^}` relating the norm and psi bases.
pub fn psi_norm_scalar<R: Ring>(ring: &R, lambda: &SuperComposition, d: &Permutation) -> R::Elem {
    ring.signed_q_pow(sign_hat(lambda, d), -(d.length() as i64))
}

/// Both sides of the symmetry identity
/// `(-1)^{(lambda,d)^} N_{W, W_lambda^d ∩ W_mu}(e_{mu, lambda d})` and
/// `(-1)^{(mu,d^-1)^} N_{W, W_lambda ∩ W_mu^{d^-1}}(e_{mu d^-1, lambda})`.
pub fn symmetry_sides<R: Ring>(
    space: &TensorSpace<R>,
    lambda: &SuperComposition,
    mu: &SuperComposition,
    d: &Permutation,
) -> Result<(Endo<R::Elem>, Endo<R::Elem>)> {
    let ring = space.ring();
    let whole = Composition::new(vec![space.r()]);
    let dinv = d.inverse();
    let left = norm_element(space, lambda, mu, d)?.scale(&ring.signed_q_pow(sign_hat(lambda, d), 0));
    let nu_prime = intersect_composition(&mu.flat(), &dinv, &lambda.flat())?;
    let a = space.index(&index_of(mu).permuted(&dinv));
    let b = space.index(&index_of(lambda));
    let right = relative_norm_of_unit(space, a, b, &nu_prime, &whole)?
        .scale(&ring.signed_q_pow(sign_hat(mu, &dinv), 0));
    Ok((left, right))
}

/// The parity `sum_{k<l} (i_lambda d)^_k ((i_lambda d)^_l + (i_mu)^_l)`.
pub fn theorem_sign(lambda: &SuperComposition, mu: &SuperComposition, d: &Permutation) -> usize {
    let m = lambda.m();
    let j: Vec<usize> = index_of(lambda).permuted(d).parities(m);
    let i: Vec<usize> = index_of(mu).parities(m);
    let mut e = 0;
    for k in 0..j.len() {
        for l in k + 1..j.len() {
            e += j[k] * (j[l] + i[l]);
        }
    }
    e % 2
}

/// The sign exponent of the coaction for a pair of multi-indices.
pub fn coaction_sign(variant: CoactionSign, i: &[usize], j: &[usize], m: usize) -> usize {
    let par = |t: &[usize]| t.iter().map(|&c| usize::from(c >= m)).collect::<Vec<_>>();
    variant.exponent(&par(i), &par(j))
}

/// The dual basis `{x*_A}` of `A_q(m|n, r)^*` acting on the tensor space by
/// `v . f = (f ⊗ id) delta(v)`, one endomorphism per matrix `A`.
pub fn dual_basis_endos<R: Ring>(
    space: &TensorSpace<R>,
    qalg: &QuantumMatrixAlgebra<R>,
    variant: CoactionSign,
) -> BTreeMap<SuperMatrix, Endo<R::Elem>> {
    let mut out: BTreeMap<SuperMatrix, Endo<R::Elem>> = BTreeMap::new();
    for a in SuperMatrix::enumerate(space.m(), space.n(), space.r()) {
        out.insert(a, Endo::zero(space.dim()));
    }
    for row in 0..space.dim() {
        let i = space.multi_index(row);
        for (j, elt) in qalg.coaction(i.entries(), variant) {
            let col = space.index(&crate::superspace::MultiIndex(j));
            for (a, c) in elt.terms() {
                out.get_mut(a).expect("normal forms lie in M(m|n,r)").add_entry(row, col, c.clone());
            }
        }
    }
    out
}

/// A single dual basis element `x*_A` as an endomorphism.
pub fn dual_basis_endo<R: Ring>(
    space: &TensorSpace<R>,
    qalg: &QuantumMatrixAlgebra<R>,
    a: &SuperMatrix,
    variant: CoactionSign,
) -> Endo<R::Elem> {
    let mut out = Endo::zero(space.dim());
    for row in 0..space.dim() {
        let i = space.multi_index(row);
        for (j, elt) in qalg.coaction(i.entries(), variant) {
            if let Some(c) = elt.coeff(a) {
                out.add_entry(row, space.index(&crate::superspace::MultiIndex(j)), c.clone());
            }
        }
    }
    out
}
