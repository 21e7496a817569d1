use std::collections::BTreeMap;

use crate::error::Result;
use crate::scalars::{add_into, Ring};
use crate::superspace::TensorSpace;
use crate::symcomb::{min_coset_reps_within, Composition, Permutation};

use super::Endo;

/// The elementary endomorphism `e_{i,j}` of the tensor space (by basis index).
pub fn elementary_endo<R: Ring>(space: &TensorSpace<R>, i: usize, j: usize) -> Endo<R::Elem> {
    Endo::elementary(space.ring(), space.dim(), i, j)
}

/// `calT_{w^-1} b calT_w` in right-action notation: first `calT_{w^-1}`, then `b`, then `calT_w`.
pub fn conjugate_by<R: Ring>(space: &TensorSpace<R>, b: &Endo<R::Elem>, w: &Permutation) -> Endo<R::Elem> {
    space.cal_t_matrix(&w.inverse()).then(b).then(&space.cal_t_matrix(w))
}

/// The relative norm `N_{W_ambient, W_lambda}(b) = sum_{w in D_lambda ∩ W_ambient} calT_{w^-1} b calT_w`.
pub fn relative_norm<R: Ring>(
    space: &TensorSpace<R>,
    b: &Endo<R::Elem>,
    lambda: &Composition,
    ambient: &Composition,
) -> Result<Endo<R::Elem>> {
    let mut out = Endo::zero(space.dim());
    for w in min_coset_reps_within(lambda, ambient)? {
        out = out.add(&conjugate_by(space, b, &w));
    }
    Ok(out)
}

/// `N_{W_ambient, W_lambda}(e_{a,b})`, computed without forming full products.
///
/// Row `i` of `calT_{w^-1} e_{a,b} calT_w` is `(calT_{w^-1})_{i,a}` times row
/// `b` of `calT_w`.
pub fn relative_norm_of_unit<R: Ring>(
    space: &TensorSpace<R>,
    a: usize,
    b: usize,
    lambda: &Composition,
    ambient: &Composition,
) -> Result<Endo<R::Elem>> {
    let mut out = Endo::zero(space.dim());
    for w in min_coset_reps_within(lambda, ambient)? {
        let left = space.cal_t_matrix(&w.inverse());
        let right = space.cal_t_matrix(&w);
        let target = right.row(b);
        for i in 0..space.dim() {
            if let Some(c) = left.get(i, a) {
                out.add_row(i, target, c);
            }
        }
    }
    Ok(out)
}

/// The row `(v_a) N_{W_ambient, W_lambda}(e_{a,b})`, the only data needed to
/// read off coefficients against the norm basis.
pub fn relative_norm_row<R: Ring>(
    space: &TensorSpace<R>,
    a: usize,
    b: usize,
    lambda: &Composition,
    ambient: &Composition,
) -> Result<BTreeMap<usize, R::Elem>> {
    let mut out = BTreeMap::new();
    for w in min_coset_reps_within(lambda, ambient)? {
        if let Some(c) = space.cal_t_matrix(&w.inverse()).get(a, a) {
            for (&j, x) in space.cal_t_matrix(&w).row(b) {
                add_into(&mut out, j, x.clone() * c);
            }
        }
    }
    Ok(out)
}
