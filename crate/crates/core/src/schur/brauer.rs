use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qmatrix::{frobenius_image_basis, frobenius_images, QuantumMatrixAlgebra, SuperMatrix};
use crate::scalars::{FieldScalar, Ring};
use crate::symcomb::LParabolicClass;

use super::linalg::{Echelon, SparseVec};
use super::SchurAlgebra;

/// `C(k + i - 1, i)`, the number of monomials of degree `i` in `k` variables.
fn multiset_count(k: usize, i: usize) -> usize {
    if i == 0 {
        return 1;
    }
    if k == 0 {
        return 0;
    }
    let mut c: usize = 1;
    for t in 0..i {
        c = c * (k + t) / (t + 1);
    }
    c
}

/// Dimension of the classical Schur algebra `S(m, r)`, `C(m^2 + r - 1, r)`.
pub fn classical_schur_dimension(m: usize, r: usize) -> usize {
    multiset_count(m * m, r)
}

/// `dim S(m|n, r) = |M(m|n, r)|`.
pub fn schur_dimension(m: usize, n: usize, r: usize) -> usize {
    SuperMatrix::enumerate(m, n, r).len()
}

/// `dim S(m, n)_{r0} = sum_i dim S(m, i) dim S(n, r0 - i)`.
pub fn even_schur_dimension(m: usize, n: usize, r0: usize) -> usize {
    (0..=r0).map(|i| classical_schur_dimension(m, i) * classical_schur_dimension(n, r0 - i)).sum()
}

/// Number of basis elements of `S(m|n, r)` whose defect class is at most `k`.
pub fn ideal_dimension(m: usize, n: usize, r: usize, l: usize, k: Option<usize>) -> usize {
    match k {
        None => 0,
        Some(k) => SuperMatrix::enumerate(m, n, r).iter().filter(|a| a.l_class(l) <= k).count(),
    }
}

/// Dimensions and checks around the Brauer homomorphism `phi_rbar`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BrauerAudit {
    pub rbar: (usize, usize),
    pub total: usize,
    /// `dim S - rank(image of the Frobenius map)`.
    pub ker_dim: usize,
    /// Rank of the image of the Frobenius map in `A_q(m|n, r)`.
    pub image_dim: usize,
    /// `dim S(m|n, r_{-1}) * dim S(m, n)_{r0}`.
    pub formula_image_dim: usize,
    /// `|{A : at least r0 blocks of size l}|`.
    pub image_basis_len: usize,
    /// Whether the Frobenius image is spanned by the `x^A` of class at least `r0`.
    pub image_matches_support: bool,
    /// Whether `dim I(P_{r0-1}, r)` equals the kernel dimension.
    pub kernel_is_ideal: bool,
}

fn check_split(r: usize, l: usize, rbar: (usize, usize)) -> Result<()> {
    if rbar.0 + l * rbar.1 != r {
        return Err(Error::Domain(format!("{rbar:?} is not a split of r = {r} with l = {l}")));
    }
    Ok(())
}

fn coordinates<E: crate::scalars::Scalar>(elt: &crate::qmatrix::QmsElement<E>, index: &BTreeMap<SuperMatrix, usize>) -> SparseVec<E> {
    elt.terms().map(|(a, c)| (index[a], c.clone())).collect()
}

/// Kernel and image dimensions of `phi_rbar` on `S(m|n, r)`, computed as
/// the annihilator of the image of the Frobenius map
/// `x^{A'} ⊗ t^B ↦ x^{A'} x^{lB}`.
pub fn brauer_kernel_dims<R: Ring>(m: usize, n: usize, r: usize, l: usize, rbar: (usize, usize), ring: R) -> Result<BrauerAudit>
where
    R::Elem: FieldScalar,
{
    check_split(r, l, rbar)?;
    let qalg = QuantumMatrixAlgebra::new(ring.clone(), m, n);
    let all = SuperMatrix::enumerate(m, n, r);
    let index: BTreeMap<SuperMatrix, usize> = all.iter().cloned().enumerate().map(|(k, a)| (a, k)).collect();
    let mut image = Echelon::new();
    for elt in frobenius_images(&qalg, rbar, l) {
        image.insert(&coordinates(&elt, &index));
    }
    let support = frobenius_image_basis(m, n, rbar, l);
    let mut units = Echelon::new();
    for a in &support {
        units.insert(&SparseVec::from([(index[a], ring.one())]));
    }
    let total = all.len();
    let image_dim = image.rank();
    let ker_dim = total - image_dim;
    let ideal = ideal_dimension(m, n, r, l, rbar.1.checked_sub(1));
    Ok(BrauerAudit {
        rbar,
        total,
        ker_dim,
        image_dim,
        formula_image_dim: schur_dimension(m, n, rbar.0) * even_schur_dimension(m, n, rbar.1),
        image_basis_len: support.len(),
        image_matches_support: image.same_span(&units),
        kernel_is_ideal: ideal == ker_dim,
    })
}

/// Dimension checks for the map induced by `phi_rbar` on the ideal `I(P_k, r)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationAudit {
    pub k: usize,
    pub rbar: (usize, usize),
    /// `dim I(P_k, r) - dim I(P_{r0-1}, r)`.
    pub quotient_dim: usize,
    /// Rank of `phi_rbar` restricted to `I(P_k, r)`.
    pub image_rank: usize,
    /// `dim I(P_{k-r0}, r_{-1}) * dim S(m, n)_{r0}`.
    pub target_dim: usize,
}

/// Compares `I(P_k, r) / I(P_{r0-1}, r)` with `I(P_{k-r0}, r_{-1}) ⊗ S(m, n)_{r0}`.
///
/// The image rank is the rank of the pairing between the dual basis
/// elements `x*_A` of class at most `k` and the image of the Frobenius map.
pub fn filtration_quotient_dims<R: Ring>(
    m: usize,
    n: usize,
    r: usize,
    l: usize,
    k: usize,
    rbar: (usize, usize),
    ring: R,
) -> Result<FiltrationAudit>
where
    R::Elem: FieldScalar,
{
    check_split(r, l, rbar)?;
    if k < rbar.1 || k > r / l {
        return Err(Error::Domain(format!("need r0 <= k <= r/l, got k = {k}")));
    }
    let qalg = QuantumMatrixAlgebra::new(ring, m, n);
    let allowed: BTreeMap<SuperMatrix, usize> = SuperMatrix::enumerate(m, n, r)
        .into_iter()
        .filter(|a| a.l_class(l) <= k)
        .enumerate()
        .map(|(p, a)| (a, p))
        .collect();
    let mut ech = Echelon::new();
    for elt in frobenius_images(&qalg, rbar, l) {
        let v: SparseVec<R::Elem> =
            elt.terms().filter_map(|(a, c)| allowed.get(a).map(|&p| (p, c.clone()))).collect();
        ech.insert(&v);
    }
    Ok(FiltrationAudit {
        k,
        rbar,
        quotient_dim: ideal_dimension(m, n, r, l, Some(k)) - ideal_dimension(m, n, r, l, rbar.1.checked_sub(1)),
        image_rank: ech.rank(),
        target_dim: ideal_dimension(m, n, rbar.0, l, Some(k - rbar.1)) * even_schur_dimension(m, n, rbar.1),
    })
}

impl<R: Ring> SchurAlgebra<R>
where
    R::Elem: FieldScalar,
{
    /// Whether the span of the given endomorphisms equals the span of the
    /// basis elements of defect class at most `k` (`None` for the zero ideal).
    pub fn spans_ideal<'a, I>(&self, endos: I, k: Option<LParabolicClass>) -> bool
    where
        I: IntoIterator<Item = &'a super::Endo<R::Elem>>,
        R::Elem: 'a,
    {
        let mut ech = Echelon::new();
        for e in endos {
            ech.insert(&e.flatten());
        }
        let ideal = match k {
            Some(k) => self.echelon_of(self.ideal_basis(k)),
            None => Echelon::new(),
        };
        ech.same_span(&ideal)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_dimensions() {
        assert_eq!(classical_schur_dimension(1, 5), 1);
        assert_eq!(classical_schur_dimension(2, 1), 4);
        assert_eq!(classical_schur_dimension(2, 2), 10);
        assert_eq!(classical_schur_dimension(0, 0), 1);
        assert_eq!(classical_schur_dimension(0, 2), 0);
    }

    #[test]
    fn super_dimension_degenerates() {
        for r in 0..4 {
            assert_eq!(schur_dimension(2, 0, r), classical_schur_dimension(2, r));
        }
        assert_eq!(schur_dimension(1, 1, 2), 8);
        assert_eq!(schur_dimension(1, 1, 3), 12);
    }
}
