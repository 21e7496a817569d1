use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalars::{FieldScalar, Ring, Scalar};
use crate::superspace::{index_of, TensorSpace};
use crate::symcomb::{Composition, LParabolicClass};

use super::linalg::Echelon;
use super::{relative_norm_of_unit, Endo, NormBasisElt};

/// Structure constants of a product, keyed by basis position.
pub type Expansion<E> = BTreeMap<usize, E>;

/// The q-Schur superalgebra `S(m|n, r)` with its norm basis realized as
/// endomorphisms of the tensor superspace.
pub struct SchurAlgebra<R: Ring> {
    space: TensorSpace<R>,
    l: usize,
    basis: Vec<NormBasisElt>,
    endos: Vec<Endo<R::Elem>>,
    position: HashMap<NormBasisElt, usize>,
    /// For each basis element, the indices of `i_mu` and `i_lambda d`.
    anchors: Vec<(usize, usize)>,
    /// Basis positions grouped by the index of `i_mu`, keyed by the index of `i_lambda d`.
    by_row: HashMap<usize, HashMap<usize, usize>>,
}

impl<R: Ring> SchurAlgebra<R> {
    pub fn new(ring: R, m: usize, n: usize, r: usize, l: usize) -> Self {
        let space = TensorSpace::new(ring, m, n, r);
        let basis = NormBasisElt::all(m, n, r, l);
        let anchors: Vec<(usize, usize)> = basis
            .iter()
            .map(|e| (space.index(&index_of(&e.mu)), space.index(&index_of(&e.lam).permuted(&e.d))))
            .collect();
        let whole = Composition::new(vec![r]);
        let endos = basis
            .par_iter()
            .zip(anchors.par_iter())
            .map(|(e, &(a, b))| relative_norm_of_unit(&space, a, b, &e.nu, &whole).expect("nu refines (r)"))
            .collect();
        let position = basis.iter().cloned().enumerate().map(|(k, e)| (e, k)).collect();
        let mut by_row: HashMap<usize, HashMap<usize, usize>> = HashMap::new();
        for (k, &(a, b)) in anchors.iter().enumerate() {
            by_row.entry(a).or_default().insert(b, k);
        }
        SchurAlgebra { space, l, basis, endos, position, anchors, by_row }
    }

    pub fn space(&self) -> &TensorSpace<R> {
        &self.space
    }

    pub fn ring(&self) -> &R {
        self.space.ring()
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn basis(&self) -> &[NormBasisElt] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn endo(&self, k: usize) -> &Endo<R::Elem> {
        &self.endos[k]
    }

    pub fn endos(&self) -> &[Endo<R::Elem>] {
        &self.endos
    }

    pub fn position(&self, e: &NormBasisElt) -> Option<usize> {
        self.position.get(e).copied()
    }

    /// Positions of the basis elements of defect class at most `k`.
    pub fn ideal_basis(&self, k: LParabolicClass) -> Vec<usize> {
        (0..self.basis.len()).filter(|&i| self.basis[i].defect <= k).collect()
    }

    /// The largest possible defect class, `floor(r / l)`.
    pub fn top_class(&self) -> LParabolicClass {
        LParabolicClass(self.space.r() / self.l)
    }

    /// Expands a Hecke-equivariant endomorphism in the norm basis.
    ///
    /// The coefficient of `N^d_{mu lambda}` is the entry of `e` at
    /// `(i_mu, i_lambda d)`; the remainder after subtracting the expansion
    /// must vanish.
    pub fn expand(&self, e: &Endo<R::Elem>) -> Result<Expansion<R::Elem>> {
        let mut coeffs = BTreeMap::new();
        for (k, &(a, b)) in self.anchors.iter().enumerate() {
            if let Some(c) = e.get(a, b) {
                coeffs.insert(k, c.clone());
            }
        }
        let mut residual = e.clone();
        for (&k, c) in &coeffs {
            residual = residual.sub(&self.endos[k].scale(c));
        }
        if !residual.is_zero() {
            return Err(Error::NotInSpan(format!("{} nonzero residual entries", residual.nnz())));
        }
        Ok(coeffs)
    }

    /// Reads coefficients from the rows `(v_mu) e` only, without forming the residual.
    pub fn expand_by_rows(&self, e: &Endo<R::Elem>) -> Expansion<R::Elem> {
        let mut coeffs = BTreeMap::new();
        for (&a, targets) in &self.by_row {
            for (&b, &k) in targets {
                if let Some(c) = e.get(a, b) {
                    coeffs.insert(k, c.clone());
                }
            }
        }
        coeffs
    }

    /// Rebuilds an endomorphism from basis coefficients.
    pub fn combine(&self, coeffs: &Expansion<R::Elem>) -> Endo<R::Elem> {
        let mut out = Endo::zero(self.space.dim());
        for (&k, c) in coeffs {
            out = out.add(&self.endos[k].scale(c));
        }
        out
    }

    /// Structure constants of `N_left N_right` ("first left, then right").
    ///
    /// The product vanishes unless the target weight of the left factor is
    /// the source weight of the right one.
    pub fn multiply(&self, left: usize, right: usize) -> Result<Expansion<R::Elem>> {
        if self.basis[left].lam != self.basis[right].mu {
            return Ok(BTreeMap::new());
        }
        self.expand(&self.endos[left].then(&self.endos[right]))
    }

    /// Every product of two basis elements with matching middle weight.
    pub fn multiplication_table(&self) -> Result<Vec<(usize, usize, Expansion<R::Elem>)>> {
        let pairs: Vec<(usize, usize)> = (0..self.len())
            .flat_map(|a| (0..self.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| self.basis[a].lam == self.basis[b].mu)
            .collect();
        pairs
            .par_iter()
            .map(|&(a, b)| self.multiply(a, b).map(|c| (a, b, c)))
            .collect()
    }

    /// Expansion of the identity endomorphism.
    pub fn identity_expansion(&self) -> Result<Expansion<R::Elem>> {
        self.expand(&Endo::identity(self.ring(), self.space.dim()))
    }
}

impl<R: Ring> SchurAlgebra<R>
where
    R::Elem: FieldScalar,
{
    /// Rank of the span of the basis endomorphisms inside `End(V)`.
    pub fn span_rank(&self) -> usize {
        self.echelon_of(0..self.len()).rank()
    }

    /// Echelon form of the span of the chosen basis elements.
    pub fn echelon_of<I: IntoIterator<Item = usize>>(&self, which: I) -> Echelon<R::Elem> {
        let mut ech = Echelon::new();
        for k in which {
            ech.insert(&self.endos[k].flatten());
        }
        ech
    }
}

/// Whether every coefficient of an expansion is zero outside `allowed`.
pub fn supported_in<E: Scalar>(coeffs: &Expansion<E>, allowed: &[usize]) -> bool {
    coeffs.iter().all(|(k, c)| c.is_zero() || allowed.contains(k))
}
