use serde::Serialize;

use crate::error::Result;
use crate::scalars::{FieldScalar, Ring};
use crate::superspace::index_of;
use crate::symcomb::{max_l_parabolic, Composition};

use super::linalg::Echelon;
use super::{relative_norm_of_unit, NormBasisElt, SchurAlgebra};

/// An element of the basis `B(rho)` of `End_{H_rho}(V^{⊗r})`: the blockwise
/// tensor product of norm basis elements of `S(m|n, rho_i)`.
#[derive(Clone, Debug)]
pub struct ParabolicBasisElt {
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub nu: Composition,
}

/// `B(rho)`: one element per choice of norm basis element in each block of `rho`.
pub fn parabolic_basis(m: usize, n: usize, rho: &Composition, l: usize) -> Vec<ParabolicBasisElt> {
    let mut out = vec![ParabolicBasisElt { source: Vec::new(), target: Vec::new(), nu: Composition::new(Vec::new()) }];
    for &part in rho.parts() {
        if part == 0 {
            continue;
        }
        let block = NormBasisElt::all(m, n, part, l);
        let mut next = Vec::with_capacity(out.len() * block.len());
        for prefix in &out {
            for e in &block {
                let mut source = prefix.source.clone();
                source.extend(index_of(&e.mu).0);
                let mut target = prefix.target.clone();
                target.extend(index_of(&e.lam).permuted(&e.d).0);
                let mut nu = prefix.nu.parts().to_vec();
                nu.extend(e.nu.parts());
                next.push(ParabolicBasisElt { source, target, nu: Composition::new(nu) });
            }
        }
        out = next;
    }
    out
}

/// Comparison of `N_{W, W_rho}(End_{H_rho}(V^{⊗r}))` with an ideal of the filtration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormImageAudit {
    pub rho: Composition,
    /// Class of the maximal `l`-parabolic subgroup of `W_rho`.
    pub class: usize,
    pub span_dim: usize,
    pub ideal_dim: usize,
    pub equal: bool,
}

impl<R: Ring> SchurAlgebra<R>
where
    R::Elem: FieldScalar,
{
    /// Span of `N_{W, W_rho}(E)` over `E` in `B(rho)`, computed through
    /// transitivity as `N_{W, W_nu}(e_{i, j})` on the concatenated data.
    pub fn norm_image_span(&self, rho: &Composition) -> Result<Echelon<R::Elem>> {
        let space = self.space();
        let whole = Composition::new(vec![space.r()]);
        let mut ech = Echelon::new();
        for b in parabolic_basis(space.m(), space.n(), rho, self.l()) {
            let a = space.index(&crate::superspace::MultiIndex(b.source));
            let t = space.index(&crate::superspace::MultiIndex(b.target));
            ech.insert(&relative_norm_of_unit(space, a, t, &b.nu, &whole)?.flatten());
        }
        Ok(ech)
    }

    /// Compares the norm image of `W_rho` with the ideal `I(P, r)`, `P` the
    /// maximal `l`-parabolic subgroup of `W_rho`.
    pub fn norm_image_audit(&self, rho: &Composition) -> Result<NormImageAudit> {
        let class = max_l_parabolic(rho, self.l()).1;
        let span = self.norm_image_span(rho)?;
        let ideal = self.echelon_of(self.ideal_basis(class));
        Ok(NormImageAudit {
            rho: rho.clone(),
            class: class.0,
            span_dim: span.rank(),
            ideal_dim: ideal.rank(),
            equal: span.same_span(&ideal),
        })
    }
}

