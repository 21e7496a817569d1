use std::fmt;

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::hecke::is_super_rep;
use crate::symcomb::{
    intersect_composition, max_l_parabolic, super_double_cosets, Composition, LParabolicClass, Permutation,
    SuperComposition,
};

/// Index of the norm basis element `N^d_{mu lambda}` together with
/// `nu = lambda d ∩ mu` and the class of the maximal `l`-parabolic of `W_nu`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NormBasisElt {
    pub lam: SuperComposition,
    pub mu: SuperComposition,
    pub d: Permutation,
    pub nu: Composition,
    pub defect: LParabolicClass,
}

impl NormBasisElt {
    pub fn new(lam: SuperComposition, mu: SuperComposition, d: Permutation, l: usize) -> Result<Self> {
        if !is_super_rep(&lam, &mu, &d) {
            return Err(Error::NotSuperRep(format!("{d} for ({lam:?}, {mu:?})")));
        }
        let nu = intersect_composition(&lam.flat(), &d, &mu.flat())?;
        let defect = max_l_parabolic(&nu, l).1;
        Ok(NormBasisElt { lam, mu, d, nu, defect })
    }

    /// All basis elements of `S(m|n, r)`, grouped by `mu`, then `lambda`.
    pub fn all(m: usize, n: usize, r: usize, l: usize) -> Vec<NormBasisElt> {
        let weights = SuperComposition::all(m, n, r);
        let mut out = Vec::new();
        for mu in &weights {
            for lam in &weights {
                for d in super_double_cosets(lam, mu) {
                    out.push(NormBasisElt::new(lam.clone(), mu.clone(), d, l).expect("enumerated from D°"));
                }
            }
        }
        out
    }

    pub fn r(&self) -> usize {
        self.d.degree()
    }

    /// `{"lam":..,"mu":..,"d":[..],"nu":[..],"defect":k}`.
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("basis elements serialize")
    }
}

impl fmt::Debug for NormBasisElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N[{:?} <- {:?}, d={}, defect={}]", self.mu, self.lam, self.d, self.defect.0)
    }
}
