use serde::{Deserialize, Serialize};

use super::Composition;

/// Conjugacy class of an `l`-parabolic subgroup, recorded by its number of
/// blocks of size `l` (blocks of size one are trivial).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LParabolicClass(pub usize);

impl LParabolicClass {
    /// The standard representative `(l^k, 1^(r - kl))` of the class.
    pub fn standard_composition(&self, r: usize, l: usize) -> Composition {
        assert!(self.0 * l <= r, "class {} does not fit in S_{r} for l = {l}", self.0);
        let mut parts = vec![l; self.0];
        parts.extend(std::iter::repeat_n(1, r - self.0 * l));
        Composition::new(parts)
    }
}

/// The maximal `l`-parabolic subgroup `P_nu` of `W_nu` and its class.
///
/// Each part `nu_i` is replaced by `(l^{floor(nu_i/l)}, 1^{nu_i mod l})`.
pub fn max_l_parabolic(nu: &Composition, l: usize) -> (Composition, LParabolicClass) {
    let mut parts = Vec::new();
    let mut k = 0;
    for &p in nu.parts() {
        k += p / l;
        parts.extend(std::iter::repeat_n(l, p / l));
        parts.extend(std::iter::repeat_n(1, p % l));
    }
    (Composition::new(parts), LParabolicClass(k))
}

/// Whether an `l`-parabolic of class `k1` is conjugate to a subgroup of one
/// of class `k2`.
pub fn l_parabolic_leq(k1: LParabolicClass, k2: LParabolicClass) -> bool {
    k1.0 <= k2.0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes() {
        assert_eq!(max_l_parabolic(&Composition::new(vec![3, 1]), 3).1, LParabolicClass(1));
        let (p, k) = max_l_parabolic(&Composition::new(vec![5]), 3);
        assert_eq!(p.parts(), &[3, 1, 1]);
        assert_eq!(k, LParabolicClass(1));
        assert_eq!(max_l_parabolic(&Composition::new(vec![7, 4]), 3).1, LParabolicClass(3));
    }
}
