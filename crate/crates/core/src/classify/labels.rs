use serde::Serialize;

use crate::error::{Error, Result};

use super::{restricted_decompose, Partition};

/// `R_r = {(r_{-1}, r_0) : r_{-1} + l r_0 = r}`, ordered by increasing `r_0`.
pub fn r_splits(r: usize, l: usize) -> Vec<(usize, usize)> {
    (0..=r / l).map(|r0| (r - l * r0, r0)).collect()
}

/// A label `(lambda, xi, eta)` of an irreducible module: `lambda` an
/// `l`-regular partition of `r_{-1}`, `xi` with at most `m` parts and `eta`
/// with at most `n` parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IndexTriple {
    pub lam: Partition,
    pub xi: Partition,
    pub eta: Partition,
}

impl IndexTriple {
    pub fn new(lam: Partition, xi: Partition, eta: Partition) -> Self {
        IndexTriple { lam, xi, eta }
    }

    /// `|lambda| + l (|xi| + |eta|)`.
    pub fn weight(&self, l: usize) -> usize {
        self.lam.size() + l * (self.xi.size() + self.eta.size())
    }

    /// The split `(r_{-1}, r_0)` the label belongs to.
    pub fn split(&self) -> (usize, usize) {
        (self.lam.size(), self.xi.size() + self.eta.size())
    }
}

/// `P_rbar`: for `r_0 = 0` the `l`-regular partitions of `r` (as triples with
/// empty `xi`, `eta`), otherwise the triples with `xi` in `Lambda^+(m, i)` and
/// `eta` in `Lambda^+(n, r_0 - i)`.
pub fn enumerate_p_rbar(m: usize, n: usize, rbar: (usize, usize), l: usize) -> Vec<IndexTriple> {
    let (r_minus, r0) = rbar;
    let mut out = Vec::new();
    for lam in Partition::all(r_minus).into_iter().filter(|p| p.is_l_regular(l)) {
        for i in 0..=r0 {
            for xi in Partition::at_most_parts(m, i) {
                for eta in Partition::at_most_parts(n, r0 - i) {
                    out.push(IndexTriple::new(lam.clone(), xi.clone(), eta));
                }
            }
        }
    }
    out
}

/// `P_r`, the union of the `P_rbar` over `R_r`, grouped by split.
pub fn enumerate_pr(m: usize, n: usize, r: usize, l: usize) -> Vec<((usize, usize), Vec<IndexTriple>)> {
    r_splits(r, l).into_iter().map(|rbar| (rbar, enumerate_p_rbar(m, n, rbar, l))).collect()
}

/// Donkin's label set `{(tau, nu) : |tau| + l |nu| = r}`.
pub fn enumerate_donkin(r: usize, l: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for k in 0..=r / l {
        for tau in Partition::all(r - l * k) {
            for nu in Partition::all(k) {
                out.push((tau.clone(), nu));
            }
        }
    }
    out
}

/// `g(lambda, xi, eta) = (lambda^t + l xi^t, eta)`.
pub fn donkin_g(t: &IndexTriple, l: usize) -> (Partition, Partition) {
    (t.lam.conjugate().plus_scaled(l, &t.xi.conjugate()), t.eta.clone())
}

/// Inverse of [`donkin_g`]: writes `tau = tau0 + l tau1` with `tau0`
/// `l`-restricted and returns `(tau0^t, tau1^t, nu)`.
pub fn donkin_g_inverse(tau: &Partition, nu: &Partition, l: usize, m: usize, n: usize) -> Result<IndexTriple> {
    let (zero, one) = restricted_decompose(tau, l);
    let t = IndexTriple::new(zero.conjugate(), one.conjugate(), nu.clone());
    if t.xi.len() > m || t.eta.len() > n {
        return Err(Error::Domain(format!("({tau}, {nu}) needs more than ({m}|{n}) rows")));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn splits() {
        assert_eq!(r_splits(5, 3), vec![(5, 0), (2, 1)]);
        assert_eq!(r_splits(3, 3), vec![(3, 0), (0, 1)]);
        for r in 0..12 {
            assert_eq!(r_splits(r, 3).len(), r / 3 + 1);
        }
    }

    #[test]
    fn label_counts() {
        let total: usize = enumerate_pr(2, 1, 3, 3).iter().map(|(_, v)| v.len()).sum();
        assert_eq!(total, 4);
        let small = enumerate_pr(2, 1, 2, 3);
        assert_eq!(small.len(), 1);
        assert_eq!(small[0].1.len(), 2);
    }

    #[test]
    fn donkin_examples() {
        let t = IndexTriple::new(p(&[2, 1]), p(&[1]), Partition::empty());
        assert_eq!(donkin_g(&t, 3), (p(&[5, 1]), Partition::empty()));
        let t = IndexTriple::new(p(&[2, 2]), Partition::empty(), Partition::empty());
        assert_eq!(donkin_g(&t, 3).0, p(&[2, 2]));
    }
}
