use std::fmt;

use serde::{Deserialize, Serialize};

/// A partition, stored without trailing zeros.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Panics unless `parts` is weakly decreasing; zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Self {
        assert!(parts.windows(2).all(|w| w[0] >= w[1]), "parts must be weakly decreasing: {parts:?}");
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    /// Like [`Partition::new`] but returns `None` for non-decreasing input.
    pub fn try_new(parts: Vec<usize>) -> Option<Self> {
        parts.windows(2).all(|w| w[0] >= w[1]).then(|| Partition::new(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The parts padded with zeros to length `k`. Panics if there are more than `k` parts.
    pub fn padded(&self, k: usize) -> Vec<usize> {
        assert!(self.len() <= k, "{self:?} has more than {k} parts");
        let mut v = self.0.clone();
        v.resize(k, 0);
        v
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        Partition((1..=cols).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }

    /// `self + p * other`, componentwise.
    pub fn plus_scaled(&self, p: usize, other: &Partition) -> Partition {
        let k = self.len().max(other.len());
        Partition::new((0..k).map(|i| self.part(i) + p * other.part(i)).collect())
    }

    /// No part is repeated `l` or more times.
    pub fn is_l_regular(&self, l: usize) -> bool {
        let mut run = 0;
        for (i, &p) in self.0.iter().enumerate() {
            run = if i > 0 && self.0[i - 1] == p { run + 1 } else { 1 };
            if run >= l {
                return false;
            }
        }
        true
    }

    /// `lambda_i - lambda_{i+1} < p` for every `i`, including the last part.
    pub fn is_restricted(&self, p: usize) -> bool {
        (0..self.len()).all(|i| self.part(i) - self.part(i + 1) < p)
    }

    /// Whether the node in row `i`, column `j` (1-based) lies in the diagram.
    pub fn contains(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && self.part(i - 1) >= j
    }

    /// All partitions of `r`, in reverse lexicographic order.
    pub fn all(r: usize) -> Vec<Partition> {
        Partition::at_most_parts(usize::MAX, r)
    }

    /// Partitions of `r` with at most `k` parts, i.e. `Lambda^+(k, r)`.
    pub fn at_most_parts(k: usize, r: usize) -> Vec<Partition> {
        fn rec(remaining: usize, max: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=remaining.min(max)).rev() {
                cur.push(p);
                rec(remaining - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(r, r, k, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Writes `lambda = lambda0 + p lambda1` with `lambda0` `p`-restricted.
///
/// Working up from the last part, each difference `lambda0_i - lambda0_{i+1}`
/// is the residue of `lambda_i - lambda_{i+1}` mod `p`.
pub fn restricted_decompose(lambda: &Partition, p: usize) -> (Partition, Partition) {
    let k = lambda.len();
    let mut zero = vec![0; k];
    for i in (0..k).rev() {
        let below = if i + 1 < k { zero[i + 1] } else { 0 };
        zero[i] = below + (lambda.part(i) - lambda.part(i + 1)) % p;
    }
    let one: Vec<usize> = (0..k).map(|i| (lambda.part(i) - zero[i]) / p).collect();
    (Partition::new(zero), Partition::new(one))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn counts_and_conjugates() {
        let counts: Vec<usize> = (0..8).map(|r| Partition::all(r).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        for r in 0..8 {
            for lam in Partition::all(r) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
        assert_eq!(Partition::at_most_parts(2, 4).len(), 3);
    }

    #[test]
    fn regular_and_restricted() {
        assert!(p(&[2, 1]).is_l_regular(3));
        assert!(!p(&[1, 1, 1]).is_l_regular(3));
        assert!(!p(&[3]).is_restricted(3));
        assert!(p(&[2, 1]).is_restricted(3));
        for r in 0..9 {
            for lam in Partition::all(r) {
                assert_eq!(lam.is_l_regular(3), lam.conjugate().is_restricted(3));
            }
        }
    }

    #[test]
    fn decomposition_is_the_unique_one() {
        assert_eq!(restricted_decompose(&p(&[3]), 3), (Partition::empty(), p(&[1])));
        for r in 0..=10 {
            for lam in Partition::all(r) {
                let (zero, one) = restricted_decompose(&lam, 3);
                assert!(zero.is_restricted(3));
                assert_eq!(zero.plus_scaled(3, &one), lam);
                // Brute force over all restricted zero parts of smaller size.
                let mut found = 0;
                for s in (0..=r).filter(|s| (r - s) % 3 == 0) {
                    for z in Partition::all(s).into_iter().filter(|z| z.is_restricted(3)) {
                        for o in Partition::all((r - s) / 3) {
                            if z.plus_scaled(3, &o) == lam {
                                found += 1;
                            }
                        }
                    }
                }
                assert_eq!(found, 1, "{lam:?}");
            }
        }
    }
}
