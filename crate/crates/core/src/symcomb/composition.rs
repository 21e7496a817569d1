use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use super::Permutation;

/// A composition of `r`: a finite sequence of nonnegative parts.
///
/// Zero parts are kept, so `Lambda(n, r)` has a fixed length `n`. The
/// composition determines the Young subgroup `W_lambda` of permutations
/// preserving its consecutive blocks of positions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    /// The composition `(1, .., 1)` of `r`, whose Young subgroup is trivial.
    pub fn singletons(r: usize) -> Self {
        Composition::new(vec![1; r])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The same composition with zero parts removed.
    pub fn nonzero(&self) -> Composition {
        Composition::new(self.parts.iter().copied().filter(|&p| p > 0).collect())
    }

    /// Position ranges of the blocks, one per part (empty ranges for zeros).
    pub fn blocks(&self) -> Vec<Range<usize>> {
        let mut start = 0;
        self.parts
            .iter()
            .map(|&p| {
                let range = start..start + p;
                start += p;
                range
            })
            .collect()
    }

    /// Block label of each position: `labels()[k] = c` when `k` lies in block `c`.
    ///
    /// This is the index tuple `i_lambda` with 0-based values.
    pub fn labels(&self) -> Vec<usize> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(c, &p)| std::iter::repeat_n(c, p))
            .collect()
    }

    /// Simple reflections `s_k` lying in `W_lambda` (0-based `k`).
    pub fn simple_generators(&self) -> Vec<usize> {
        self.blocks()
            .into_iter()
            .flat_map(|b| b.start..b.end.saturating_sub(1))
            .collect()
    }

    /// Whether `w` lies in `W_lambda`.
    pub fn contains(&self, w: &Permutation) -> bool {
        let labels = self.labels();
        (0..w.degree()).all(|k| labels[w.apply(k)] == labels[k])
    }

    /// Whether `W_self <= W_other`.
    pub fn is_refinement_of(&self, other: &Composition) -> bool {
        if self.weight() != other.weight() {
            return false;
        }
        let gens = other.simple_generators();
        self.simple_generators().iter().all(|k| gens.contains(k))
    }

    /// All elements of `W_lambda`.
    pub fn subgroup_elements(&self) -> Vec<Permutation> {
        let r = self.weight();
        let mut out = vec![Permutation::identity(r)];
        for block in self.blocks() {
            let local = Permutation::all(block.len());
            let mut next = Vec::with_capacity(out.len() * local.len());
            for w in &out {
                for u in &local {
                    let mut images = w.images().to_vec();
                    for (offset, &x) in u.images().iter().enumerate() {
                        images[block.start + offset] = block.start + x;
                    }
                    next.push(Permutation::from_images(images));
                }
            }
            out = next;
        }
        out
    }

    /// All compositions of `r` with exactly `n` parts, lexicographically decreasing.
    pub fn all(n: usize, r: usize) -> Vec<Composition> {
        fn rec(n: usize, r: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if n == 0 {
                if r == 0 {
                    out.push(Composition::new(prefix.clone()));
                }
                return;
            }
            if n == 1 {
                prefix.push(r);
                out.push(Composition::new(prefix.clone()));
                prefix.pop();
                return;
            }
            for first in (0..=r).rev() {
                prefix.push(first);
                rec(n - 1, r - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, r, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A pair `(lambda^(0) | lambda^(1))` of compositions with `m` and `n` parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SuperComposition {
    pub even: Composition,
    pub odd: Composition,
}

impl SuperComposition {
    pub fn new(even: Vec<usize>, odd: Vec<usize>) -> Self {
        SuperComposition { even: Composition::new(even), odd: Composition::new(odd) }
    }

    pub fn m(&self) -> usize {
        self.even.len()
    }

    pub fn n(&self) -> usize {
        self.odd.len()
    }

    pub fn weight(&self) -> usize {
        self.even.weight() + self.odd.weight()
    }

    /// The concatenation `(lambda_1, .., lambda_{m+n})` as a plain composition.
    pub fn flat(&self) -> Composition {
        let mut parts = self.even.parts().to_vec();
        parts.extend_from_slice(self.odd.parts());
        Composition::new(parts)
    }

    pub fn from_flat(flat: &[usize], m: usize) -> Self {
        SuperComposition::new(flat[..m].to_vec(), flat[m..].to_vec())
    }

    /// The composition of `r` whose Young subgroup is `W_{lambda^(0)}`: the even
    /// blocks followed by singletons covering the odd positions.
    pub fn even_subgroup(&self) -> Composition {
        let mut parts = self.even.parts().to_vec();
        parts.extend(std::iter::repeat_n(1, self.odd.weight()));
        Composition::new(parts)
    }

    /// The composition of `r` whose Young subgroup is `W_{lambda^(1)}`.
    pub fn odd_subgroup(&self) -> Composition {
        let mut parts = vec![1; self.even.weight()];
        parts.extend_from_slice(self.odd.parts());
        Composition::new(parts)
    }

    /// `Lambda(m|n, r)`.
    pub fn all(m: usize, n: usize, r: usize) -> Vec<SuperComposition> {
        Composition::all(m + n, r)
            .into_iter()
            .map(|c| SuperComposition::from_flat(c.parts(), m))
            .collect()
    }
}

impl fmt::Debug for SuperComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}|{:?})", self.even.parts(), self.odd.parts())
    }
}

impl fmt::Display for SuperComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        // C(r + n - 1, n - 1)
        assert_eq!(Composition::all(3, 3).len(), 10);
        assert_eq!(Composition::all(2, 0).len(), 1);
        assert_eq!(Composition::all(0, 0).len(), 1);
        assert_eq!(Composition::all(0, 2).len(), 0);
        assert_eq!(SuperComposition::all(1, 1, 3).len(), 4);
    }

    #[test]
    fn subgroup_elements_match_membership() {
        let lam = Composition::new(vec![2, 0, 1, 2]);
        let elems = lam.subgroup_elements();
        assert_eq!(elems.len(), 4);
        let members: Vec<_> = Permutation::all(5).into_iter().filter(|w| lam.contains(w)).collect();
        let mut sorted = elems.clone();
        sorted.sort();
        assert_eq!(sorted, members);
    }

    #[test]
    fn super_subgroups() {
        let lam = SuperComposition::new(vec![2], vec![1, 2]);
        assert_eq!(lam.even_subgroup().simple_generators(), vec![0]);
        assert_eq!(lam.odd_subgroup().simple_generators(), vec![3]);
        assert_eq!(serde_json::to_string(&lam).unwrap(), r#"{"even":[2],"odd":[1,2]}"#);
    }
}
