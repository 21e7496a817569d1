use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A permutation of `{0, .., r-1}` in one-line notation.
///
/// Products are composites of maps, `(a * b)(k) = a(b(k))`, and an index
/// tuple `i` is acted on by place permutation, `(i w)_k = i_{w(k)}`, so that
/// `(i a) b = i (a b)`. Serialized 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(r: usize) -> Self {
        Permutation { images: (0..r).collect() }
    }

    /// Panics unless `images` is a bijection of `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            assert!(x < images.len() && !seen[x], "not a permutation: {images:?}");
            seen[x] = true;
        }
        Permutation { images }
    }

    /// The simple transposition `s_k` swapping `k` and `k+1` (0-based).
    pub fn simple(r: usize, k: usize) -> Self {
        assert!(k + 1 < r, "simple reflection s_{k} out of range for r = {r}");
        let mut p = Permutation::identity(r);
        p.images.swap(k, k + 1);
        p
    }

    /// Product of simple reflections `s_{a_1} s_{a_2} ...`.
    pub fn from_word(r: usize, word: &[usize]) -> Self {
        word.iter().fold(Permutation::identity(r), |w, &k| w.times_simple(k))
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| k == x)
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation { images: other.images.iter().map(|&k| self.images[k]).collect() }
    }

    /// `self * s_k`; in one-line notation this swaps positions `k` and `k+1`.
    pub fn times_simple(&self, k: usize) -> Permutation {
        let mut p = self.clone();
        p.images.swap(k, k + 1);
        p
    }

    /// `s_k * self`; swaps the values `k` and `k+1`.
    pub fn simple_times(&self, k: usize) -> Permutation {
        let images = self
            .images
            .iter()
            .map(|&x| match x {
                x if x == k => k + 1,
                x if x == k + 1 => k,
                x => x,
            })
            .collect();
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (k, &x) in self.images.iter().enumerate() {
            inv[x] = k;
        }
        Permutation { images: inv }
    }

    /// Coxeter length, the number of inversions of the one-line form.
    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .map(|a| (a + 1..w.len()).filter(|&b| w[a] > w[b]).count())
            .sum()
    }

    /// Whether `l(self * s_k) > l(self)`.
    pub fn lengthens_right(&self, k: usize) -> bool {
        self.images[k] < self.images[k + 1]
    }

    /// A reduced word `[a_1, .., a_l]` with `self = s_{a_1} ... s_{a_l}`,
    /// obtained by bubble-sorting the one-line form.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.images.clone();
        let mut word = Vec::with_capacity(self.length());
        let mut changed = true;
        while changed {
            changed = false;
            for k in 0..w.len().saturating_sub(1) {
                if w[k] > w[k + 1] {
                    w.swap(k, k + 1);
                    word.push(k);
                    changed = true;
                }
            }
        }
        word.reverse();
        word
    }

    /// Place permutation of a tuple: `(i w)_k = i_{w(k)}`.
    pub fn act_on<T: Clone>(&self, tuple: &[T]) -> Vec<T> {
        assert_eq!(tuple.len(), self.degree());
        self.images.iter().map(|&k| tuple[k].clone()).collect()
    }

    /// All permutations of degree `r` in lexicographic order of one-line form.
    pub fn all(r: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(r);
        let mut used = vec![false; r];
        fn rec(r: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if current.len() == r {
                out.push(Permutation { images: current.clone() });
                return;
            }
            for x in 0..r {
                if !used[x] {
                    used[x] = true;
                    current.push(x);
                    rec(r, current, used, out);
                    current.pop();
                    used[x] = false;
                }
            }
        }
        rec(r, &mut current, &mut used, &mut out);
        out
    }

    /// One-line form with 1-based values.
    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_based())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<usize>::deserialize(d)?;
        let mut seen = vec![false; raw.len()];
        let mut images = Vec::with_capacity(raw.len());
        for x in raw {
            if x == 0 || x > seen.len() || seen[x - 1] {
                return Err(serde::de::Error::custom("not a 1-based permutation"));
            }
            seen[x - 1] = true;
            images.push(x - 1);
        }
        Ok(Permutation { images })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_word_reconstructs() {
        for w in Permutation::all(5) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            assert_eq!(Permutation::from_word(5, &word), w);
        }
    }

    #[test]
    fn right_action_is_compatible_with_products() {
        let tuple = vec!['a', 'b', 'c', 'd'];
        for a in Permutation::all(4) {
            for b in Permutation::all(4).into_iter().step_by(5) {
                assert_eq!(b.act_on(&a.act_on(&tuple)), a.compose(&b).act_on(&tuple));
            }
        }
    }

    #[test]
    fn length_criterion_for_right_multiplication() {
        for w in Permutation::all(4) {
            for k in 0..3 {
                assert_eq!(w.times_simple(k).length() > w.length(), w.lengthens_right(k));
                assert_eq!(w.times_simple(k), w.compose(&Permutation::simple(4, k)));
                assert_eq!(w.simple_times(k), Permutation::simple(4, k).compose(&w));
            }
        }
    }

    #[test]
    fn json_is_one_based() {
        let w = Permutation::from_images(vec![1, 0, 2]);
        assert_eq!(serde_json::to_string(&w).unwrap(), "[2,1,3]");
        let back: Permutation = serde_json::from_str("[2,1,3]").unwrap();
        assert_eq!(back, w);
    }
}
