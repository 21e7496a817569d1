use super::{Composition, Permutation};

/// A Young subgroup of `S_r` given by its nontrivial orbits.
///
/// The group is the direct product of the full symmetric groups on each
/// orbit; it is parabolic exactly when every orbit is an interval.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct YoungSubgroup {
    degree: usize,
    orbits: Vec<Vec<usize>>,
}

impl YoungSubgroup {
    /// Builds the subgroup from arbitrary position classes; singletons are dropped.
    pub fn from_classes(degree: usize, classes: Vec<Vec<usize>>) -> Self {
        let mut orbits: Vec<Vec<usize>> = classes
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        orbits.sort();
        YoungSubgroup { degree, orbits }
    }

    /// The subgroup of permutations fixing every tuple in `labelings`
    /// under the place action.
    pub fn stabilizer(degree: usize, labelings: &[&[usize]]) -> Self {
        let mut classes: std::collections::BTreeMap<Vec<usize>, Vec<usize>> = Default::default();
        for k in 0..degree {
            let key: Vec<usize> = labelings.iter().map(|lab| lab[k]).collect();
            classes.entry(key).or_default().push(k);
        }
        YoungSubgroup::from_classes(degree, classes.into_values().collect())
    }

    pub fn trivial(degree: usize) -> Self {
        YoungSubgroup { degree, orbits: Vec::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn is_trivial(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn order(&self) -> usize {
        self.orbits.iter().map(|o| (1..=o.len()).product::<usize>()).product()
    }

    /// Transpositions of consecutive orbit elements; they generate the group.
    pub fn generators(&self) -> Vec<(usize, usize)> {
        self.orbits
            .iter()
            .flat_map(|o| o.windows(2).map(|w| (w[0], w[1])))
            .collect()
    }

    pub fn is_parabolic(&self) -> bool {
        self.orbits.iter().all(|o| o.windows(2).all(|w| w[1] == w[0] + 1))
    }

    /// Simple reflections `s_k` lying in the group.
    pub fn simple_generators(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = self
            .orbits
            .iter()
            .flat_map(|o| o.windows(2).filter(|w| w[1] == w[0] + 1).map(|w| w[0]))
            .collect();
        gens.sort_unstable();
        gens
    }

    pub fn contains(&self, w: &Permutation) -> bool {
        let mut orbit_of = vec![usize::MAX; self.degree];
        for (idx, o) in self.orbits.iter().enumerate() {
            for &k in o {
                orbit_of[k] = idx;
            }
        }
        (0..self.degree).all(|k| {
            let img = w.apply(k);
            if orbit_of[k] == usize::MAX {
                img == k
            } else {
                orbit_of[img] == orbit_of[k]
            }
        })
    }

    /// Whether every orbit of `self` lies inside an orbit of `other`.
    pub fn is_subgroup_of(&self, other: &YoungSubgroup) -> bool {
        self.orbits.iter().all(|o| other.orbits.iter().any(|p| o.iter().all(|k| p.contains(k))))
    }

    /// The composition of `degree` describing a parabolic subgroup, or `None`
    /// if the subgroup is not parabolic.
    pub fn as_composition(&self) -> Option<Composition> {
        if !self.is_parabolic() {
            return None;
        }
        let mut parts = Vec::new();
        let mut k = 0;
        while k < self.degree {
            match self.orbits.iter().find(|o| o[0] == k) {
                Some(o) => {
                    parts.push(o.len());
                    k += o.len();
                }
                None => {
                    parts.push(1);
                    k += 1;
                }
            }
        }
        Some(Composition::new(parts))
    }

    /// Conjugate `x^-1 G x`, whose orbits are the images of the orbits under `x^-1`.
    pub fn conjugate(&self, x: &Permutation) -> YoungSubgroup {
        let xinv = x.inverse();
        YoungSubgroup::from_classes(
            self.degree,
            self.orbits.iter().map(|o| o.iter().map(|&k| xinv.apply(k)).collect()).collect(),
        )
    }

    pub fn from_composition(c: &Composition) -> YoungSubgroup {
        YoungSubgroup::from_classes(c.weight(), c.blocks().into_iter().map(|b| b.collect()).collect())
    }
}
