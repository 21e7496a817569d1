//! Symmetric-group combinatorics: permutations, compositions, Young
//! subgroups, distinguished coset representatives and `l`-parabolics.

mod composition;
mod cosets;
mod parabolic;
mod perm;
mod subgroup;

pub use composition::{Composition, SuperComposition};
pub use cosets::{
    coset_rep_for_labels, double_coset_reps, even_odd_blocks, has_trivial_mixed_intersections,
    intersect_composition, is_double_coset_rep, is_min_coset_rep, min_coset_reps, min_coset_reps_within,
    super_double_cosets,
};
pub use parabolic::{l_parabolic_leq, max_l_parabolic, LParabolicClass};
pub use perm::Permutation;
pub use subgroup::YoungSubgroup;
