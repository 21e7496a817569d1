//! Combinatorics of the labels of irreducible modules.
//!
//! Covers the splits `R_r`, the label sets `P_r` and Donkin's bijection, the
//! `p`-rim operators `J`, `j` and the Mullineux map, and the bijection from
//! `P_r` to the weights `tau Lambda^{++}(m|n, r)`.

mod labels;
mod partition;
mod rim;
mod weights;

pub use labels::{donkin_g, donkin_g_inverse, enumerate_donkin, enumerate_p_rbar, enumerate_pr, r_splits, IndexTriple};
pub use partition::{restricted_decompose, Partition};
pub use rim::{big_j, mullineux, p_rim, p_segments, rim, small_j, RimNode};
pub use weights::{
    weight_of_label, label_of_weight, dominant_weights, h_map, is_lambda_pp, lambda_pp, lambda_pp_small_rank,
    rw_map, tau, tau_inverse,
};
