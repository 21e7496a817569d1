//! The q-Schur superalgebra as the commutant of the Hecke action.
//!
//! Elements are [`Endo`]s of the tensor superspace. The algebra has the
//! basis `N^d_{mu lambda} = N_{W, W_nu}(e_{mu, lambda d})` of relative norms
//! of elementary maps, indexed by [`NormBasisElt`]; the defect class of
//! `nu = lambda d ∩ mu` controls the ideal filtration.

mod algebra;
mod basis;
mod brauer;
mod compare;
mod endo;
mod levi;
pub mod linalg;
mod norm;
mod spans;

pub use algebra::SchurAlgebra;
pub use basis::NormBasisElt;
pub use algebra::{supported_in, Expansion};
pub use brauer::{
    brauer_kernel_dims, classical_schur_dimension, even_schur_dimension, filtration_quotient_dims, ideal_dimension,
    schur_dimension, BrauerAudit, FiltrationAudit,
};
pub use compare::{
    coaction_sign, dual_basis_endo, dual_basis_endos, norm_element, psi_endo, psi_norm_scalar, symmetry_sides,
    theorem_sign,
};
pub use endo::Endo;
pub use levi::{levi_decomposition, LeviAudit};
pub use norm::{conjugate_by, elementary_endo, relative_norm, relative_norm_of_unit, relative_norm_row};
pub use spans::{parabolic_basis, NormImageAudit, ParabolicBasisElt};
