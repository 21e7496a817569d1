//! Exact computations with q-Schur superalgebras at odd roots of unity.
//!
//! The crate builds the q-Schur superalgebra `S(m|n, r)` as the algebra of
//! Hecke-equivariant endomorphisms of the tensor superspace, realizes its
//! basis through relative norms, and checks the structure of the defect
//! filtration, the Brauer homomorphisms and the combinatorics of the
//! irreducible labels.
//!
//! Modules are layered bottom-up:
//!
//! - [`scalars`]: Laurent polynomials and cyclotomic fields
//! - [`symcomb`]: permutations, compositions and coset representatives
//! - [`hecke`]: the Hecke algebra of type A
//! - [`superspace`]: the tensor superspace and its Hecke action
//! - [`schur`]: endomorphisms, relative norms and the norm basis
//! - [`qmatrix`]: the quantum matrix superalgebra
//! - [`classify`]: partition combinatorics for the irreducible labels
//! - [`cli`]: report generation behind the `qschur` binary

pub mod classify;
pub mod cli;
pub mod error;
pub mod hecke;
pub mod qmatrix;
pub mod scalars;
pub mod schur;
pub mod superspace;
pub mod symcomb;

pub use error::{Error, Result};
