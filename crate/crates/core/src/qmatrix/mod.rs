//! The quantum matrix superalgebra `A_q(m|n)`.
//!
//! Elements are kept in the ordered monomial basis `x^A`, `A` a
//! [`SuperMatrix`], and arbitrary words in the generators `x_ij` are brought
//! to this basis by straightening adjacent out-of-order pairs.

mod algebra;
mod frobenius;
mod matrix;

pub use algebra::{Gen, QmsElement, QuantumMatrixAlgebra, Strategy, TensorCube, TensorSquare};
pub use frobenius::{frobenius_image_basis, frobenius_images, CoactionSign};
pub use matrix::{matrix_of_triple, triple_of_matrix, SuperMatrix};
