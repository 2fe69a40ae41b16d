//! Exact linear algebra over ℚ: vectors, matrices, subspaces and tensors.
//!
//! Nothing here rounds. Subspaces are kept in reduced row echelon form so
//! that two subspaces are equal exactly when their bases are identical.

mod matrix;
mod rational;
mod sparse;
mod subspace;
mod tensor;

pub use matrix::{LinearMap, Matrix, Rref};
pub use rational::{common_denominator, ParseRationalError, Rational};
pub use sparse::{Accumulator, SparseVec};
pub use subspace::{image_basis, kernel_basis, section_of, solve, solve_many, Subspace};
pub use tensor::{tensor_contract, Tensor};
