//! Exact rationals, polynomials over a fixed variable alphabet, and dense tensors.

mod mpoly;
mod scalar;
mod tensor;

pub(crate) use mpoly::{magnitude_prefix, monomial_text, superscript};
pub use mpoly::{poly_substitute, MPoly, Monomial, Var, NVARS};
pub use scalar::Scalar;
pub use tensor::{apply_to_factor, tensor_flip, Coeff, CoeffVector, FactorAction, Flip, Matrix, Tensor2, Tensor3};
