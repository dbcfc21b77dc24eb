//! Exact dense linear algebra over Q and prime fields.

mod matrix;
pub mod poly;
mod scalar;

pub use matrix::{rank_of_vectors, Matrix};
pub use scalar::{FieldSpec, Scalar};
