//! Exact computations with modules over bound quiver algebras.

pub mod algebra;
pub mod ar;
pub mod cluster;
pub mod endo;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod homology;
pub mod linalg;
pub mod quiver;
pub mod rep;

pub use algebra::BoundQuiverAlgebra;
pub use error::{Error, Result};
pub use linalg::{FieldSpec, Matrix, Scalar};
pub use quiver::{Arrow, Path, Quiver, Relation, RelationSet};
pub use rep::{Morphism, Representation};
