//! Bundled example algebras.

use crate::algebra::{BoundQuiverAlgebra, DEFAULT_LEN_CAP};
use crate::format::parse_alg;
use crate::linalg::FieldSpec;

/// `kQ/J^2` for the quiver `1 <-> 2 <-> 3`.
pub const FLAGSHIP_A_ALG: &str = include_str!("../data/paper_A.alg");
/// The quiver with relations of `End(A + D(A))` for the algebra above, typed in by hand.
pub const FLAGSHIP_B_ALG: &str = include_str!("../data/paper_B.alg");
pub const LINEAR_A2_ALG: &str = include_str!("../data/linear_A2.alg");
pub const ONE_LOOP_ALG: &str = include_str!("../data/one_loop.alg");
pub const COMMUTATIVE_SQUARE_ALG: &str = include_str!("../data/commutative_square.alg");
pub const KRONECKER_ALG: &str = include_str!("../data/kronecker.alg");

/// Text of a bundled `.alg` file by file name, e.g. `paper_A.alg`.
pub fn bundled(name: &str) -> Option<&'static str> {
    Some(match name {
        "paper_A.alg" => FLAGSHIP_A_ALG,
        "paper_B.alg" => FLAGSHIP_B_ALG,
        "linear_A2.alg" => LINEAR_A2_ALG,
        "one_loop.alg" => ONE_LOOP_ALG,
        "commutative_square.alg" => COMMUTATIVE_SQUARE_ALG,
        "kronecker.alg" => KRONECKER_ALG,
        _ => return None,
    })
}

fn load(text: &str, field: FieldSpec) -> BoundQuiverAlgebra {
    parse_alg(text, Some(field))
        .and_then(|f| f.build(DEFAULT_LEN_CAP))
        .expect("bundled algebra is valid")
}

pub fn flagship_algebra(field: FieldSpec) -> BoundQuiverAlgebra {
    load(FLAGSHIP_A_ALG, field)
}

pub fn flagship_endomorphism_algebra(field: FieldSpec) -> BoundQuiverAlgebra {
    load(FLAGSHIP_B_ALG, field)
}

pub fn linear_a2(field: FieldSpec) -> BoundQuiverAlgebra {
    load(LINEAR_A2_ALG, field)
}

/// `k[x]/(x^2)` as a one-vertex quiver with a loop.
pub fn one_loop(field: FieldSpec) -> BoundQuiverAlgebra {
    load(ONE_LOOP_ALG, field)
}

pub fn commutative_square(field: FieldSpec) -> BoundQuiverAlgebra {
    load(COMMUTATIVE_SQUARE_ALG, field)
}

pub fn kronecker(field: FieldSpec) -> BoundQuiverAlgebra {
    load(KRONECKER_ALG, field)
}
