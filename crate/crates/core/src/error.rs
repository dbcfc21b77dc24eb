use thiserror::Error;

use crate::ar::ArQuiver;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("relation is not admissible: {0}")]
    NotAdmissible(String),
    #[error("no power of the arrow ideal lies in the relations up to length {cap}")]
    NotAdmissibleWithinCap { cap: usize },
    #[error("vertex {vertex} out of range (algebra has {count} vertices)")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("modules or maps live over different algebras")]
    AlgebraMismatch,
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("could not certify a decomposition into indecomposables: {0}")]
    DecompositionIncomplete(String),
    #[error("algebra is not radical-square-zero")]
    NotRadicalSquareZero,
    #[error("module is projective; no almost split sequence ends in it")]
    ProjectiveInput,
    #[error("module is not indecomposable")]
    NotIndecomposable,
    #[error("vertex cap {cap} exceeded while knitting the Auslander-Reiten quiver")]
    CapExceeded { cap: usize, partial: Box<ArQuiver> },
    #[error("list entry {index} is decomposable")]
    ListEntryDecomposable { index: usize },
    #[error("list entries {first} and {second} are isomorphic")]
    DuplicateListEntry { first: usize, second: usize },
    #[error("module is not a generator-cogenerator: {0}")]
    GenCogenFailed(String),
    #[error("endomorphism algebra is not basic: {0}")]
    NotBasic(String),
    #[error("presentation does not reproduce the algebra: {0}")]
    PresentationMismatch(String),
    #[error("integer overflow: {0}")]
    Overflow(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
