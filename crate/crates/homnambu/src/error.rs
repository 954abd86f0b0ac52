use thiserror::Error;

/// Errors surfaced by the algebra kernels and the document parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("dimension mismatch: {context}")]
    DimMismatch { context: String },

    #[error("index out of range: {context}")]
    IndexOutOfRange { context: String },

    #[error("map is not a morphism of the given algebras")]
    NotAMorphism,

    #[error("algebra does not satisfy the Leibniz identity")]
    NotLeibniz,

    #[error("algebra is not multiplicative")]
    NotMultiplicative,

    #[error("map does not commute with the twist")]
    TwistCommutationFailure,

    #[error("bracket argument is not fixed by the twist")]
    NotFixedPoint,

    #[error("vector lies outside the ambient span")]
    NotASubspace,

    #[error("module actions do not form a representation")]
    NotARepresentation,

    #[error("cochain does not satisfy the cocycle condition")]
    NotACocycle,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("index out of range at line {line}: {msg}")]
    Range { line: usize, msg: String },

    #[error("duplicate key at line {line}: {msg}")]
    DuplicateKey { line: usize, msg: String },
}

impl Error {
    pub fn dim_mismatch(context: impl Into<String>) -> Self {
        Error::DimMismatch {
            context: context.into(),
        }
    }

    pub fn index_out_of_range(context: impl Into<String>) -> Self {
        Error::IndexOutOfRange {
            context: context.into(),
        }
    }
}
