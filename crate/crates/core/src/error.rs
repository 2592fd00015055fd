use thiserror::Error;

/// Errors raised while constructing or combining algebraic data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible shapes: {0}")]
    Shape(String),
    #[error("position/arity mismatch: {0}")]
    Arity(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("axiom violated: {0}")]
    Axiom(String),
    #[error("refusing computation: {0}")]
    TooLarge(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
