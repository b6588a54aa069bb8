use thiserror::Error;

use crate::field::FieldSpec;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: FieldSpec, right: FieldSpec },

    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot reduce {value} mod {modulus}: denominator is divisible by the modulus")]
    Reduction { value: String, modulus: u64 },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("invalid scalar literal {literal:?}: {reason}")]
    Literal { literal: String, reason: String },

    #[error("product ({left},{right}) must satisfy 1 <= left < right <= {dim}")]
    Ordering { left: usize, right: usize, dim: usize },

    #[error("product ({left},{right}) listed more than once")]
    DuplicatePair { left: usize, right: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix is singular")]
    Singular,

    #[error("determinant needs a square matrix, got {rows}x{cols}; use the rank instead")]
    NotSquare { rows: usize, cols: usize },

    #[error("invalid support pattern: {0}")]
    Support(String),

    #[error("{context}: {message}")]
    Format { context: String, message: String },

    #[error("unknown {kind} {name:?} (available: {available})")]
    UnknownStrategy {
        kind: &'static str,
        name: String,
        available: String,
    },

    #[error("invalid argument: {0}")]
    Argument(String),
}

impl Error {
    pub(crate) fn format(context: impl Into<String>, message: impl ToString) -> Self {
        Error::Format {
            context: context.into(),
            message: message.to_string(),
        }
    }

    /// Prefix the context of a format error with an outer location.
    pub(crate) fn at(self, location: &str) -> Self {
        match self {
            Error::Format { context, message } => Error::Format {
                context: format!("{location}{context}"),
                message,
            },
            other => Error::Format {
                context: location.to_string(),
                message: other.to_string(),
            },
        }
    }
}
