use thiserror::Error;

use crate::simplex::Simplex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("malformed simplex: {0}")]
    MalformedSimplex(String),

    #[error("simplex {0} is not in the complex")]
    NotInComplex(Simplex),

    #[error("{face} is not a facet of {simplex}")]
    NotAFacet { simplex: Simplex, face: Simplex },

    #[error("invalid discrete Morse function at {witness}: {reason}")]
    InvalidMorseFunction { witness: Simplex, reason: String },

    #[error("invalid discrete vector field: {0}")]
    InvalidField(String),

    #[error("simplex {0} is not critical")]
    NotCritical(Simplex),

    #[error("path endpoints do not match: {first} then {second}")]
    EndpointMismatch { first: Simplex, second: Simplex },

    #[error("malformed path: {0}")]
    MalformedPath(String),

    #[error("cannot insert: {0}")]
    CannotInsert(String),

    #[error("cannot cancel: {0}")]
    CannotCancel(String),

    #[error("the vector field has a closed V-path and no length cap was given")]
    UnboundedEnumeration,

    #[error("graph property is not monotone: {0}")]
    PropertyViolation(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("d^2 is nonzero: entry ({row}, {col}) = {value}")]
    DSquaredNonzero { row: Simplex, col: Simplex, value: i64 },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("algorithm exceeded {0} steps without terminating or cycling")]
    StepLimit(usize),

    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}
