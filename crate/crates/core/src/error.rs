use thiserror::Error;

use crate::mv::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A table is the wrong shape or references an element that does not exist.
    #[error("malformed table: {0}")]
    Malformed(String),

    #[error("carrier of size {size} exceeds the size guard of {limit}")]
    SizeGuard { size: usize, limit: usize },

    #[error("tables do not define an MV-algebra: {0}")]
    NotAnMvAlgebra(Violation),

    #[error("tables do not define a bounded distributive lattice: {0}")]
    NotADistributiveLattice(String),

    #[error("map is not a homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("map has arity {found}, expected {expected}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("variable x{0} is not bound by the assignment")]
    UnboundVariable(usize),

    #[error("subset {0:?} is not an ideal")]
    NotAnIdeal(Vec<usize>),

    #[error("ideal {0:?} is not prime")]
    NotPrime(Vec<usize>),

    #[error("ideal {0:?} is not maximal")]
    NotMaximal(Vec<usize>),

    #[error("ideal must be proper")]
    NotProper,

    #[error("homomorphism is not surjective")]
    NotSurjective,

    #[error("invalid strong unit: {0}")]
    InvalidUnit(String),

    #[error("element violates the interval constraints: {0}")]
    Constraint(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    /// Two independent routes to the same verdict disagreed. This always
    /// indicates a bug or a false mathematical claim.
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
