use thiserror::Error;

/// Errors produced by the library.
///
/// The variants split into three families that the command-line front end
/// maps onto distinct exit codes: malformed input ([`Error::Parse`]),
/// mathematical precondition failures (most variants), and internal
/// cross-check failures ([`Error::CrossCheck`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is outside the vertex range 1..={m}")]
    VertexOutOfRange { vertex: usize, m: usize },
    #[error("the vertex count must be positive")]
    NoVertices,
    #[error("at most {max} vertices are supported, got {m}")]
    TooManyVertices { m: usize, max: usize },
    #[error("face {0} is not a face of the complex")]
    FaceNotInComplex(String),
    #[error("the complex has no nonempty faces")]
    VoidComplex,
    #[error("the complex is the full simplex on {0} vertices")]
    FullSimplex(usize),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("the complex is not pure")]
    NotPure,
    #[error("not a simplicial map: {0}")]
    NotSimplicialMap(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal cross-check failed: {0}")]
    CrossCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
