use thiserror::Error;

/// Errors raised by algebra construction, arithmetic and the verification engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different algebras")]
    MixedAlgebras,
    #[error("quiver has no vertices")]
    EmptyQuiver,
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("unknown name {0}")]
    UnknownName(String),
    #[error("duplicate name {0}")]
    DuplicateName(String),
    #[error("cap must be at least 1")]
    InvalidCap,
    #[error("degree {degree} exceeds cap {cap}")]
    DegreeAboveCap { degree: usize, cap: usize },
    #[error("multiplication table is not associative at ({0}, {1}, {2})")]
    NotAssociative(String, String, String),
    #[error("multiplication table has no unit")]
    NotUnital,
    #[error("{0} is not idempotent")]
    NotIdempotent(String),
    #[error("malformed factor {index}: {reason}")]
    MalformedFactor { index: usize, reason: String },
    #[error("unsupported quotient: {0}")]
    UnsupportedQuotient(String),
    #[error("{0} is not a generator")]
    NotAGenerator(String),
    #[error("invalid derivation image for {generator}: {reason}")]
    InvalidImage { generator: String, reason: String },
    #[error("hypothesis failed: {0}")]
    Hypothesis(String),
    #[error("nilpotency not witnessed within bound {bound}")]
    NotWitnessed { bound: usize },
    #[error("expected {expected} entries, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("transport failed: {0}")]
    Transport(String),
    #[error("arithmetic was truncated at the cap")]
    Truncated,
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
