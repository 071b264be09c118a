use thiserror::Error;

/// Errors raised by the arithmetic, construction and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("prime {p} exceeds the configured bound {bound}")]
    PrimeTooLarge { p: u64, bound: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("matrix is not invertible over its ring")]
    NotInvertible,

    #[error("{what} cap exceeded: limit {limit}")]
    CapExceeded { what: &'static str, limit: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
