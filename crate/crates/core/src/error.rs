use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("singular matrix")]
    Singular,

    /// The input points do not span a full-dimensional polytope.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// A precondition on the input polytope or argument does not hold.
    #[error("domain error: {0}")]
    Domain(String),

    /// A hard-coded named polytope failed its verification battery.
    #[error("construction of {name} failed verification: {reason}")]
    Construction { name: String, reason: String },

    #[error("enumeration error: {0}")]
    Enumeration(String),

    #[error("taxonomy error: {0}")]
    Taxonomy(String),

    /// A slice distribution matched no row of the case table.
    #[error("classification error: {0}")]
    Classification(String),

    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
