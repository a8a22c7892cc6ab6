//! Crate-wide error type.

use thiserror::Error;

/// Unified error type for catalog I/O, precondition violations, theorem
/// side-condition failures, and quadrature breakdowns.
#[derive(Debug, Error)]
pub enum Error {
    /// Underlying file-system failure.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// A text or binary catalog could not be decoded.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A structural invariant of a zero catalog is violated.
    #[error("catalog invariant violated: {0}")]
    Catalog(String),

    /// A summation height exceeds the data actually present.
    #[error("catalog exhausted: requested height {requested} exceeds last ordinate {last}")]
    CatalogExhausted { requested: f64, last: f64 },

    /// An operation precondition (domain restriction) is violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// One or more theorem side conditions fail for the supplied parameters.
    #[error("theorem conditions violated: {0}")]
    Conditions(String),

    /// Adaptive quadrature failed to reach the requested tolerance.
    #[error("quadrature did not converge: {0}")]
    Quadrature(String),

    /// Input outside the mathematical domain of the function.
    #[error("domain error: {0}")]
    Domain(String),

    /// Malformed command-line configuration detected after parsing.
    #[error("usage error: {0}")]
    Usage(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
