use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied value is malformed (out-of-range vertex, loop edge,
    /// equal endpoints where a proper pair is required, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An operation was invoked on an input that does not satisfy its
    /// structural precondition (e.g. a graph that is not 2-connected).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Two independent computations of the same quantity disagreed. This
    /// always indicates a bug and is surfaced loudly instead of being
    /// silently ignored.
    #[error("oracle disagreement: {0}")]
    OracleDisagreement(String),
}

pub type Result<T> = std::result::Result<T, Error>;
