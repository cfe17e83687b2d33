use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or mismatched input (bad degree, bad index, unparsable text).
    #[error("invalid input: {0}")]
    Input(String),
    /// Data that is well formed but does not describe a surface isogenous to a higher product.
    #[error("validation failed: {0}")]
    Validation(String),
    /// Numerical data that cannot arise from an actual covering.
    #[error("inconsistent data: {0}")]
    Inconsistency(String),
    /// A configured cap was exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    /// An internal invariant was violated; indicates a bug upstream.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) => 2,
            Error::Validation(_) | Error::Inconsistency(_) => 3,
            Error::Resource(_) => 4,
            Error::Internal(_) => 1,
        }
    }
}
