use thiserror::Error;

/// Library-wide error type. The three categories map onto the CLI exit
/// codes: input errors (1), internal invariant violations (2) and
/// verification failures (3).
#[derive(Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("internal invariant violation: {0}")]
    Invariant(String),
    #[error("verification failure: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    /// CLI exit code for this error category.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::Resource(_) => 1,
            Error::Invariant(_) => 2,
            Error::Verification(_) => 3,
        }
    }
}
