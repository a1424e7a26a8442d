use alloc::string::String;
use core::fmt;

/// Errors raised by graph construction and the analysis operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A precondition on a numeric parameter or input set failed.
    Argument(String),
    /// A graph did not satisfy the structural requirement of the operation
    /// (for example a bitournament was expected).
    Structure(String),
    /// A query went past the range a sieve was built for.
    OutOfRange { value: u64, bound: u64 },
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn structure(msg: impl Into<String>) -> Self {
        Error::Structure(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Argument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Structure(msg) => write!(f, "unsupported graph: {msg}"),
            Error::OutOfRange { value, bound } => {
                write!(f, "{value} exceeds the sieve bound {bound}")
            }
        }
    }
}

impl core::error::Error for Error {}
