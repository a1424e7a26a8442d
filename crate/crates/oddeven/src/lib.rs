//! File formats, reports and the command line around `oddeven-core`.

pub mod appendix;
pub mod cli;
pub mod export;
pub mod interchange;
pub mod scan;

pub use oddeven_core;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 1;
    /// A checked property failed (a counterexample or a flagged row).
    pub const VIOLATION: i32 = 2;
    pub const IO: i32 = 3;
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] oddeven_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    /// Unreadable input document.
    #[error("{0}")]
    Input(String),
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) | Error::Core(_) => exit::USAGE,
            Error::Io { .. } | Error::Input(_) => exit::IO,
        }
    }
}
