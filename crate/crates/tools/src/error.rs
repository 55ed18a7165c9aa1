use crate::format::FileError;

/// Failure of one command, carrying its exit status.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Missing or malformed arguments or parameter file.
    #[error("{0}")]
    Usage(String),
    /// Unreadable or malformed truth-table file.
    #[error(transparent)]
    File(#[from] FileError),
    /// Error from the library, reported verbatim.
    #[error("{0}")]
    Library(#[from] bentkit::Error),
    /// A fast path disagreed with its oracle or a claimed property failed.
    #[error("{0}")]
    Divergence(String),
    #[error("{0}")]
    Output(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::File(_) => 2,
            CliError::Library(bentkit::Error::OracleCap { .. }) => 4,
            CliError::Library(_) => 3,
            CliError::Divergence(_) | CliError::Output(_) => 1,
        }
    }
}
