use std::io;
use std::path::PathBuf;

use crate::config::ConfigErrors;

/// Failure of a command, mapped onto the process exit status.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid scenario:\n{0}")]
    Config(#[from] ConfigErrors),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Model(#[from] micromorph_core::Error),
    #[error("mode verification failed: {0}")]
    Verification(String),
    #[error("{}: {source}", path.display())]
    File { path: PathBuf, source: io::Error },
    #[error("output: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    /// 1 validation failure, 2 I/O failure, 3 numerical failure.
    pub fn exit_code(&self) -> i32 {
        use micromorph_core::Error as E;
        match self {
            CliError::Config(_) | CliError::Usage(_) | CliError::Verification(_) => 1,
            CliError::Model(
                E::Inadmissible(_)
                | E::UnknownVariant(_)
                | E::InvalidWavenumber(_)
                | E::InvalidGrid(_),
            ) => 1,
            CliError::Model(_) => 3,
            CliError::File { .. } | CliError::Io(_) => 2,
        }
    }
}
