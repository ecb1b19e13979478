//! Command-line front end for falsilab: class files, flags, reports and CSV traces.

pub mod args;
pub mod classfile;
pub mod commands;
pub mod report;

/// Failure of one invocation.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Unreadable or malformed input: class files and flag values. Exit code 2.
    #[error("{0}")]
    Input(String),
    /// A library precondition failed on well-formed input. Exit code 1.
    #[error(transparent)]
    Domain(#[from] falsilab::Error),
    /// The report or CSV could not be written. Exit code 1.
    #[error("{0}")]
    Output(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Domain(_) | CliError::Output(_) => 1,
        }
    }
}
