use std::fmt;

use crate::document::ResultDocument;

/// Failures of one invocation, each with its process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Malformed scene or flags.
    Input(String),
    /// The computation itself failed.
    Compute(minksimplex::Error),
    /// Some equivalence report disagrees with itself. The document is still
    /// written; it lists the offending fingerprints.
    Disagreement {
        fingerprints: Vec<String>,
        document: Box<ResultDocument>,
    },
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Compute(_) | CliError::Io(_) => 2,
            CliError::Disagreement { .. } => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "invalid input: {m}"),
            CliError::Compute(e) => write!(f, "computation failed: {e}"),
            CliError::Disagreement { fingerprints, .. } => {
                write!(f, "verification disagreement on {} instance(s):", fingerprints.len())?;
                for fp in fingerprints {
                    write!(f, " {fp}")?;
                }
                Ok(())
            }
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<minksimplex::Error> for CliError {
    fn from(e: minksimplex::Error) -> Self {
        CliError::Compute(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
