use losanitsch_core::Error as CoreError;
use thiserror::Error;

/// All checks passed or the command produced its output.
pub const EXIT_SUCCESS: i32 = 0;

/// A verification failed or a comparison found a mismatch.
pub const EXIT_FAILURE: i32 = 1;

/// Bad arguments, unreadable input or an unreachable source.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("line {line}: malformed b-file line {text:?}")]
    MalformedLine { line: usize, text: String },

    #[error("line {line}: index {found} does not follow {previous}")]
    NonConsecutive { line: usize, previous: i64, found: i64 },

    #[error("invalid sequence id {0:?}, expected A followed by six digits")]
    InvalidId(String),

    #[error("{id}: offline and no cached b-file in {dir}")]
    NotCached { id: String, dir: String },

    #[error("{id}: fetch failed ({reason}) and no cached b-file")]
    Fetch { id: String, reason: String },

    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn io(path: impl AsRef<std::path::Path>, source: std::io::Error) -> Self {
        Self::Io { path: path.as_ref().display().to_string(), source }
    }

    /// Every error is a usage-level failure; mismatches are reported as
    /// ordinary output with exit code 1, not as errors.
    pub fn exit_code(&self) -> i32 {
        EXIT_USAGE
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
