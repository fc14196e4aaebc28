use std::path::PathBuf;

use tripartite_core::families::FamilyError;
use tripartite_core::gsd::GsdError;
use tripartite_core::measures::MeasureError;
use tripartite_core::states::StateError;

/// Exit status for a successful run.
pub const EXIT_OK: i32 = 0;
/// Exit status for failures other than the two below.
pub const EXIT_FAILURE: i32 = 1;
/// The state file could not be read, parsed or validated.
pub const EXIT_INVALID_STATE: i32 = 2;
/// A decision sat within a factor 10 of its threshold. The report is still printed.
pub const EXIT_AMBIGUOUS: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{path}: malformed state file: {source}")]
    Parse { path: PathBuf, source: serde_json::Error },
    #[error("{path}: {detail}")]
    Shape { path: PathBuf, detail: String },
    #[error("{path}: invalid state: {source}")]
    InvalidState { path: PathBuf, source: StateError },
    #[error("{0} requires a pure state")]
    NeedsPure(&'static str),
    #[error(transparent)]
    Measure(#[from] MeasureError),
    #[error(transparent)]
    Gsd(#[from] GsdError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("--count must be at least 1")]
    EmptyBatch,
    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),
    #[error("json output: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Read { .. } | CliError::Parse { .. } | CliError::Shape { .. } | CliError::InvalidState { .. } => {
                EXIT_INVALID_STATE
            }
            _ => EXIT_FAILURE,
        }
    }
}
