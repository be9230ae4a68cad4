use gsf_core::ErrorClass;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error("bad set key `{0}`, expected a form like {{1,3}}")]
    SetKey(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] gsf_core::Error),
}

impl CliError {
    /// 2 for unreadable input, 3 for invalid objects, 4 for unmet preconditions.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Json { .. } | CliError::SetKey(_) => 2,
            CliError::Usage(_) => 4,
            CliError::Core(e) => match e.class() {
                ErrorClass::Parse => 2,
                ErrorClass::Validation => 3,
                ErrorClass::Precondition => 4,
            },
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
