use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum LabError {
    /// The scenario document does not match the schema.
    #[error("schema error at `{path}`: {message}")]
    Schema { path: String, message: String },
    #[error("{context}: {source}")]
    Physics {
        context: String,
        #[source]
        source: polariton_core::Error,
    },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("unknown figure `{id}`; valid ids: {valid}")]
    UnknownFigure { id: String, valid: String },
    /// An oracle comparison exceeded its tolerance.
    #[error("oracle check failed: max deviation {deviation:e} exceeds tolerance {tolerance:e}")]
    OracleMismatch { deviation: f64, tolerance: f64 },
}

impl LabError {
    pub fn exit_code(&self) -> i32 {
        match self {
            LabError::Schema { .. } | LabError::UnknownFigure { .. } => 2,
            LabError::Physics { .. } | LabError::OracleMismatch { .. } => 3,
            LabError::Io { .. } => 4,
        }
    }

    pub(crate) fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        LabError::Schema { path: path.into(), message: message.into() }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        LabError::Io { path: path.into(), source }
    }
}

pub type Result<T> = std::result::Result<T, LabError>;

/// Attaches scenario context to a physics error.
pub(crate) trait Context<T> {
    fn context(self, f: impl FnOnce() -> String) -> Result<T>;
}

impl<T> Context<T> for polariton_core::Result<T> {
    fn context(self, f: impl FnOnce() -> String) -> Result<T> {
        self.map_err(|source| LabError::Physics { context: f(), source })
    }
}
