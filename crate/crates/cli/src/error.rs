use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] ratswarm::Error),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}: malformed result file: {reason}", path.display())]
    Malformed { path: PathBuf, reason: String },
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Self::Io { path: path.into(), source }
    }

    /// 2 for bad arguments, 3 for I/O failures, 4 for unreadable input files.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) => 2,
            Self::Core(ratswarm::Error::UnknownProblem(_) | ratswarm::Error::InvalidConfig(_)) => 2,
            Self::Core(_) => 1,
            Self::Io { .. } => 3,
            Self::Malformed { .. } => 4,
        }
    }
}
