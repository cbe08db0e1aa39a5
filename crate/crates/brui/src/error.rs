use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    /// A core error tied to a file or a month.
    #[error("{context}: {source}")]
    Data {
        context: String,
        #[source]
        source: brui_core::Error,
    },
    #[error(transparent)]
    Model(#[from] brui_core::Error),
    #[error("{}: {message}", path.display())]
    Parse { path: PathBuf, message: String },
    #[error("config: {0}")]
    Config(String),
    #[error("missing input: {}", .0.display())]
    Missing(PathBuf),
    #[error("{0}")]
    Analysis(String),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn parse(path: impl Into<PathBuf>, message: impl ToString) -> Self {
        Error::Parse {
            path: path.into(),
            message: message.to_string(),
        }
    }

    pub fn data(context: impl ToString, source: brui_core::Error) -> Self {
        Error::Data {
            context: context.to_string(),
            source,
        }
    }

    /// Short stable tag for the machine-readable error line.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Io { .. } => "io",
            Error::Data { .. } | Error::Model(_) => "data",
            Error::Parse { .. } => "parse",
            Error::Config(_) => "config",
            Error::Missing(_) => "missing",
            Error::Analysis(_) => "analysis",
        }
    }
}
