use thiserror::Error;

/// Everything here is an input error (exit code 2).
#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] koszul::Error),
}

impl From<koszul::PolyError> for CliError {
    fn from(e: koszul::PolyError) -> Self {
        CliError::Library(e.into())
    }
}
