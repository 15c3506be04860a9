use std::io;

use thiserror::Error;

/// Failures while reading an input corpus or table.
#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Framing { line: usize, message: String },
    #[error("line {line}: malformed JSON: {source}")]
    Json {
        line: usize,
        #[source]
        source: serde_json::Error,
    },
    #[error("line {line}: {message}")]
    Schema { line: usize, message: String },
    #[error("line {line}: duplicate record id `{id}`")]
    DuplicateId { line: usize, id: String },
    #[error("normalization table line {line}: {message}")]
    Table { line: usize, message: String },
}

impl ParseError {
    pub fn line(&self) -> usize {
        match self {
            ParseError::Framing { line, .. }
            | ParseError::Json { line, .. }
            | ParseError::Schema { line, .. }
            | ParseError::DuplicateId { line, .. }
            | ParseError::Table { line, .. } => *line,
        }
    }
}

/// Errors raised by the counting, metric and comparison routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum AnalysisError {
    #[error("unknown counting scheme `{0}`")]
    UnknownScheme(String),
    #[error("unknown credit scheme `{0}`")]
    UnknownCreditScheme(String),
    #[error("author counts must be positive, got {0}")]
    NonPositiveCount(u32),
    #[error("vectors must have equal length (got {0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("at least {needed} observations required, got {got}")]
    TooFewObservations { needed: usize, got: usize },
    #[error("correlation undefined: zero variance")]
    ZeroVariance,
    #[error("matrices must be square and of equal order")]
    ShapeMismatch,
    #[error("permutation count must be at least 1")]
    NoPermutations,
    #[error("entity sets differ: {}", .0.join(", "))]
    EntityMismatch(Vec<String>),
}

/// Top-level error for the pipeline and the command line.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{path}: {source}")]
    ParseFile {
        path: String,
        #[source]
        source: ParseError,
    },
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl Error {
    pub fn io(path: impl Into<String>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
