use thiserror::Error;

/// Errors from reading user-supplied input. All of them map to exit code 2.
#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot parse {input:?}: {reason}")]
    Syntax { input: String, reason: String },
    #[error("term {index} (`{term}`): {reason}")]
    Term { index: usize, term: String, reason: String },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] verlinde_core::Error),
    #[error("{0}")]
    Usage(String),
}
