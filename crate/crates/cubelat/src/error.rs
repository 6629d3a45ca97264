use thiserror::Error;

/// Malformed text input; `line` is 1-based (0 when the problem is not tied to a line).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(line: usize, msg: impl Into<String>) -> ParseError {
        ParseError { line, msg: msg.into() }
    }
}

#[derive(Debug, Error)]
pub enum MeshError {
    #[error("patch is not a valid surface")]
    Invalid,
    #[error(transparent)]
    Parse(#[from] ParseError),
}
