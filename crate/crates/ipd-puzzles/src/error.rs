use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PuzzleError {
    #[error("bad boundary: {0}")]
    BadBoundary(String),
    #[error("invalid puzzle: {0}")]
    BadPuzzle(String),
    #[error("dream is not a one-letter cohomological dream: {0}")]
    NotOneLetter(String),
}
