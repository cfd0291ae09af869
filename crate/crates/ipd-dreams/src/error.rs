use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DreamError {
    #[error("not an edge label: {0:?}")]
    BadLabel(String),
    #[error("not a vertical word: {0:?}")]
    BadWord(String),
    #[error("unknown theory {0:?} (expected H, HT, K or KT)")]
    BadMode(String),
    #[error("malformed slice: {0}")]
    BadSlice(String),
    #[error("slice is not viable: {0}")]
    NotViable(String),
    #[error("invalid pipe dream: {0}")]
    BadDream(String),
    #[error("brute force limited to n <= {max}, got n = {n}")]
    TooLarge { n: usize, max: usize },
}
