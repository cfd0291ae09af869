use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShiftError {
    #[error("shift {i}->{j} is not valid on [{n}]")]
    BadOp { i: usize, j: usize, n: usize },
    #[error("subset {0:?} is not a subset of [n] of the right size")]
    BadSubset(Vec<usize>),
    #[error("shift {i}->{j} is unsafe: essential box ({bi},{bj}) is in the way")]
    Unsafe { i: usize, j: usize, bi: usize, bj: usize },
    #[error("pattern {0} is not of interval type")]
    NotInterval(String),
    #[error("invalid pattern: {0}")]
    Invalid(String),
    #[error(transparent)]
    Class(#[from] ipd_classes::ClassError),
}
