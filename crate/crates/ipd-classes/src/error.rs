use ipd_dreams::TheoryMode;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error("dream has fused tiles and no H_T weight")]
    FusedDream,
    #[error("expected a {expected} expansion, got {found}")]
    WrongMode { expected: TheoryMode, found: TheoryMode },
    #[error("expansion carries no per-dream records")]
    MissingRecords,
    #[error("coefficients of different kinds cannot be combined")]
    CoefficientMismatch,
    #[error("expansions live in different Grassmannians or theories")]
    Incompatible,
    #[error("juggling pattern {0} is not of interval type")]
    NotInterval(String),
}
