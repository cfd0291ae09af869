use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("size must be positive")]
    EmptySize,
    #[error("expected {expected} entries, got {got}")]
    Length { expected: usize, got: usize },
    #[error("dot ({row}, {col}) is outside the upper triangle of a {n}x{n} grid")]
    NotUpperTriangular { row: usize, col: usize, n: usize },
    #[error("row {0} carries two dots")]
    RepeatedRow(usize),
    #[error("column {0} carries two dots")]
    RepeatedColumn(usize),
    #[error("J({i}) = {value} violates {i} <= J(i) <= {i} + n")]
    Unbounded { i: i64, value: i64 },
    #[error("window values are not distinct modulo n")]
    NotBijective,
}
