use thiserror::Error;

use crate::graded::Parity;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("space mismatch: {0}")]
    SpaceMismatch(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),
    #[error("entry ({row}, {col}) = {value} violates homogeneity for a map of parity {parity}")]
    NotHomogeneous {
        row: String,
        col: String,
        value: String,
        parity: Parity,
    },
    #[error("not a Lie superalgebra: {0}")]
    InvalidAlgebra(String),
    #[error("not a representation: {0}")]
    InvalidRepresentation(String),
    #[error("not a pre-Lie superalgebra: {0}")]
    InvalidPreLie(String),
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("map is not invertible")]
    NotInvertible,
    #[error("tensor is degenerate")]
    Degenerate,
    #[error("tensor is not homogeneous")]
    Inhomogeneous,
    #[error("not an intertwiner: {0}")]
    NotIntertwiner(String),
    #[error("not an O-operator: {0}")]
    NotAnOOperator(String),
    #[error("not a super r-matrix: {0}")]
    NotSuperRMatrix(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("search space of {size} maps exceeds the cap of {cap}")]
    SearchTooLarge { size: u128, cap: u128 },
    #[error("no object named `{0}`")]
    UnknownName(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
