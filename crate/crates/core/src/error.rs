use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("unknown built-in algebra `{0}`")]
    UnknownAlgebra(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("table is not a group: {0}")]
    NotAGroup(String),

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("{what} needs {dim} basis elements in degree {degree}, above the bound of {bound}")]
    ResourceBound { what: String, degree: usize, dim: u128, bound: usize },

    #[error("degree {degree} out of range (valid: {valid})")]
    DegreeOutOfRange { degree: usize, valid: String },

    #[error("algebra `{0}` is not commutative")]
    NotCommutative(String),

    #[error("algebra `{0}` carries no group structure")]
    NotAGroupAlgebra(String),

    #[error("permutation is not a single cycle: {0}")]
    NotCyclic(String),

    #[error("cutoff mismatch: {0}")]
    CutoffMismatch(String),

    #[error("mapping cone needs a chain map of shift 0, got shift {0}")]
    ShiftNonzero(i64),

    #[error("image of representative {index} in degree {degree} is not a cycle")]
    NotACycle { degree: usize, index: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("matrix size {size} too small: need at least {needed}")]
    MatrixSizeTooSmall { size: usize, needed: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
