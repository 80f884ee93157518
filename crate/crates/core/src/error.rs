use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric: asymmetry {max:.3e} exceeds {tol:.3e}")]
    NotSymmetric { max: f64, tol: f64 },

    #[error("matrix is not Hermitian: defect {max:.3e} exceeds {tol:.3e}")]
    NotHermitian { max: f64, tol: f64 },

    #[error("eigensolver did not converge within {sweeps} sweeps (off-diagonal norm {off:.3e})")]
    NoConvergence { sweeps: usize, off: f64 },

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("local dimension must be at least 2 (got {0})")]
    LocalDim(usize),

    #[error("invalid party subset: {0}")]
    Subset(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("state invariant violated ({invariant}): {detail}")]
    StateInvariant {
        invariant: &'static str,
        detail: String,
    },

    #[error("unknown state name: {0}")]
    UnknownState(String),

    #[error("state file: {0}")]
    StateFile(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
