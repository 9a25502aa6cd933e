use thiserror::Error;

/// Errors raised by the numeric library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum FrameError {
    /// One or more vectors deviate from unit norm beyond tolerance.
    /// Each entry is `(index, norm)`.
    #[error("norm violation at {}", fmt_norms(.0))]
    NormViolation(Vec<(usize, f64)>),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionError { expected: usize, found: usize },
    #[error("matrix is not Hermitian at ({row}, {col})")]
    SymmetryViolation { row: usize, col: usize },
    #[error("non-finite value at {0}")]
    NonFinite(String),
    #[error("empty index block")]
    EmptyBlock,
    #[error("index {index} out of range for sequence of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("index {0} repeated in block")]
    DuplicateIndex(usize),
    #[error("invalid weight matrix: {0}")]
    WeightMatrix(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("brute-force oracle limited to {cap} indices, got {size}")]
    TooLargeForOracle { size: usize, cap: usize },
    #[error("local search exceeded {0} moves")]
    LocalSearchStalled(usize),
    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),
}

fn fmt_norms(v: &[(usize, f64)]) -> String {
    v.iter()
        .map(|(i, n)| format!("index {i} (norm {n:.17})"))
        .collect::<Vec<_>>()
        .join(", ")
}

pub type Result<T, E = FrameError> = std::result::Result<T, E>;
