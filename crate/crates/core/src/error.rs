use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not square ({rows} rows, {len} entries)")]
    NotSquare { rows: usize, len: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("not Hermitian: deviation {deviation:e} exceeds tolerance {tolerance:e}")]
    NotHermitian { deviation: f64, tolerance: f64 },
    #[error("non-finite matrix entry")]
    NonFinite,
    #[error("singular matrix (pivot {pivot:e} at column {column})")]
    Singular { column: usize, pivot: f64 },
    #[error("eigensolver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("not coercive: smallest eigenvalue of the Hermitian part is {0:e}")]
    NotCoercive(f64),
    #[error("not elliptic: Hermitian part of the coefficient has eigenvalue {value:e} {at}")]
    NotElliptic { at: String, value: f64 },
    #[error("lambda in spectrum: A + lambda I is singular")]
    InSpectrum,
    #[error("lambda not admissible: -lambda lies in the sector")]
    NotAdmissible,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
