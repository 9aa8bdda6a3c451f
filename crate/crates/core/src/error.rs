use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix dimension must be at least 1")]
    EmptyMatrix,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("negative entry {value} at ({row}, {col})")]
    NegativeEntry { row: usize, col: usize, value: f64 },

    #[error("non-finite entry at ({row}, {col})")]
    NonFiniteEntry { row: usize, col: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{name} = {value} is outside its admissible range {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("operation requires an irreducible sign pattern")]
    Reducible,

    #[error("spectral radius is zero")]
    ZeroSpectralRadius,

    #[error("sign pattern is all zero")]
    ZeroPattern,

    #[error(
        "power iteration did not converge after {iterations} iterations \
         (radius bracket [{lower}, {upper}])"
    )]
    NoConvergence {
        iterations: usize,
        lower: f64,
        upper: f64,
    },

    #[error("matrix is two-fold irreducible; no equality witness exists")]
    TwoFold,

    #[error("family {family} requires {requirement}")]
    InvalidFamily {
        family: &'static str,
        requirement: String,
    },

    #[error("n = {n} is too large for exhaustive enumeration (max {max}); supply a sample budget")]
    TooLarge { n: usize, max: usize },
}
