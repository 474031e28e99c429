use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("bad scalar `{text}`: {message}")]
    Scalar { text: String, message: String },

    #[error("missing value for parameter `{0}`")]
    MissingParameter(String),

    #[error("cannot normalize the zero polynomial")]
    ZeroPolynomial,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("basis mismatch: {0}")]
    BasisMismatch(String),

    #[error("{operation} needs a table without parameters (found {params}); use constraint extraction for parametric tables")]
    Parametric {
        operation: &'static str,
        params: String,
    },

    #[error("subspace is not an ideal: [{left},{right}] leaves it")]
    NotAnIdeal { left: String, right: String },

    #[error("not a Lie algebra: {0}")]
    NotLie(String),

    #[error("invalid module action: {0}")]
    InvalidModule(String),

    #[error("admissibility condition violated: {0}")]
    Admissibility(String),

    #[error("basis change is not invertible over the rationals: determinant is {0}")]
    SingularChange(String),
}
