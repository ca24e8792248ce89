use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("u = {u} is outside the domain u > 0")]
    DomainError { u: f64 },

    #[error("operation not supported for this field case: {0}")]
    UnsupportedCase(String),

    #[error("no bound states: {0}")]
    NoBoundStates(String),

    #[error("closed-form solution unavailable: {0}")]
    AnalyticUnavailable(String),

    #[error("Jacobi recurrence degenerates at degree {n} for a = {a}, b = {b}")]
    DegenerateParameters { n: usize, a: f64, b: f64 },

    #[error("level index {n} out of range ({reason})")]
    IndexError { n: usize, reason: String },

    #[error("potential is not finite at grid index {index} (u = {u})")]
    SingularPotential { index: usize, u: f64 },

    #[error("inverse iteration failed to converge for eigenvalue #{index}")]
    EigenvectorFailure { index: usize },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
