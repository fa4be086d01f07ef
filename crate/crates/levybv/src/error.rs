use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid measure: {0}")]
    InvalidMeasure(String),

    #[error("invalid kernel: {0}")]
    InvalidKernel(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("integral existence: {0}")]
    Existence(String),

    #[error("numerical failure: {reason}")]
    Numerical {
        reason: String,
        /// Best available estimate when the computation did not converge.
        partial: Option<f64>,
    },

    #[error("shift {requested} is not a grid multiple; nearest admissible shift is {nearest}")]
    NonGridShift { requested: f64, nearest: f64 },

    #[error("configuration: {0}")]
    Config(String),
}

impl Error {
    pub fn numerical(reason: impl Into<String>) -> Self {
        Error::Numerical {
            reason: reason.into(),
            partial: None,
        }
    }

    pub fn numerical_with(reason: impl Into<String>, partial: f64) -> Self {
        Error::Numerical {
            reason: reason.into(),
            partial: Some(partial),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
