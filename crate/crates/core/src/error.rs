use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the density, sampling, estimation and harness layers.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A quadrature did not reach the requested tolerance.
    #[error("quadrature did not converge: estimated error {estimate:e} after {subdivisions} subdivisions")]
    Accuracy { estimate: f64, subdivisions: usize },

    /// The optimizer ran out of iterations. `best` holds the best point found.
    #[error("optimizer did not converge in {iterations} iterations (best alpha={best_alpha}, sigma={best_sigma})")]
    Convergence {
        iterations: usize,
        best_alpha: f64,
        best_sigma: f64,
    },

    /// An estimator could not produce a value from the data.
    #[error("estimation failed: {0}")]
    Estimation(String),

    /// A line of an input file could not be parsed.
    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Process exit code for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) | Error::Parse { .. } | Error::Estimation(_) => 2,
            Error::Accuracy { .. } | Error::Convergence { .. } => 3,
            Error::Io(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
