use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("design {design} has {count} replications, at least 2 are needed for a sample variance")]
    InsufficientReplications { design: usize, count: usize },

    #[error("point {point:?} does not strictly dominate the reference point {reference:?}")]
    InvalidReference { point: Vec<f64>, reference: Vec<f64> },

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("covariance factorization failed at maximum jitter (process variance {process_variance}, length scales {length_scales:?})")]
    ModelFit {
        process_variance: f64,
        length_scales: Vec<f64>,
    },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("candidate generation failed: {0}")]
    Generation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// Whether the error comes from bad user input rather than a runtime failure.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::InvalidInput(_) | Error::Config(_) | Error::InvalidReference { .. } | Error::Json(_)
        )
    }
}
