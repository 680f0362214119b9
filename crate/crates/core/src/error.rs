use thiserror::Error;

/// Errors raised by the geometry and mixed-volume routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty point set")]
    EmptySet,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A face of the mother polytope met fewer daughters than its dimension.
    #[error("not semi-interlaced: face {face:?} of dimension {dim} meets only {met} daughters")]
    NotSemiInterlaced { face: Vec<usize>, dim: usize, met: usize },

    /// An internal consistency check (route comparison, integrality) failed.
    #[error("check failed: {0}")]
    CheckFailed(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn check(msg: impl Into<String>) -> Self {
        Error::CheckFailed(msg.into())
    }

    /// True when the error describes malformed input rather than a failed property.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::EmptySet | Error::DimensionMismatch { .. } | Error::InvalidInput(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
