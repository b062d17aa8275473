use thiserror::Error;

use crate::criterion::Regime;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("validation failed ({invariant}): {detail}")]
    Validation { invariant: &'static str, detail: String },

    #[error("classes live over different base surfaces")]
    BaseMismatch,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("operation requires a Boundary or Generic regime, found {regime}")]
    WrongRegime { regime: Regime },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn validation(invariant: &'static str, detail: impl Into<String>) -> Self {
        Error::Validation { invariant, detail: detail.into() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
