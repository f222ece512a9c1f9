use thiserror::Error;

use crate::gyro::ModelKind;

/// Errors raised by model construction, point validation and the verifiers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GgvError {
    /// A point or norm value lies outside the set the operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("point belongs to model `{found}` but was passed to model `{expected}`")]
    ModelMismatch {
        expected: ModelKind,
        found: ModelKind,
    },

    #[error("invalid model configuration: {0}")]
    Config(String),

    /// A verifier's hypothesis does not hold for its input (e.g. the map is not gyrometric preserving).
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = GgvError> = std::result::Result<T, E>;
