//! Error type shared by all modules of the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParam { name: &'static str, reason: String },

    #[error(
        "insufficient padding on axis {axis}: support reaches {support:.6} of a half-extent \
         {extent:.6}; the support box must stay within 75% of every half-extent"
    )]
    InsufficientPadding {
        axis: usize,
        support: f64,
        extent: f64,
    },

    #[error(
        "weight overflow guard violated: max |W|/2 = {max_half_weight:.3e} exceeds {limit}; \
         renormalize the weight by subtracting its maximum over the support box"
    )]
    WeightOverflow { max_half_weight: f64, limit: f64 },

    #[error("non-finite value encountered in {context}")]
    NonFinite { context: String },

    #[error("denominator vanishes on the sphere at {point:?} (value {value:.3e})")]
    DenominatorVanishes { point: Vec<f64>, value: f64 },

    #[error("grid mismatch: operands live on different grids")]
    GridMismatch,

    #[error("support exceeds declared box on axis {axis}: |sample| {value:.3e} at {coord:.6}")]
    SupportViolation { axis: usize, value: f64, coord: f64 },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("malformed binary container: {0}")]
    BadContainer(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
