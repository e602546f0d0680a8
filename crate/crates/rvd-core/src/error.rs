//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument failed a precondition (non-finite component, bad range).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A matrix failed the rotation-matrix orthonormality or determinant check.
    #[error("invalid rotation matrix: {0}")]
    InvalidRotation(String),

    /// A matrix has non-positive determinant and cannot be projected onto SO(3).
    #[error("degenerate matrix: {0}")]
    DegenerateMatrix(String),

    /// Orbit conversion requested for a non-elliptical orbit.
    #[error("unsupported orbit: {0}")]
    UnsupportedOrbit(String),

    /// A point lies outside the model's domain (for example inside the Earth).
    #[error("domain error: {0}")]
    Domain(String),

    /// Inertia matrix is singular or not symmetric positive-definite.
    #[error("invalid inertia: {0}")]
    InvalidInertia(String),

    /// A direction was requested for a zero vector.
    #[error("undefined direction: {0}")]
    UndefinedDirection(String),

    /// Integration produced a non-finite derivative at time `t`.
    #[error("integration failure at t = {t} s: {reason}")]
    IntegrationFailure { t: f64, reason: String },

    /// The optimizer exhausted its iteration budget without a feasible plan.
    /// Carries the best infeasible plan found and its worst constraint margins.
    #[error("no feasible plan after {iterations} iterations; worst margin {worst_margin:.6e} ({worst_constraint})")]
    Infeasible {
        iterations: usize,
        worst_constraint: String,
        worst_margin: f64,
        best_plan: Box<crate::guidance::ImpulsePlan>,
    },

    /// A mission phase exceeded its configured time ceiling.
    #[error("mission failure: {0}")]
    MissionFailure(String),

    /// Scenario or log file failed schema validation. Names the offending key.
    #[error("schema error: {0}")]
    Schema(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
