//! Crate-wide error type.

use crate::ode::Trajectory;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The integrator exhausted its step budget before reaching the end of
    /// the requested span. The partial trajectory is kept for diagnostics.
    #[error("stiffness failure: {max_steps} steps exhausted at t = {t} s (reached {frac:.1}% of span)")]
    StiffnessFailure {
        t: f64,
        max_steps: usize,
        frac: f64,
        partial: Box<Trajectory>,
    },

    /// Newton iteration failed to converge even at the step-size floor.
    #[error("singular system: Newton did not converge at t = {t} s with step size {h} s")]
    SingularSystem { t: f64, h: f64 },

    #[error("time {t} s outside trajectory range [{t0}, {t1}] s")]
    OutOfRange { t: f64, t0: f64, t1: f64 },

    #[error("staging error: temperature not monotone non-decreasing at sample {index} (T = {temperature} K)")]
    NonMonotone { index: usize, temperature: f64 },

    #[error("insufficient data for stage {stage}: {usable} usable points (need >= 2)")]
    InsufficientData { stage: usize, usable: usize },

    #[error("stage {stage}: {message}")]
    Stage { stage: usize, message: String },

    #[error("training diverged at step {step}: {reason}")]
    DivergedTraining { step: usize, reason: String },

    #[error("config error: {0}")]
    Config(String),

    #[error("csv error: {0}")]
    Csv(String),

    #[error("radial solver failure at node {node}: {message}")]
    Radial { node: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
