//! Identification of N-stage Arrhenius thermal-runaway kinetics from
//! accelerating-rate-calorimetry (ARC) temperature traces.
//!
//! The pipeline has two halves:
//!
//! 1. **Initialization** ([`linfit`]): the trace is split into temperature
//!    stages, each stage's enthalpy is approximated from its temperature
//!    span, and the frequency factor / activation energy are obtained from
//!    a least-squares fit of `ln(dT/dt)` against `1/T`.
//! 2. **Refinement** ([`trainer`]): the initialized parameters are tuned by
//!    Adam gradient descent on the squared temperature-history error, with
//!    exact gradients obtained by integrating the forward sensitivity
//!    equations alongside the stiff ODE system ([`sensitivity`]).
//!
//! Supporting machinery: the reaction model itself ([`kinetics`]), an
//! adaptive ESDIRK integrator with dense output and event detection
//! ([`ode`]), simulation drivers for ARC / heat-wait-seek / oven / 1-D
//! radial scenarios ([`simkit`]), and file I/O plus reporting ([`io`]).
//!
//! Reference parameter sets for a Molicel 21700 P45B cell live in
//! [`presets`]; they double as test fixtures and as shipped example
//! configurations for the CLI.

pub mod error;
pub mod kinetics;
pub mod linfit;
pub mod ode;
pub mod params;
pub mod presets;
pub mod sensitivity;
pub mod simkit;
pub mod trainer;

pub mod io;

pub use error::{Error, Result};
pub use kinetics::{
    AmbientModel, CellProperties, Direction, ReactionSystem, StageKinetics, ThermalState,
};
pub use linfit::{ArcTrace, LinearFitResult, Provenance, StagePartition};
pub use ode::{EventSpec, Tolerances, Trajectory};
pub use params::ParamVector;
pub use sensitivity::LossReport;
pub use trainer::{TrainConfig, TrainHistory};
