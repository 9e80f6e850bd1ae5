//! The thermal-runaway ODE system: per-stage Arrhenius rates, heat release,
//! and the lumped energy balance with optional dissipation.
//!
//! State convention throughout the crate: a system with N stages has state
//! vector `[c_1, ..., c_N, T]` — normalized progress variables first, cell
//! temperature (kelvin) last.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ode::OdeSystem;

/// Boltzmann constant, J/K. Activation energies are stored per-molecule in
/// joules and always paired with this constant.
pub const BOLTZMANN: f64 = 1.380649e-23;

/// Stefan-Boltzmann constant, W/(m²·K⁴).
pub const STEFAN_BOLTZMANN: f64 = 5.670374419e-8;

/// °C = K − CELSIUS_OFFSET. Celsius appears only at I/O boundaries.
pub const CELSIUS_OFFSET: f64 = 273.15;

pub fn celsius_to_kelvin(c: f64) -> f64 {
    c + CELSIUS_OFFSET
}

pub fn kelvin_to_celsius(k: f64) -> f64 {
    k - CELSIUS_OFFSET
}

/// Lumped physical properties of the cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellProperties {
    /// kg
    pub mass: f64,
    /// J/(kg·K)
    pub specific_heat: f64,
    /// m² (lateral surface area used for convection and radiation)
    pub surface_area: f64,
    /// dimensionless, in [0, 1]
    pub emissivity: f64,
    /// W/(m²·K); not tabulated for the reference cell — user-supplied,
    /// default 10.
    pub conv_coeff: f64,
}

impl CellProperties {
    /// m·c_p in J/K.
    pub fn heat_capacity(&self) -> f64 {
        self.mass * self.specific_heat
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.mass > 0.0 && self.mass.is_finite()) {
            return Err(Error::invalid(format!("cell mass must be > 0, got {}", self.mass)));
        }
        if !(self.specific_heat > 0.0 && self.specific_heat.is_finite()) {
            return Err(Error::invalid(format!(
                "specific heat must be > 0, got {}",
                self.specific_heat
            )));
        }
        if !(self.surface_area > 0.0 && self.surface_area.is_finite()) {
            return Err(Error::invalid(format!(
                "surface area must be > 0, got {}",
                self.surface_area
            )));
        }
        if !(0.0..=1.0).contains(&self.emissivity) {
            return Err(Error::invalid(format!(
                "emissivity must be in [0, 1], got {}",
                self.emissivity
            )));
        }
        if !(self.conv_coeff >= 0.0 && self.conv_coeff.is_finite()) {
            return Err(Error::invalid(format!(
                "convective coefficient must be >= 0, got {}",
                self.conv_coeff
            )));
        }
        Ok(())
    }
}

/// Direction the progress variable moves in.
///
/// `Consuming` stages (nth-order, m = 0) decay from c0 toward 0;
/// `Converting` stages (autocatalytic, m > 0) grow from c0 toward 1.
/// Either way the rate is nonnegative and total stage heat is bounded by
/// `h · |c0 − c_final|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Consuming,
    Converting,
}

impl Direction {
    /// Sign of dc/dt.
    pub fn sign(self) -> f64 {
        match self {
            Direction::Consuming => -1.0,
            Direction::Converting => 1.0,
        }
    }

    /// Progress value at complete conversion.
    pub fn completed_value(self) -> f64 {
        match self {
            Direction::Consuming => 0.0,
            Direction::Converting => 1.0,
        }
    }
}

/// One reaction stage's kinetic and heat parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StageKinetics {
    /// Frequency factor A, 1/s.
    pub freq_factor: f64,
    /// Activation energy Ea, J per molecule (paired with [`BOLTZMANN`]).
    pub activation_energy: f64,
    /// Total reaction enthalpy h, J (released over complete conversion).
    pub enthalpy: f64,
    /// Autocatalytic order m (exponent of 1−c), >= 0.
    pub order_m: f64,
    /// Reaction order n (exponent of c), >= 0.
    pub order_n: f64,
    /// Initial progress value, in [0, 1].
    pub c0: f64,
    pub direction: Direction,
}

impl StageKinetics {
    /// Activation temperature Ea/k_b in K, for readable reporting.
    pub fn activation_temperature(&self) -> f64 {
        self.activation_energy / BOLTZMANN
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.freq_factor > 0.0 && self.freq_factor.is_finite()) {
            return Err(Error::invalid(format!(
                "frequency factor must be > 0, got {}",
                self.freq_factor
            )));
        }
        if !(self.activation_energy > 0.0 && self.activation_energy.is_finite()) {
            return Err(Error::invalid(format!(
                "activation energy must be > 0, got {}",
                self.activation_energy
            )));
        }
        if !(self.enthalpy >= 0.0 && self.enthalpy.is_finite()) {
            return Err(Error::invalid(format!("enthalpy must be >= 0, got {}", self.enthalpy)));
        }
        if !(self.order_m >= 0.0 && self.order_m.is_finite()) {
            return Err(Error::invalid(format!("order m must be >= 0, got {}", self.order_m)));
        }
        if !(self.order_n >= 0.0 && self.order_n.is_finite()) {
            return Err(Error::invalid(format!("order n must be >= 0, got {}", self.order_n)));
        }
        if !(0.0..=1.0).contains(&self.c0) {
            return Err(Error::invalid(format!("c0 must be in [0, 1], got {}", self.c0)));
        }
        let expected = if self.order_m > 0.0 { Direction::Converting } else { Direction::Consuming };
        if self.direction != expected {
            return Err(Error::invalid(format!(
                "direction {:?} inconsistent with m = {} (expected {:?})",
                self.direction, self.order_m, expected
            )));
        }
        Ok(())
    }
}

/// The full N-stage model: reaction stages plus cell properties.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReactionSystem {
    pub stages: Vec<StageKinetics>,
    pub cell: CellProperties,
}

impl ReactionSystem {
    pub fn n_stages(&self) -> usize {
        self.stages.len()
    }

    /// State dimension: N concentrations + temperature.
    pub fn dim(&self) -> usize {
        self.stages.len() + 1
    }

    /// Initial state `[c0_1, ..., c0_N, T0]`.
    pub fn initial_state(&self, temperature: f64) -> ThermalState {
        ThermalState {
            concentrations: self.stages.iter().map(|s| s.c0).collect(),
            temperature,
        }
    }

    /// Total heat released by complete conversion of every stage, J.
    pub fn total_enthalpy(&self) -> f64 {
        self.stages
            .iter()
            .map(|s| s.enthalpy * (s.c0 - s.direction.completed_value()).abs())
            .sum()
    }

    pub fn validate(&self) -> Result<()> {
        if self.stages.is_empty() {
            return Err(Error::invalid("reaction system needs at least one stage"));
        }
        self.cell.validate()?;
        for (i, s) in self.stages.iter().enumerate() {
            s.validate().map_err(|e| Error::Stage { stage: i + 1, message: e.to_string() })?;
        }
        Ok(())
    }
}

/// Progress variables plus temperature.
#[derive(Debug, Clone, PartialEq)]
pub struct ThermalState {
    /// Dimensionless, clamped to [0, 1] on evaluation.
    pub concentrations: Vec<f64>,
    /// K, > 0.
    pub temperature: f64,
}

impl ThermalState {
    pub fn from_slice(y: &[f64]) -> Self {
        let (t, c) = y.split_last().expect("state must be non-empty");
        ThermalState { concentrations: c.to_vec(), temperature: *t }
    }

    pub fn to_vec(&self) -> Vec<f64> {
        let mut v = self.concentrations.clone();
        v.push(self.temperature);
        v
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.temperature > 0.0 && self.temperature.is_finite()) {
            return Err(Error::invalid(format!(
                "temperature must be finite and > 0, got {}",
                self.temperature
            )));
        }
        for (i, c) in self.concentrations.iter().enumerate() {
            if !c.is_finite() {
                return Err(Error::invalid(format!("concentration {i} is not finite")));
            }
        }
        Ok(())
    }
}

/// Thermal environment of the cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum AmbientModel {
    /// No dissipative flux (ARC exotherm mode).
    Adiabatic,
    /// Constant far-field temperature, K.
    Oven(f64),
    /// Far-field temperature as a piecewise-linear function of time.
    TracedAmbient(AmbientTrace),
}

/// Piecewise-linear time → K lookup, clamped at both ends.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AmbientTrace {
    pub times: Vec<f64>,
    pub temperatures: Vec<f64>,
}

impl AmbientTrace {
    pub fn at(&self, t: f64) -> f64 {
        match self.times.binary_search_by(|x| x.partial_cmp(&t).unwrap()) {
            Ok(i) => self.temperatures[i],
            Err(0) => self.temperatures[0],
            Err(i) if i >= self.times.len() => *self.temperatures.last().unwrap(),
            Err(i) => {
                let (t0, t1) = (self.times[i - 1], self.times[i]);
                let w = (t - t0) / (t1 - t0);
                self.temperatures[i - 1] * (1.0 - w) + self.temperatures[i] * w
            }
        }
    }
}

impl AmbientModel {
    /// Far-field temperature at time `t`, or `None` when adiabatic.
    pub fn far_field(&self, t: f64) -> Option<f64> {
        match self {
            AmbientModel::Adiabatic => None,
            AmbientModel::Oven(t_inf) => Some(*t_inf),
            AmbientModel::TracedAmbient(trace) => Some(trace.at(t)),
        }
    }
}

/// Concentration factor f(c) = c^n (1−c)^m with the convention 0^0 = 1,
/// evaluated on c clamped to [0, 1].
fn concentration_factor(c: f64, m: f64, n: f64) -> f64 {
    let c = c.clamp(0.0, 1.0);
    let pn = if n == 0.0 { 1.0 } else { c.powf(n) };
    let pm = if m == 0.0 { 1.0 } else { (1.0 - c).powf(m) };
    pn * pm
}

/// Reaction rate r = f(c) · A · exp(−Ea/(k_b·T)), 1/s. Always >= 0.
pub fn stage_rate(stage: &StageKinetics, c: f64, temperature: f64) -> Result<f64> {
    if !c.is_finite() || !temperature.is_finite() || temperature <= 0.0 {
        return Err(Error::invalid(format!(
            "stage_rate needs finite c and T > 0, got c = {c}, T = {temperature}"
        )));
    }
    Ok(stage_rate_unchecked(stage, c, temperature))
}

#[inline]
pub(crate) fn stage_rate_unchecked(stage: &StageKinetics, c: f64, temperature: f64) -> f64 {
    concentration_factor(c, stage.order_m, stage.order_n)
        * stage.freq_factor
        * (-stage.activation_energy / (BOLTZMANN * temperature)).exp()
}

/// Heat release rate Q̇ = h · r, W. Heat is always released, never absorbed.
pub fn stage_heat_rate(stage: &StageKinetics, rate: f64) -> Result<f64> {
    if !rate.is_finite() || rate < 0.0 {
        return Err(Error::invalid(format!("rate must be finite and >= 0, got {rate}")));
    }
    Ok(stage.enthalpy * rate)
}

/// Dissipative flux to the far field: convection plus radiation, W.
/// Negative when the cell is hotter than the surroundings.
pub fn dissipative_flux(cell: &CellProperties, temperature: f64, t_inf: f64) -> Result<f64> {
    if !temperature.is_finite() || !t_inf.is_finite() || temperature <= 0.0 || t_inf <= 0.0 {
        return Err(Error::invalid(format!(
            "dissipative_flux needs T > 0 and T_inf > 0, got T = {temperature}, T_inf = {t_inf}"
        )));
    }
    Ok(dissipative_flux_unchecked(cell, temperature, t_inf))
}

#[inline]
pub(crate) fn dissipative_flux_unchecked(cell: &CellProperties, t: f64, t_inf: f64) -> f64 {
    cell.surface_area
        * (cell.conv_coeff * (t_inf - t)
            + cell.emissivity * STEFAN_BOLTZMANN * (t_inf.powi(4) - t.powi(4)))
}

/// Full right-hand side: dcᵢ/dt = sᵢ·rᵢ and
/// dT/dt = (Σ hᵢ·rᵢ + Q̇_diss)/(m·c_p).
pub fn system_rhs(
    system: &ReactionSystem,
    state: &ThermalState,
    ambient: &AmbientModel,
    t: f64,
) -> Result<ThermalState> {
    state.validate()?;
    if state.concentrations.len() != system.n_stages() {
        return Err(Error::invalid(format!(
            "state has {} concentrations for {} stages",
            state.concentrations.len(),
            system.n_stages()
        )));
    }
    let y = state.to_vec();
    let mut dy = vec![0.0; y.len()];
    let ode = ThermalOde { system, ambient: ambient.clone() };
    ode.rhs(t, &y, &mut dy);
    if dy.iter().any(|v| !v.is_finite()) {
        return Err(Error::invalid("system_rhs produced a non-finite derivative"));
    }
    Ok(ThermalState::from_slice(&dy))
}

/// Per-stage rate and its partial derivatives, shared by the RHS, the
/// integrator Jacobian, and the forward sensitivity equations.
#[derive(Debug, Clone, Copy)]
pub(crate) struct StageEval {
    pub rate: f64,
    /// ∂r/∂c (zero outside the clamp region).
    pub dr_dc: f64,
    /// ∂r/∂T.
    pub dr_dt: f64,
    /// ∂r/∂m = r·ln(1−c), with the 0·(−∞) limit taken as 0.
    pub dr_dm: f64,
    /// ∂r/∂n = r·ln(c), same limit convention.
    pub dr_dn: f64,
    /// ∂r/∂ln Ea = −r·Ea/(k_b·T).
    pub dr_dlog_ea: f64,
}

pub(crate) fn eval_stage(stage: &StageKinetics, c: f64, temperature: f64) -> StageEval {
    let clamped = c.clamp(0.0, 1.0);
    let rate = stage_rate_unchecked(stage, clamped, temperature);
    let arr = stage.freq_factor * (-stage.activation_energy / (BOLTZMANN * temperature)).exp();
    let (m, n) = (stage.order_m, stage.order_n);

    // f'(c) = n·c^(n−1)(1−c)^m − m·c^n(1−c)^(m−1). The floor keeps the
    // fractional-exponent singularities at the endpoints finite; they are
    // only reachable when the matching factor has already driven r to 0.
    let dfdc = if c < 0.0 || c > 1.0 {
        0.0
    } else {
        let cf = clamped.max(1e-12);
        let of = (1.0 - clamped).max(1e-12);
        let term_n = if n == 0.0 { 0.0 } else { n * cf.powf(n - 1.0) * of.powf(m) };
        let term_m = if m == 0.0 { 0.0 } else { m * cf.powf(n) * of.powf(m - 1.0) };
        term_n - term_m
    };

    let ea_over_kt = stage.activation_energy / (BOLTZMANN * temperature);
    let dr_dm = if rate == 0.0 { 0.0 } else { rate * (1.0 - clamped).max(1e-300).ln() };
    let dr_dn = if rate == 0.0 { 0.0 } else { rate * clamped.max(1e-300).ln() };

    StageEval {
        rate,
        dr_dc: arr * dfdc,
        dr_dt: rate * ea_over_kt / temperature,
        dr_dm,
        dr_dn,
        dr_dlog_ea: -rate * ea_over_kt,
    }
}

/// The reaction system packaged for the integrator.
#[derive(Debug, Clone)]
pub struct ThermalOde<'a> {
    pub system: &'a ReactionSystem,
    pub ambient: AmbientModel,
}

impl<'a> ThermalOde<'a> {
    pub fn new(system: &'a ReactionSystem, ambient: AmbientModel) -> Self {
        ThermalOde { system, ambient }
    }
}

impl OdeSystem for ThermalOde<'_> {
    fn dim(&self) -> usize {
        self.system.dim()
    }

    fn rhs(&self, t: f64, y: &[f64], dydt: &mut [f64]) {
        let n = self.system.n_stages();
        let temperature = y[n];
        let mcp = self.system.cell.heat_capacity();
        let mut heat = 0.0;
        for (i, stage) in self.system.stages.iter().enumerate() {
            let r = stage_rate_unchecked(stage, y[i], temperature);
            dydt[i] = stage.direction.sign() * r;
            heat += stage.enthalpy * r;
        }
        if let Some(t_inf) = self.ambient.far_field(t) {
            heat += dissipative_flux_unchecked(&self.system.cell, temperature, t_inf);
        }
        dydt[n] = heat / mcp;
    }

    fn jacobian(&self, t: f64, y: &[f64], jac: &mut [f64]) {
        let n = self.system.n_stages();
        let dim = n + 1;
        let temperature = y[n];
        let mcp = self.system.cell.heat_capacity();
        jac.fill(0.0);
        let mut dheat_dt = 0.0;
        for (i, stage) in self.system.stages.iter().enumerate() {
            let ev = eval_stage(stage, y[i], temperature);
            let s = stage.direction.sign();
            jac[i * dim + i] = s * ev.dr_dc;
            jac[i * dim + n] = s * ev.dr_dt;
            jac[n * dim + i] = stage.enthalpy * ev.dr_dc / mcp;
            dheat_dt += stage.enthalpy * ev.dr_dt;
        }
        if let Some(t_inf) = self.ambient.far_field(t) {
            let cell = &self.system.cell;
            let _ = t_inf;
            dheat_dt += cell.surface_area
                * (-cell.conv_coeff
                    - 4.0 * cell.emissivity * STEFAN_BOLTZMANN * temperature.powi(3));
        }
        jac[n * dim + n] = dheat_dt / mcp;
    }
}
