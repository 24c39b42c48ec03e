//! Soft-finger contact between the robot gripper and the tool.
//!
//! A soft contact transmits a tangential force `f` and a spin torque `T`
//! bounded by the elliptic limit surface `f² + T²/e² ≤ μ²Fₙ²`, where `e` is
//! the ratio of torque capacity to friction capacity.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::mechanism::{spring_torque, SpringSpec, ToolDimensions};

/// Relative slack granted to the limit-surface test at its boundary.
pub const CAPACITY_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContactModel {
    /// Coulomb friction coefficient.
    pub mu: f64,
    /// Eccentricity, max torque over max friction (m).
    pub e: f64,
}

impl ContactModel {
    pub fn new(mu: f64, e: f64) -> Result<Self> {
        let model = ContactModel { mu, e };
        model.validate()?;
        Ok(model)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.mu.is_finite() && self.mu > 0.0) {
            return Err(Error::invalid(
                "ContactModel",
                "mu",
                self.mu,
                "must be positive",
            ));
        }
        if !(self.e.is_finite() && self.e > 0.0) {
            return Err(Error::invalid(
                "ContactModel",
                "e",
                self.e,
                "must be positive",
            ));
        }
        Ok(())
    }
}

/// Which way the base frame moves as the jaw closes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraspConfig {
    /// Base retreats on closure; the tool weight adds to the grip.
    BackwardBase,
    /// Base advances on closure; the tool weight relieves the grip.
    ForwardBase,
}

impl GraspConfig {
    pub fn name(self) -> &'static str {
        match self {
            GraspConfig::BackwardBase => "backward",
            GraspConfig::ForwardBase => "forward",
        }
    }

    fn gravity_sign(self) -> f64 {
        match self {
            GraspConfig::BackwardBase => 1.0,
            GraspConfig::ForwardBase => -1.0,
        }
    }
}

/// One held-tool situation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GraspState {
    /// Grip normal force per finger pair (N).
    pub f_n: f64,
    /// Tool weight (N).
    pub g_tool: f64,
    /// Tool axis angle from the gravity direction (rad).
    pub alpha: f64,
    /// Hand-to-tool angle (rad).
    pub gamma: f64,
    /// Grasp-point offset from the tool centre of mass (m).
    pub d: f64,
    /// Centre-of-mass moment arm in the object-grasp balance (m).
    pub d_com: f64,
    /// Current linkage angle (rad).
    pub theta: f64,
    pub config: GraspConfig,
}

impl GraspState {
    pub fn validate(&self) -> Result<()> {
        const OWNER: &str = "GraspState";
        let non_negative = [("f_n", self.f_n), ("d", self.d), ("d_com", self.d_com)];
        for (field, value) in non_negative {
            if !(value.is_finite() && value >= 0.0) {
                return Err(Error::invalid(OWNER, field, value, "must be non-negative"));
            }
        }
        if !(self.g_tool.is_finite() && self.g_tool > 0.0) {
            return Err(Error::invalid(
                OWNER,
                "g_tool",
                self.g_tool,
                "must be positive",
            ));
        }
        if !(0.0..=PI).contains(&self.alpha) {
            return Err(Error::invalid(
                OWNER,
                "alpha",
                self.alpha,
                "must lie in [0, pi]",
            ));
        }
        if !(0.0..=FRAC_PI_2).contains(&self.gamma) {
            return Err(Error::invalid(
                OWNER,
                "gamma",
                self.gamma,
                "must lie in [0, pi/2]",
            ));
        }
        if !self.theta.is_finite() {
            return Err(Error::invalid(OWNER, "theta", self.theta, "must be finite"));
        }
        Ok(())
    }
}

/// Whether the contact wrench `(f, t)` lies inside the soft-finger limit
/// surface for grip force `f_n`.
pub fn capacity_check(model: &ContactModel, f_n: f64, f: f64, t: f64) -> bool {
    let demand = f * f + t * t / (model.e * model.e);
    let limit = model.mu * model.mu * f_n * f_n;
    demand <= limit * (1.0 + CAPACITY_SLACK)
}

/// Maximum friction force and maximum spin torque for grip force `f_n`.
pub fn max_capacities(model: &ContactModel, f_n: f64) -> (f64, f64) {
    let max_f = model.mu * f_n;
    (max_f, model.e * max_f)
}

/// Upper limit on the grasp offset `d` for the tool to stay in the hand.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HoldingOffset {
    Bounded(f64),
    /// The tool axis is parallel to gravity, so no offset creates a torque.
    Unbounded,
}

impl HoldingOffset {
    pub fn admits(self, d: f64) -> bool {
        match self {
            HoldingOffset::Bounded(limit) => d <= limit,
            HoldingOffset::Unbounded => true,
        }
    }
}

/// Largest grasp offset at which the gripper still holds the tool.
pub fn holding_max_offset(model: &ContactModel, state: &GraspState) -> Result<HoldingOffset> {
    model.validate()?;
    state.validate()?;
    let capacity = 2.0 * model.mu * state.f_n;
    let g = state.g_tool;
    if capacity < g {
        return Err(Error::InfeasibleHold {
            deficit: g - capacity,
        });
    }
    let sin_alpha = state.alpha.sin();
    if sin_alpha.abs() < f64::EPSILON {
        return Ok(HoldingOffset::Unbounded);
    }
    let (_, max_t) = max_capacities(model, state.f_n);
    let mu_fn_sq = (model.mu * state.f_n).powi(2);
    let ratio = (4.0 * mu_fn_sq - g * g) / (g * g * sin_alpha * sin_alpha * mu_fn_sq);
    Ok(HoldingOffset::Bounded(max_t * ratio.max(0.0).sqrt()))
}

/// Grip force the robot must apply to hold the linkage at `state.theta`
/// against the springs, including the tool-weight contribution whose sign
/// depends on the configuration.
pub fn required_grip_force(
    dim: &ToolDimensions,
    spring: &SpringSpec,
    state: &GraspState,
) -> Result<f64> {
    let theta = state.theta;
    if (theta - FRAC_PI_2).abs() < 1e-12 {
        return Err(Error::SingularTransmission { theta });
    }
    if !(theta >= dim.theta_end && theta <= dim.theta_init) {
        return Err(Error::AngleOutOfRange {
            name: "theta",
            value: theta,
            min: dim.theta_end,
            max: dim.theta_init,
        });
    }
    let cos_theta = theta.cos();
    let torque = spring_torque(spring, dim.theta_init - theta)?;
    let gravity = state.g_tool * state.alpha.cos() * theta.tan() / 2.0;
    Ok(state.config.gravity_sign() * gravity + 2.0 * dim.v * torque / (dim.r * cos_theta))
}
