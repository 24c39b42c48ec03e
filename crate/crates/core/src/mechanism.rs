//! Kinematics of the symmetric double-parallelogram jaw and its torsion-spring
//! transmission.
//!
//! Each side of the tool is a parallelogram whose angular linkage of length
//! `r` rotates between `theta_init` (jaw fully open) and `theta_end` (jaw fully
//! closed). The two tooltips stay parallel, so the jaw width is the base gap
//! `m` plus the horizontal reach of both linkages.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

/// Absolute tolerance on the redundant width and clearance fields (metres).
pub const TIE_TOLERANCE: f64 = 1e-6;

/// Geometric parameters of the two-parallelogram mechanism. Lengths in metres,
/// angles in radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToolDimensions {
    /// Base gap between the two parallelograms.
    pub m: f64,
    /// Angular-linkage length.
    pub r: f64,
    /// Linkage angle with the jaw fully open.
    pub theta_init: f64,
    /// Linkage angle with the jaw fully closed.
    pub theta_end: f64,
    /// Base-frame height clearance.
    pub h: f64,
    /// Linkage offset clearance.
    pub p: f64,
    /// Joint clearance span, `d_axis + 2 * r_edge`.
    pub q: f64,
    /// Parallel-linkage length.
    pub k: f64,
    /// Joint shaft diameter.
    pub d_axis: f64,
    /// Minimum material edge around a shaft.
    pub r_edge: f64,
    /// Dimensionless spring-transmission ratio.
    pub v: f64,
    /// Fully-open jaw width, `m + 2 r sin(theta_init)`.
    pub w_init: f64,
}

impl ToolDimensions {
    /// Checks the type invariants: positive lengths, ordered angles below a
    /// right angle, and the two redundant fields (`w_init`, `q`) consistent
    /// with the values they duplicate.
    pub fn validate(&self) -> Result<()> {
        const OWNER: &str = "ToolDimensions";
        let lengths = [
            ("m", self.m),
            ("r", self.r),
            ("h", self.h),
            ("p", self.p),
            ("q", self.q),
            ("k", self.k),
            ("d_axis", self.d_axis),
            ("r_edge", self.r_edge),
            ("v", self.v),
            ("w_init", self.w_init),
        ];
        for (field, value) in lengths {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::invalid(OWNER, field, value, "must be positive"));
            }
        }
        if !(self.theta_end >= 0.0) {
            return Err(Error::invalid(
                OWNER,
                "theta_end",
                self.theta_end,
                "must be non-negative",
            ));
        }
        if !(self.theta_end < self.theta_init) {
            return Err(Error::invalid(
                OWNER,
                "theta_end",
                self.theta_end,
                format!("must be below theta_init = {}", self.theta_init),
            ));
        }
        if !(self.theta_init < FRAC_PI_2) {
            return Err(Error::invalid(
                OWNER,
                "theta_init",
                self.theta_init,
                "must be below pi/2",
            ));
        }
        let width = self.m + 2.0 * self.r * self.theta_init.sin();
        if (self.w_init - width).abs() > TIE_TOLERANCE {
            return Err(Error::invalid(
                OWNER,
                "w_init",
                self.w_init,
                format!("inconsistent with m + 2 r sin(theta_init) = {width}"),
            ));
        }
        let span = self.d_axis + 2.0 * self.r_edge;
        if (self.q - span).abs() > TIE_TOLERANCE {
            return Err(Error::invalid(
                OWNER,
                "q",
                self.q,
                format!("inconsistent with d_axis + 2 r_edge = {span}"),
            ));
        }
        Ok(())
    }
}

/// Torsion spring installed at each linkage joint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpringSpec {
    /// Torsional stiffness, N·m/rad.
    pub kappa: f64,
    /// Pre-load angle set by the stopper, rad.
    pub beta: f64,
}

impl SpringSpec {
    pub fn new(kappa: f64, beta: f64) -> Result<Self> {
        let spring = SpringSpec { kappa, beta };
        spring.validate()?;
        Ok(spring)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.kappa.is_finite() && self.kappa > 0.0) {
            return Err(Error::invalid(
                "SpringSpec",
                "kappa",
                self.kappa,
                "must be positive",
            ));
        }
        if !(self.beta.is_finite() && self.beta >= 0.0) {
            return Err(Error::invalid(
                "SpringSpec",
                "beta",
                self.beta,
                "must be non-negative",
            ));
        }
        Ok(())
    }
}

/// Jaw width at linkage angle `theta`.
pub fn jaw_width(dim: &ToolDimensions, theta: f64) -> Result<f64> {
    if !(theta >= dim.theta_end && theta <= dim.theta_init) {
        return Err(Error::AngleOutOfRange {
            name: "theta",
            value: theta,
            min: dim.theta_end,
            max: dim.theta_init,
        });
    }
    Ok(dim.m + 2.0 * dim.r * theta.sin())
}

/// Jaw travel between fully open and fully closed.
pub fn stroke(dim: &ToolDimensions) -> f64 {
    2.0 * dim.r * (dim.theta_init - dim.theta_end).sin()
}

/// Stroke with `r` eliminated through the fixed open width:
/// `(w_init - m) / sin(theta_init) * sin(theta_init - theta_end)`.
pub fn stroke_fixed_width(w_init: f64, m: f64, theta_init: f64, theta_end: f64) -> f64 {
    (w_init - m) / theta_init.sin() * (theta_init - theta_end).sin()
}

/// Torque the spring applies to its linkage after rotating `delta_theta`
/// beyond its pre-load.
pub fn spring_torque(spring: &SpringSpec, delta_theta: f64) -> Result<f64> {
    if !(delta_theta >= 0.0) {
        return Err(Error::NegativeDeflection(delta_theta));
    }
    Ok(spring.kappa * (spring.beta + delta_theta))
}
