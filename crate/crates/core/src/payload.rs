//! Heaviest object the tool can lift without slipping in the robot's hand.
//!
//! With the tool holding an object of weight `x` at moment arm `d_obj`, force
//! and moment balance give the contact demand per finger
//!
//! ```text
//! f = (G + x) / 2
//! T = (x d_obj sin α − G d_com cos α) / 2
//! ```
//!
//! and substituting into the soft-finger limit surface yields a convex
//! quadratic in `x`. The largest root is the payload limit.

use rayon::prelude::*;

use crate::contact::{capacity_check, max_capacities, ContactModel, GraspState};
use crate::error::{Error, Result};
use crate::grid::SweepRange;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObjectSpec {
    /// Object weight (N).
    pub g_obj: f64,
    /// Moment arm from the tool contact to the grasp line (m).
    pub d_obj: f64,
}

impl ObjectSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.g_obj.is_finite() && self.g_obj >= 0.0) {
            return Err(Error::invalid(
                "ObjectSpec",
                "g_obj",
                self.g_obj,
                "must be non-negative",
            ));
        }
        if !(self.d_obj.is_finite() && self.d_obj >= 0.0) {
            return Err(Error::invalid(
                "ObjectSpec",
                "d_obj",
                self.d_obj,
                "must be non-negative",
            ));
        }
        Ok(())
    }
}

/// `a x² + b x + c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadratic {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl Quadratic {
    pub fn eval(&self, x: f64) -> f64 {
        (self.a * x + self.b) * x + self.c
    }

    /// `|a x² + b x + c|` scaled by its largest term (or 1).
    pub fn residual(&self, x: f64) -> f64 {
        let scale = (self.a * x * x)
            .abs()
            .max((self.b * x).abs())
            .max(self.c.abs())
            .max(1.0);
        self.eval(x).abs() / scale
    }

    pub fn discriminant(&self) -> f64 {
        self.b * self.b - 4.0 * self.a * self.c
    }

    /// Larger real root, or `None` when the discriminant is negative.
    ///
    /// Uses `q = -(b + sign(b) √Δ) / 2` with roots `q/a` and `c/q` so neither
    /// root is formed by subtracting nearly equal numbers.
    pub fn larger_root(&self) -> Option<f64> {
        let disc = self.discriminant();
        if !(disc >= 0.0) {
            return None;
        }
        let sign = if self.b >= 0.0 { 1.0 } else { -1.0 };
        let q = -0.5 * (self.b + sign * disc.sqrt());
        if q == 0.0 {
            // b = 0 and Δ = 0: double root at the origin.
            return Some(0.0);
        }
        let r1 = q / self.a;
        let r2 = self.c / q;
        Some(r1.max(r2))
    }
}

/// Coefficients exactly as printed alongside the payload formula, evaluated
/// with `max T = e μ Fₙ`.
///
/// These do not reduce to the force/moment balance (the constant in `a` and
/// the scaling of `b` disagree with it, and the tool moment uses
/// `d sin α`). They are kept for comparison; [`max_payload`] solves
/// [`equilibrium_coefficients`] instead.
pub fn payload_coefficients(
    model: &ContactModel,
    state: &GraspState,
    d_obj: f64,
) -> Result<Quadratic> {
    let (_, max_t) = max_capacities(model, state.f_n);
    if !(max_t > 0.0) {
        return Err(Error::DegenerateContact);
    }
    let t2 = max_t * max_t;
    let p = (model.mu * state.f_n).powi(2);
    let s2 = state.alpha.sin().powi(2);
    let g = state.g_tool;
    let d = state.d;
    Ok(Quadratic {
        a: (1.0 + d_obj * d_obj * s2 * p) / (4.0 * t2),
        b: p * (g - d_obj * d * s2) / (2.0 * t2),
        c: g * g * (t2 + d * d * s2 * p) / (4.0 * t2) - p,
    })
}

/// Coefficients of `f² + T²/e² − μ²Fₙ²` as a polynomial in the object weight,
/// written over the common denominator `4 max T²`.
pub fn equilibrium_coefficients(
    model: &ContactModel,
    state: &GraspState,
    d_obj: f64,
) -> Result<Quadratic> {
    let (_, max_t) = max_capacities(model, state.f_n);
    if !(max_t > 0.0) {
        return Err(Error::DegenerateContact);
    }
    let t2 = max_t * max_t;
    let p = (model.mu * state.f_n).powi(2);
    let (sin_a, cos_a) = state.alpha.sin_cos();
    let g = state.g_tool;
    let obj_arm = d_obj * sin_a;
    let tool_arm = state.d_com * cos_a;
    Ok(Quadratic {
        a: (t2 + obj_arm * obj_arm * p) / (4.0 * t2),
        b: g * (t2 - p * obj_arm * tool_arm) / (2.0 * t2),
        c: g * g * (t2 + tool_arm * tool_arm * p) / (4.0 * t2) - p,
    })
}

/// Per-finger contact demand `(f, T)` required by force and moment balance.
pub fn contact_demand(state: &GraspState, g_obj: f64, d_obj: f64) -> (f64, f64) {
    let (sin_a, cos_a) = state.alpha.sin_cos();
    let f = (state.g_tool + g_obj) / 2.0;
    let t = (g_obj * d_obj * sin_a - state.g_tool * state.d_com * cos_a) / 2.0;
    (f, t)
}

/// Whether the grasp survives lifting `object`.
pub fn can_lift(model: &ContactModel, state: &GraspState, object: &ObjectSpec) -> bool {
    let (f, t) = contact_demand(state, object.g_obj, object.d_obj);
    capacity_check(model, state.f_n, f, t)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PayloadResult {
    /// Largest liftable object weight (N), never negative.
    pub max_weight: f64,
    pub coefficients: Quadratic,
    /// Normalised quadratic residual at the unclamped root.
    pub residual: f64,
    /// Set when the root was negative and the result clamped to zero.
    pub clamped: bool,
}

/// Maximum object weight for the grasp `state` and object arm `d_obj`.
pub fn max_payload(model: &ContactModel, state: &GraspState, d_obj: f64) -> Result<PayloadResult> {
    model.validate()?;
    state.validate()?;
    if !(d_obj.is_finite() && d_obj >= 0.0) {
        return Err(Error::invalid(
            "ObjectSpec",
            "d_obj",
            d_obj,
            "must be non-negative",
        ));
    }
    let capacity = 2.0 * model.mu * state.f_n;
    if capacity < state.g_tool {
        return Err(Error::NoFeasiblePayload(format!(
            "friction capacity {capacity} N is below the tool weight {} N",
            state.g_tool
        )));
    }
    let quad = equilibrium_coefficients(model, state, d_obj)?;
    let root = quad.larger_root().ok_or_else(|| {
        Error::NoFeasiblePayload(format!(
            "negative discriminant {}; the tool moment exceeds the torque capacity for every load",
            quad.discriminant()
        ))
    })?;
    Ok(PayloadResult {
        max_weight: root.max(0.0),
        coefficients: quad,
        residual: quad.residual(root),
        clamped: root < 0.0,
    })
}

/// One cell of a payload sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepCell {
    pub alpha: f64,
    pub d: f64,
    pub outcome: Result<PayloadResult>,
}

/// Evaluates [`max_payload`] over an `alpha × d` grid, with `alpha` as the
/// outer index. The grasp offset `d` is written into the template state.
/// Output order follows the grid regardless of how many workers run.
pub fn payload_sweep(
    model: &ContactModel,
    template: &GraspState,
    d_obj: f64,
    alphas: &SweepRange,
    ds: &SweepRange,
) -> Vec<SweepCell> {
    let alphas = alphas.values();
    let ds = ds.values();
    let points: Vec<(f64, f64)> = alphas
        .iter()
        .flat_map(|&a| ds.iter().map(move |&d| (a, d)))
        .collect();
    points
        .into_par_iter()
        .map(|(alpha, d)| {
            let state = GraspState {
                alpha,
                d,
                ..*template
            };
            SweepCell {
                alpha,
                d,
                outcome: max_payload(model, &state, d_obj),
            }
        })
        .collect()
}
