//! Dimension feasibility and stroke maximisation.
//!
//! The open width `w_init` is fixed, so the linkage length follows from the
//! base gap and opening angle: `r = (w_init − m) / (2 sin θ_init)`. What is
//! left to choose is `(m, θ_init, θ_end)`; the clearances `h` and `p` are set
//! to the smallest values their interference constraints allow.

use std::cmp::Ordering;
use std::f64::consts::FRAC_PI_2;
use std::fmt;

use rayon::prelude::*;

use crate::contact::{required_grip_force, GraspState};
use crate::error::{Error, Result};
use crate::grid::Interval;
use crate::mechanism::{stroke, SpringSpec, ToolDimensions};

/// Relative slack for "≥" constraints evaluated at their boundary.
const BOUNDARY_SLACK: f64 = 1e-12;
/// Relative distance under which a constraint is reported as active.
const ACTIVE_TOLERANCE: f64 = 1e-7;
/// Linkage angles sampled when evaluating the grip-force budget.
pub const GRIP_SAMPLES: usize = 64;

/// Largest opening angle the optimiser will place; θ_init = π/2 is singular.
const THETA_INIT_CAP: f64 = FRAC_PI_2 - 1e-9;

const COARSE_M: usize = 33;
const COARSE_THETA: usize = 257;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Constraint {
    /// `m ≥ d_axis + 2 r_edge`
    BaseGap,
    /// `θ_end ≥ asin((d_axis + 2 r_edge) / r)`
    ThetaEndMin,
    /// `p ≥ k sin θ_end`
    ParallelOffset,
    /// `h ≥ r cos θ_end + tan θ_end (d_axis + 2 r_edge)`
    HeightClearance,
    /// `θ_init < π/2`
    TransmissionSingularity,
    GripBudget,
    MBounds,
    RBounds,
    ThetaInitBounds,
}

impl Constraint {
    pub fn name(self) -> &'static str {
        match self {
            Constraint::BaseGap => "base_gap",
            Constraint::ThetaEndMin => "theta_end_min",
            Constraint::ParallelOffset => "parallel_offset",
            Constraint::HeightClearance => "height_clearance",
            Constraint::TransmissionSingularity => "transmission_singularity",
            Constraint::GripBudget => "grip_budget",
            Constraint::MBounds => "m_bounds",
            Constraint::RBounds => "r_bounds",
            Constraint::ThetaInitBounds => "theta_init_bounds",
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Signed distance to a constraint boundary; negative means violated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Violation {
    pub constraint: Constraint,
    pub margin: f64,
}

#[derive(Debug, Clone, Copy)]
struct Margin {
    constraint: Constraint,
    margin: f64,
    /// Magnitude the margin is measured against.
    scale: f64,
    strict: bool,
}

impl Margin {
    fn new(constraint: Constraint, lhs: f64, rhs: f64) -> Self {
        Margin {
            constraint,
            margin: lhs - rhs,
            scale: lhs.abs().max(rhs.abs()),
            strict: false,
        }
    }

    fn violated(&self) -> bool {
        if self.strict {
            !(self.margin > 0.0)
        } else {
            !(self.margin >= -BOUNDARY_SLACK * self.scale)
        }
    }

    fn active(&self) -> bool {
        self.margin.abs() <= ACTIVE_TOLERANCE * self.scale.max(f64::MIN_POSITIVE)
    }

    fn violation(&self) -> Violation {
        Violation {
            constraint: self.constraint,
            margin: self.margin,
        }
    }
}

fn bound_margin(constraint: Constraint, bounds: &Interval, x: f64) -> Margin {
    let (lhs, rhs) = if x - bounds.lo < bounds.hi - x {
        (x, bounds.lo)
    } else {
        (bounds.hi, x)
    };
    Margin::new(constraint, lhs, rhs)
}

/// Smallest closed-jaw angle before the parallel linkage meets the base frame.
pub fn theta_end_min(r: f64, d_axis: f64, r_edge: f64) -> Result<f64> {
    let q = d_axis + 2.0 * r_edge;
    if q > r {
        return Err(Error::GeometricallyImpossible { q, r });
    }
    Ok((q / r).asin())
}

fn min_offset(k: f64, theta_end: f64) -> f64 {
    k * theta_end.sin()
}

fn min_height(r: f64, theta_end: f64, span: f64) -> f64 {
    r * theta_end.cos() + theta_end.tan() * span
}

fn geometric_margins(dim: &ToolDimensions) -> Vec<Margin> {
    let span = dim.d_axis + 2.0 * dim.r_edge;
    let theta_end = match theta_end_min(dim.r, dim.d_axis, dim.r_edge) {
        Ok(min) => Margin::new(Constraint::ThetaEndMin, dim.theta_end, min),
        Err(_) => Margin::new(Constraint::ThetaEndMin, dim.r, span),
    };
    vec![
        Margin::new(Constraint::BaseGap, dim.m, span),
        theta_end,
        Margin::new(
            Constraint::ParallelOffset,
            dim.p,
            min_offset(dim.k, dim.theta_end),
        ),
        Margin::new(
            Constraint::HeightClearance,
            dim.h,
            min_height(dim.r, dim.theta_end, span),
        ),
        Margin {
            strict: true,
            ..Margin::new(
                Constraint::TransmissionSingularity,
                FRAC_PI_2,
                dim.theta_init,
            )
        },
    ]
}

/// Interference and installation constraints violated by `dim`. Boundary
/// values count as feasible except for the singular opening angle.
pub fn check_feasible(dim: &ToolDimensions) -> Vec<Violation> {
    geometric_margins(dim)
        .iter()
        .filter(|m| m.violated())
        .map(Margin::violation)
        .collect()
}

/// Worst required grip force over the stroke, taken as the maximum over
/// [`GRIP_SAMPLES`] linkage angles from `theta_end` to `theta_init`.
pub fn grip_demand(dim: &ToolDimensions, spring: &SpringSpec, grasp: &GraspState) -> Result<f64> {
    let span = Interval {
        lo: dim.theta_end,
        hi: dim.theta_init,
    };
    span.linspace(GRIP_SAMPLES)
        .into_iter()
        .map(|theta| required_grip_force(dim, spring, &GraspState { theta, ..*grasp }))
        .try_fold(f64::NEG_INFINITY, |acc, f| f.map(|f| acc.max(f)))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SizingProblem {
    pub d_axis: f64,
    pub r_edge: f64,
    pub k: f64,
    pub w_init: f64,
    /// Spring-transmission ratio carried into every candidate design.
    pub v: f64,
    pub m_bounds: Interval,
    pub r_bounds: Interval,
    pub theta_init_bounds: Interval,
    /// Largest acceptable grip force over the stroke (N); may be infinite.
    pub grip_budget: f64,
    pub spring: SpringSpec,
    pub grasp: GraspState,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SizingResult {
    pub dims: ToolDimensions,
    pub stroke: f64,
    pub active_constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, Copy)]
struct Candidate {
    dims: ToolDimensions,
    stroke: f64,
}

impl Candidate {
    /// Larger stroke first, then smaller θ_init, then smaller m.
    fn better_than(&self, other: &Candidate) -> bool {
        match self.stroke.partial_cmp(&other.stroke) {
            Some(Ordering::Greater) => true,
            Some(Ordering::Less) => false,
            _ => (self.dims.theta_init, self.dims.m) < (other.dims.theta_init, other.dims.m),
        }
    }
}

fn pick(best: Option<Candidate>, next: Option<Candidate>) -> Option<Candidate> {
    match (best, next) {
        (Some(b), Some(n)) => Some(if n.better_than(&b) { n } else { b }),
        (b, n) => b.or(n),
    }
}

impl SizingProblem {
    pub fn span(&self) -> f64 {
        self.d_axis + 2.0 * self.r_edge
    }

    pub fn validate(&self) -> Result<()> {
        const OWNER: &str = "SizingProblem";
        for (field, value) in [
            ("d_axis", self.d_axis),
            ("r_edge", self.r_edge),
            ("k", self.k),
            ("w_init", self.w_init),
            ("v", self.v),
        ] {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::invalid(OWNER, field, value, "must be positive"));
            }
        }
        if !(self.grip_budget > 0.0) {
            return Err(Error::invalid(
                OWNER,
                "grip_budget",
                self.grip_budget,
                "must be positive",
            ));
        }
        if !(self.theta_init_bounds.lo > 0.0) {
            return Err(Error::invalid(
                OWNER,
                "theta_init_bounds",
                self.theta_init_bounds.lo,
                "must lie above zero",
            ));
        }
        self.spring.validate()?;
        self.grasp.validate()
    }

    /// Design at `(m, θ_init, θ_end)` with `r` from the width tie and the
    /// clearances pinned to their minimum.
    pub fn design(&self, m: f64, theta_init: f64, theta_end: f64) -> ToolDimensions {
        let span = self.span();
        let r = (self.w_init - m) / (2.0 * theta_init.sin());
        ToolDimensions {
            m,
            r,
            theta_init,
            theta_end,
            h: min_height(r, theta_end, span),
            p: min_offset(self.k, theta_end),
            q: span,
            k: self.k,
            d_axis: self.d_axis,
            r_edge: self.r_edge,
            v: self.v,
            w_init: self.w_init,
        }
    }

    fn margins(&self, dim: &ToolDimensions) -> Vec<Margin> {
        let mut all = geometric_margins(dim);
        all.push(bound_margin(Constraint::MBounds, &self.m_bounds, dim.m));
        all.push(bound_margin(Constraint::RBounds, &self.r_bounds, dim.r));
        all.push(bound_margin(
            Constraint::ThetaInitBounds,
            &self.theta_init_bounds,
            dim.theta_init,
        ));
        let budget = if self.grip_budget.is_finite() {
            match grip_demand(dim, &self.spring, &self.grasp) {
                Ok(demand) => Margin::new(Constraint::GripBudget, self.grip_budget, demand),
                Err(_) => Margin {
                    constraint: Constraint::GripBudget,
                    margin: f64::NEG_INFINITY,
                    scale: self.grip_budget,
                    strict: false,
                },
            }
        } else {
            Margin {
                constraint: Constraint::GripBudget,
                margin: f64::INFINITY,
                scale: 1.0,
                strict: false,
            }
        };
        all.push(budget);
        all
    }

    /// Every constraint of the problem (geometry, bounds, grip budget)
    /// violated by `dim`.
    pub fn violations(&self, dim: &ToolDimensions) -> Vec<Violation> {
        self.margins(dim)
            .iter()
            .filter(|m| m.violated())
            .map(Margin::violation)
            .collect()
    }

    pub fn is_feasible(&self, dim: &ToolDimensions) -> bool {
        self.margins(dim).iter().all(|m| !m.violated())
    }

    fn active_constraints(&self, dim: &ToolDimensions) -> Vec<Constraint> {
        let mut active: Vec<Constraint> = self
            .margins(dim)
            .iter()
            .filter(|m| m.active())
            .map(|m| m.constraint)
            .collect();
        active.sort();
        active.dedup();
        active
    }

    /// Opening angles compatible with the θ_init bounds and with `r` staying
    /// inside its bounds and long enough for the joint clearance.
    fn theta_init_window(&self, m: f64) -> Option<Interval> {
        let half_reach = (self.w_init - m) / 2.0;
        if !(half_reach > 0.0) {
            return None;
        }
        let r_hi = self.r_bounds.hi;
        let r_lo = self.r_bounds.lo.max(self.span());
        let lo_arg = half_reach / r_hi;
        if lo_arg > 1.0 || r_lo > r_hi {
            return None;
        }
        let hi_arg = half_reach / r_lo;
        let lo = lo_arg.asin().max(self.theta_init_bounds.lo);
        let hi = if hi_arg >= 1.0 {
            FRAC_PI_2
        } else {
            hi_arg.asin()
        }
        .min(self.theta_init_bounds.hi)
        .min(THETA_INIT_CAP);
        (lo <= hi).then_some(Interval { lo, hi })
    }

    /// Best design for fixed `(m, θ_init)`: the smallest feasible closing
    /// angle, found by bisection when the grip budget rules out the
    /// geometric minimum.
    fn close_jaw(&self, m: f64, theta_init: f64) -> Option<Candidate> {
        if !(theta_init > 0.0 && theta_init < FRAC_PI_2) {
            return None;
        }
        let r = (self.w_init - m) / (2.0 * theta_init.sin());
        let floor = theta_end_min(r, self.d_axis, self.r_edge).ok()?;
        if !(floor < theta_init) {
            return None;
        }
        let at = |theta_end: f64| {
            let dims = self.design(m, theta_init, theta_end);
            self.is_feasible(&dims).then(|| Candidate {
                dims,
                stroke: stroke(&dims),
            })
        };
        if let Some(c) = at(floor) {
            return Some(c);
        }
        let mut lo = floor;
        let mut hi = floor + (theta_init - floor) * (1.0 - 1e-9);
        let mut best = at(hi)?;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            match at(mid) {
                Some(c) => {
                    best = c;
                    hi = mid;
                }
                None => lo = mid,
            }
        }
        Some(best)
    }

    /// Golden-section search for the best stroke over `x ∈ [lo, hi]`,
    /// returning the best candidate seen at any evaluated point.
    fn golden<F>(lo: f64, hi: f64, eval: F) -> Option<Candidate>
    where
        F: Fn(f64) -> Option<Candidate>,
    {
        const INV_PHI: f64 = 0.618_033_988_749_894_9;
        let score = |c: &Option<Candidate>| c.map_or(f64::NEG_INFINITY, |c| c.stroke);
        let (mut a, mut b) = (lo, hi);
        let mut best = pick(eval(a), eval(b));
        let mut x1 = b - INV_PHI * (b - a);
        let mut x2 = a + INV_PHI * (b - a);
        let mut f1 = eval(x1);
        let mut f2 = eval(x2);
        best = pick(pick(best, f1), f2);
        for _ in 0..200 {
            if (b - a) <= 1e-14 * b.abs().max(1.0) {
                break;
            }
            if score(&f1) < score(&f2) {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + INV_PHI * (b - a);
                f2 = eval(x2);
                best = pick(best, f2);
            } else {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - INV_PHI * (b - a);
                f1 = eval(x1);
                best = pick(best, f1);
            }
        }
        best
    }

    fn diagnose(&self) -> Vec<Constraint> {
        let m = self.m_bounds.lo;
        let theta_init = self.theta_init_bounds.hi.min(THETA_INIT_CAP);
        let r = (self.w_init - m) / (2.0 * theta_init.sin());
        let theta_end = theta_end_min(r, self.d_axis, self.r_edge)
            .unwrap_or(0.0)
            .min(0.5 * theta_init);
        let mut binding: Vec<Constraint> = self
            .violations(&self.design(m, theta_init, theta_end))
            .into_iter()
            .map(|v| v.constraint)
            .collect();
        if binding.is_empty() {
            // Feasible only with a closing angle at or above the opening
            // angle: the grip budget is what rules the bounds out.
            binding.push(Constraint::GripBudget);
        }
        binding
    }

    /// Feasible design with the largest stroke.
    ///
    /// A coarse grid over `(m, θ_init)` locates the best cell; golden-section
    /// passes on `θ_init` and `m` then refine it. The closing angle is always
    /// pushed to its smallest feasible value.
    pub fn maximize_stroke(&self) -> Result<SizingResult> {
        self.validate()?;
        let m_lo = self.m_bounds.lo.max(self.span());
        if m_lo > self.m_bounds.hi {
            return Err(Error::InfeasibleProblem {
                binding: vec![Constraint::BaseGap],
            });
        }
        let ms = Interval {
            lo: m_lo,
            hi: self.m_bounds.hi,
        }
        .linspace(COARSE_M);

        // Collected in grid order so the reduction is independent of the
        // number of workers.
        let cells: Vec<Option<Candidate>> = ms
            .par_iter()
            .flat_map_iter(|&m| {
                let thetas = self
                    .theta_init_window(m)
                    .map(|w| w.linspace(COARSE_THETA))
                    .unwrap_or_default();
                thetas.into_iter().map(move |t| self.close_jaw(m, t))
            })
            .collect();

        let Some(start) = cells.into_iter().fold(None, pick) else {
            return Err(Error::InfeasibleProblem {
                binding: self.diagnose(),
            });
        };

        let theta_bracket = |m: f64, centre: f64, cells: f64| -> Option<Interval> {
            let window = self.theta_init_window(m)?;
            let step = window.width() / (COARSE_THETA - 1) as f64;
            Some(Interval {
                lo: (centre - cells * step).max(window.lo),
                hi: (centre + cells * step).min(window.hi),
            })
        };
        let m_step = if ms.len() > 1 { ms[1] - ms[0] } else { 0.0 };

        let mut best = start;
        for _ in 0..2 {
            let m = best.dims.m;
            if let Some(w) = theta_bracket(m, best.dims.theta_init, 1.0) {
                let refined = Self::golden(w.lo, w.hi, |t| self.close_jaw(m, t));
                best = pick(Some(best), refined).unwrap_or(best);
            }
            if m_step > 0.0 {
                let t = best.dims.theta_init;
                let lo = (best.dims.m - m_step).max(ms[0]);
                let hi = (best.dims.m + m_step).min(*ms.last().unwrap());
                let refined = Self::golden(lo, hi, |m| self.close_jaw(m, t));
                best = pick(Some(best), refined).unwrap_or(best);
            }
        }

        assert!(
            self.is_feasible(&best.dims),
            "optimiser produced an infeasible design: {:?}",
            self.violations(&best.dims)
        );
        Ok(SizingResult {
            dims: best.dims,
            stroke: best.stroke,
            active_constraints: self.active_constraints(&best.dims),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contact::GraspConfig;
    use std::f64::consts::FRAC_PI_4;

    fn feasible_dims() -> ToolDimensions {
        let (m, r, ti, te) = (0.02, 0.03, 1.0, 0.3);
        let span = 0.006;
        ToolDimensions {
            m,
            r,
            theta_init: ti,
            theta_end: te,
            h: min_height(r, te, span) + 0.001,
            p: min_offset(0.05, te) + 0.001,
            q: span,
            k: 0.05,
            d_axis: 0.004,
            r_edge: 0.001,
            v: 1.0,
            w_init: m + 2.0 * r * ti.sin(),
        }
    }

    pub(crate) fn problem(budget: f64) -> SizingProblem {
        SizingProblem {
            d_axis: 0.004,
            r_edge: 0.001,
            k: 0.05,
            w_init: 0.08,
            v: 1.0,
            m_bounds: Interval::new(0.006, 0.04).unwrap(),
            r_bounds: Interval::new(0.006, 0.2).unwrap(),
            theta_init_bounds: Interval::new(0.1, 1.5).unwrap(),
            grip_budget: budget,
            spring: SpringSpec::new(0.05, 0.5).unwrap(),
            grasp: GraspState {
                f_n: 40.0,
                g_tool: 5.0,
                alpha: FRAC_PI_4,
                gamma: 0.0,
                d: 0.0,
                d_com: 0.0,
                theta: 0.0,
                config: GraspConfig::BackwardBase,
            },
        }
    }

    #[test]
    fn theta_end_min_examples() {
        assert_eq!(theta_end_min(0.006, 0.004, 0.001).unwrap(), FRAC_PI_2);
        assert_eq!(theta_end_min(0.04, 0.02, 0.01).unwrap(), FRAC_PI_2);
        let t = theta_end_min(0.03, 0.004, 0.001).unwrap();
        assert!((t - 0.2f64.asin()).abs() < 1e-15);
        assert!((t - 0.2013579207903308).abs() < 1e-12);
        assert!(matches!(
            theta_end_min(0.005, 0.004, 0.001),
            Err(Error::GeometricallyImpossible { .. })
        ));
    }

    #[test]
    fn feasible_design_has_no_violations() {
        assert!(check_feasible(&feasible_dims()).is_empty());
    }

    #[test]
    fn base_gap_boundary_counts_as_feasible() {
        let mut d = feasible_dims();
        d.m = d.d_axis + 2.0 * d.r_edge;
        assert!(check_feasible(&d).is_empty());
        d.m *= 0.999;
        let v = check_feasible(&d);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].constraint, Constraint::BaseGap);
        assert!(v[0].margin < 0.0);
    }

    #[test]
    fn right_angle_opening_is_singular() {
        let mut d = feasible_dims();
        d.theta_init = FRAC_PI_2;
        let v = check_feasible(&d);
        assert_eq!(v.len(), 1, "{v:?}");
        assert_eq!(v[0].constraint, Constraint::TransmissionSingularity);
    }

    #[test]
    fn each_interference_constraint_is_reported() {
        let mut d = feasible_dims();
        d.theta_end = 0.1;
        d.p = 1.0;
        d.h = 1.0;
        let names: Vec<_> = check_feasible(&d).iter().map(|v| v.constraint).collect();
        assert_eq!(names, vec![Constraint::ThetaEndMin]);

        let mut d = feasible_dims();
        d.p = 0.5 * min_offset(d.k, d.theta_end);
        d.h = 0.5 * min_height(d.r, d.theta_end, d.q);
        let names: Vec<_> = check_feasible(&d).iter().map(|v| v.constraint).collect();
        assert_eq!(
            names,
            vec![Constraint::ParallelOffset, Constraint::HeightClearance]
        );

        let mut d = feasible_dims();
        d.r = 0.005;
        assert!(check_feasible(&d)
            .iter()
            .any(|v| v.constraint == Constraint::ThetaEndMin && v.margin < 0.0));
    }

    #[test]
    fn grip_demand_covers_both_ends() {
        let p = problem(f64::INFINITY);
        let d = p.design(0.01, 1.0, 0.3);
        let demand = grip_demand(&d, &p.spring, &p.grasp).unwrap();
        for theta in [0.3, 1.0] {
            let f = required_grip_force(&d, &p.spring, &GraspState { theta, ..p.grasp }).unwrap();
            assert!(demand >= f);
        }
    }

    #[test]
    fn unlimited_budget_pushes_to_geometric_limits() {
        let p = problem(f64::INFINITY);
        let res = p.maximize_stroke().unwrap();
        assert_eq!(res.dims.m, p.span());
        let floor = theta_end_min(res.dims.r, p.d_axis, p.r_edge).unwrap();
        assert_eq!(res.dims.theta_end, floor);
        assert!(res.active_constraints.contains(&Constraint::BaseGap));
        assert!(res.active_constraints.contains(&Constraint::ThetaEndMin));
        assert!(check_feasible(&res.dims).is_empty());
        assert!((res.stroke - stroke(&res.dims)).abs() == 0.0);
    }

    #[test]
    fn collapsed_bounds_return_the_point() {
        let mut p = problem(f64::INFINITY);
        p.m_bounds = Interval::point(0.02);
        p.theta_init_bounds = Interval::point(1.0);
        let res = p.maximize_stroke().unwrap();
        assert_eq!(res.dims.m, 0.02);
        assert_eq!(res.dims.theta_init, 1.0);
        assert_eq!(
            res.dims.theta_end,
            theta_end_min(res.dims.r, p.d_axis, p.r_edge).unwrap()
        );
    }

    #[test]
    fn budget_binds_and_is_respected() {
        let p = problem(30.0);
        let res = p.maximize_stroke().unwrap();
        let demand = grip_demand(&res.dims, &p.spring, &p.grasp).unwrap();
        assert!(demand <= 30.0 * (1.0 + 1e-12), "{demand}");
        assert!(res.active_constraints.contains(&Constraint::GripBudget));
        let free = problem(f64::INFINITY).maximize_stroke().unwrap();
        assert!(res.stroke < free.stroke);
    }

    #[test]
    fn empty_feasible_set_lists_binding_constraints() {
        let mut p = problem(f64::INFINITY);
        p.m_bounds = Interval::new(0.001, 0.004).unwrap();
        match p.maximize_stroke() {
            Err(Error::InfeasibleProblem { binding }) => {
                assert_eq!(binding, vec![Constraint::BaseGap])
            }
            other => panic!("unexpected {other:?}"),
        }
        let p = problem(0.2);
        match p.maximize_stroke() {
            Err(Error::InfeasibleProblem { binding }) => {
                assert!(binding.contains(&Constraint::GripBudget), "{binding:?}")
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
