//! Independent oracles and shared fixtures for the integration tests.
#![allow(dead_code)]

use std::f64::consts::FRAC_PI_2;

use gripkit::contact::{capacity_check, ContactModel, GraspConfig, GraspState};
use gripkit::mechanism::stroke;
use gripkit::sizing::SizingProblem;
use gripkit::{Interval, SpringSpec};

/// Holding feasibility at offset `d`: each finger carries half the tool
/// weight and half the gravity moment about the grasp line.
pub fn hold_feasible(model: &ContactModel, state: &GraspState, d: f64) -> bool {
    let f = state.g_tool / 2.0;
    let t = state.g_tool * state.alpha.sin() * d / 2.0;
    capacity_check(model, state.f_n, f, t)
}

/// Per-finger wrench when lifting an object of weight `x`, solved directly
/// from the vertical force balance and the moment balance.
fn lift_wrench(state: &GraspState, d_obj: f64, x: f64) -> (f64, f64) {
    let f = (state.g_tool + x) / 2.0;
    let t = (x * d_obj * state.alpha.sin() - state.g_tool * state.d_com * state.alpha.cos()) / 2.0;
    (f, t)
}

fn lift_usage(model: &ContactModel, state: &GraspState, d_obj: f64, x: f64) -> f64 {
    let (f, t) = lift_wrench(state, d_obj, x);
    f * f + t * t / (model.e * model.e)
}

pub fn lift_feasible(model: &ContactModel, state: &GraspState, d_obj: f64, x: f64) -> bool {
    let (f, t) = lift_wrench(state, d_obj, x);
    capacity_check(model, state.f_n, f, t)
}

/// Heaviest liftable object by search over the weight on `[0, 20 μFₙ]`.
///
/// Capacity usage is a convex function of the weight, so the feasible
/// weights form an interval. Its least-usage point is found by ternary
/// search, then the upper end is bisected. `None` when no non-negative
/// weight is feasible.
pub fn payload_oracle(model: &ContactModel, state: &GraspState, d_obj: f64) -> Option<f64> {
    let top = 20.0 * model.mu * state.f_n;
    let (mut lo, mut hi) = (0.0, top);
    for _ in 0..300 {
        let a = lo + (hi - lo) / 3.0;
        let b = hi - (hi - lo) / 3.0;
        if lift_usage(model, state, d_obj, a) <= lift_usage(model, state, d_obj, b) {
            hi = b;
        } else {
            lo = a;
        }
    }
    let mut lo = 0.5 * (lo + hi);
    if !lift_feasible(model, state, d_obj, lo) {
        return None;
    }
    let mut hi = top;
    for _ in 0..300 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if lift_feasible(model, state, d_obj, mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(lo)
}

/// Best stroke found by exhaustive enumeration of `(m, θ_init, θ_end)` with
/// `n` points per axis, zooming `levels - 1` times onto a ±2-cell box around
/// the incumbent. Feasibility is the problem's own predicate, tested only
/// where the stroke would improve on the incumbent.
pub fn sizing_oracle(problem: &SizingProblem, n: usize, levels: usize) -> Option<(f64, [f64; 3])> {
    let full = [
        problem.m_bounds,
        Interval {
            lo: problem.theta_init_bounds.lo,
            hi: problem.theta_init_bounds.hi.min(FRAC_PI_2),
        },
        Interval {
            lo: 0.0,
            hi: problem.theta_init_bounds.hi.min(FRAC_PI_2),
        },
    ];
    let mut boxes = full;
    let mut best: Option<(f64, [f64; 3])> = None;
    for _ in 0..levels {
        let axes: Vec<Vec<f64>> = boxes.iter().map(|b| b.linspace(n)).collect();
        for &m in &axes[0] {
            for &ti in &axes[1] {
                if !(ti > 0.0 && ti < FRAC_PI_2) {
                    continue;
                }
                for &te in &axes[2] {
                    if te >= ti {
                        break;
                    }
                    let dims = problem.design(m, ti, te);
                    let s = stroke(&dims);
                    // Points that cannot beat the incumbent need no feasibility test.
                    if best.is_some_and(|(b, _)| s <= b) {
                        continue;
                    }
                    if gripkit::check_feasible(&dims).is_empty() && problem.is_feasible(&dims) {
                        best = Some((s, [m, ti, te]));
                    }
                }
            }
        }
        let (_, x) = best?;
        for k in 0..3 {
            let step = boxes[k].width() / (n - 1) as f64;
            boxes[k] = Interval {
                lo: (x[k] - 2.0 * step).max(full[k].lo),
                hi: (x[k] + 2.0 * step).min(full[k].hi),
            };
        }
    }
    best
}

pub fn nominal_grasp() -> GraspState {
    GraspState {
        f_n: 40.0,
        g_tool: 5.0,
        alpha: std::f64::consts::FRAC_PI_4,
        gamma: 0.0,
        d: 0.0,
        d_com: 0.0,
        theta: 0.0,
        config: GraspConfig::BackwardBase,
    }
}

/// Fixed sizing instances around the reference tool.
pub fn sizing_instances() -> Vec<(&'static str, SizingProblem)> {
    let base = SizingProblem {
        d_axis: 0.004,
        r_edge: 0.001,
        k: 0.05,
        w_init: 0.08,
        v: 1.0,
        m_bounds: Interval {
            lo: 0.006,
            hi: 0.04,
        },
        r_bounds: Interval {
            lo: 0.006,
            hi: 0.08,
        },
        theta_init_bounds: Interval {
            lo: 5f64.to_radians(),
            hi: 85f64.to_radians(),
        },
        grip_budget: 30.0,
        spring: SpringSpec {
            kappa: 0.05,
            beta: 0.5,
        },
        grasp: nominal_grasp(),
    };
    vec![
        ("nominal_budget_30", base.clone()),
        (
            "unlimited_budget",
            SizingProblem {
                grip_budget: f64::INFINITY,
                ..base.clone()
            },
        ),
        (
            "tight_budget",
            SizingProblem {
                grip_budget: 4.0,
                ..base.clone()
            },
        ),
        (
            "narrow_tool_short_links",
            SizingProblem {
                w_init: 0.05,
                d_axis: 0.006,
                r_edge: 0.0015,
                m_bounds: Interval { lo: 0.01, hi: 0.03 },
                r_bounds: Interval { lo: 0.01, hi: 0.03 },
                grip_budget: 12.0,
                ..base.clone()
            },
        ),
        (
            "capped_opening_angle",
            SizingProblem {
                theta_init_bounds: Interval {
                    lo: 10f64.to_radians(),
                    hi: 50f64.to_radians(),
                },
                grip_budget: 8.0,
                grasp: GraspState {
                    config: GraspConfig::ForwardBase,
                    g_tool: 20.0,
                    ..nominal_grasp()
                },
                ..base
            },
        ),
    ]
}
