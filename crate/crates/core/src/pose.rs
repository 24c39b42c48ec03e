//! Torque margin of the hand-tool grasp across working poses.
//!
//! With the grasp taken at the centre of mass and the tool axis horizontal,
//! the hand-to-tool angle `γ` splits the tool weight between an in-plane
//! friction demand `(G/2) cos γ` per contact and a spin-torque demand
//! `G d_com sin γ`. The margin is the torque the two soft contacts can still
//! offer after the friction demand, minus that torque demand:
//!
//! ```text
//! margin(γ) = 2 e √(μ²Fₙ² − ((G/2) cos γ)²) − G d_com sin γ
//! ```
//!
//! Callers only see [`torque_margin`], so the model can be replaced in one
//! place.

use std::f64::consts::FRAC_PI_2;

use rayon::prelude::*;

use crate::contact::{ContactModel, GraspState};
use crate::error::{Error, Result};
use crate::grid::Interval;

/// Available spin torque minus the gravity torque demand at hand-tool angle
/// `gamma`.
pub fn torque_margin(model: &ContactModel, state: &GraspState, gamma: f64) -> Result<f64> {
    if !(0.0..=FRAC_PI_2).contains(&gamma) {
        return Err(Error::AngleOutOfRange {
            name: "gamma",
            value: gamma,
            min: 0.0,
            max: FRAC_PI_2,
        });
    }
    let (sin_g, cos_g) = gamma.sin_cos();
    let capacity = model.mu * state.f_n;
    let tangential = 0.5 * state.g_tool * cos_g;
    if tangential > capacity {
        return Err(Error::ZeroCapacity {
            demand: tangential,
            capacity,
        });
    }
    let available = 2.0 * model.e * (capacity * capacity - tangential * tangential).sqrt();
    Ok(available - state.g_tool * state.d_com * sin_g)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MarginSample {
    pub gamma: f64,
    /// `None` where the grasp has no torque capacity left.
    pub margin: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TorqueMarginCurve {
    pub samples: Vec<MarginSample>,
    pub peak_gamma: f64,
    pub peak_margin: f64,
}

/// Samples [`torque_margin`] uniformly on `[0, π/2]` and locates the peak.
///
/// The peak starts at the best sample (earliest on ties) and is refined by
/// the vertex of the parabola through it and its two neighbours when both
/// are available.
pub fn gamma_sweep(
    model: &ContactModel,
    state: &GraspState,
    n_samples: usize,
) -> Result<TorqueMarginCurve> {
    if n_samples < 2 {
        return Err(Error::Usage(format!(
            "gamma sweep needs at least 2 samples, got {n_samples}"
        )));
    }
    let gammas = Interval {
        lo: 0.0,
        hi: FRAC_PI_2,
    }
    .linspace(n_samples);
    let samples: Vec<MarginSample> = gammas
        .into_par_iter()
        .map(|gamma| MarginSample {
            gamma,
            margin: torque_margin(model, state, gamma).ok(),
        })
        .collect();

    let (peak_gamma, peak_margin) = locate_peak(&samples).ok_or(Error::ZeroCapacity {
        demand: 0.5 * state.g_tool,
        capacity: model.mu * state.f_n,
    })?;
    Ok(TorqueMarginCurve {
        samples,
        peak_gamma,
        peak_margin,
    })
}

/// Best sample (earliest on ties), moved to the vertex of the parabola
/// through it and its neighbours when it is interior and the curve is concave
/// there. Samples must be uniformly spaced.
fn locate_peak(samples: &[MarginSample]) -> Option<(f64, f64)> {
    let mut best: Option<(usize, f64)> = None;
    for (i, s) in samples.iter().enumerate() {
        if let Some(m) = s.margin {
            if best.is_none_or(|(_, b)| m > b) {
                best = Some((i, m));
            }
        }
    }
    let (i, y1) = best?;
    let gamma = samples[i].gamma;
    if i == 0 || i + 1 == samples.len() {
        return Some((gamma, y1));
    }
    match (samples[i - 1].margin, samples[i + 1].margin) {
        (Some(y0), Some(y2)) if y0 - 2.0 * y1 + y2 < 0.0 => {
            let h = samples[i + 1].gamma - gamma;
            let shift = 0.5 * (y0 - y2) / (y0 - 2.0 * y1 + y2);
            Some((gamma + shift * h, y1 - 0.25 * (y0 - y2) * shift))
        }
        _ => Some((gamma, y1)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contact::GraspConfig;

    fn nominal() -> (ContactModel, GraspState) {
        (
            ContactModel::new(0.5, 0.01).unwrap(),
            GraspState {
                f_n: 40.0,
                g_tool: 10.0,
                alpha: FRAC_PI_2,
                gamma: 0.0,
                d: 0.0,
                d_com: 0.03,
                theta: 0.0,
                config: GraspConfig::BackwardBase,
            },
        )
    }

    #[test]
    fn zero_arm_at_zero_angle() {
        let (m, mut s) = nominal();
        s.d_com = 0.0;
        let got = torque_margin(&m, &s, 0.0).unwrap();
        let expected = 0.01 * (400.0f64 - 25.0).sqrt() * 2.0;
        assert!((got - expected).abs() < 1e-15);
    }

    #[test]
    fn weightless_tool_has_flat_margin() {
        let (m, mut s) = nominal();
        s.g_tool = 0.0;
        for g in [0.0, 0.3, 1.2, FRAC_PI_2] {
            assert!((torque_margin(&m, &s, g).unwrap() - 2.0 * 0.01 * 0.5 * 40.0).abs() < 1e-15);
        }
        let curve = gamma_sweep(&m, &s, 31).unwrap();
        assert_eq!(curve.peak_gamma, 0.0);
        assert!((curve.peak_margin - 0.4).abs() < 1e-15);
    }

    #[test]
    fn nominal_values_match_independent_evaluation() {
        // Frozen from tests/oracle/derive_values.py.
        let (m, s) = nominal();
        let expected = [
            (0.0, 0.3872983346207417),
            (15.0, 0.310516460026995),
            (23.0, 0.27204497801422123),
            (45.0, 0.18156835934462634),
            (60.0, 0.13705507552435703),
            (90.0, 0.10000000000000003),
        ];
        for (deg, want) in expected {
            let got = torque_margin(&m, &s, f64::to_radians(deg)).unwrap();
            assert!((got - want).abs() <= 1e-12 * want, "{deg}: {got} vs {want}");
        }
    }

    #[test]
    fn two_samples_pick_the_larger_endpoint() {
        let (m, s) = nominal();
        let curve = gamma_sweep(&m, &s, 2).unwrap();
        assert_eq!(curve.samples.len(), 2);
        assert_eq!(curve.peak_gamma, 0.0);
        let (m, mut s) = nominal();
        s.d_com = 0.0;
        let curve = gamma_sweep(&m, &s, 2).unwrap();
        assert_eq!(curve.peak_gamma, FRAC_PI_2);
    }

    #[test]
    fn parabolic_peak_recovers_vertex() {
        // y = 1 - (x - 0.37)^2 sampled every 0.1
        let samples: Vec<MarginSample> = (0..8)
            .map(|i| {
                let x = i as f64 * 0.1;
                MarginSample {
                    gamma: x,
                    margin: Some(1.0 - (x - 0.37) * (x - 0.37)),
                }
            })
            .collect();
        let (x, y) = locate_peak(&samples).unwrap();
        assert!((x - 0.37).abs() < 1e-12, "{x}");
        assert!((y - 1.0).abs() < 1e-12, "{y}");
    }

    #[test]
    fn peak_skips_sentinels() {
        let samples = [
            MarginSample {
                gamma: 0.0,
                margin: None,
            },
            MarginSample {
                gamma: 0.1,
                margin: Some(2.0),
            },
            MarginSample {
                gamma: 0.2,
                margin: Some(1.0),
            },
        ];
        assert_eq!(locate_peak(&samples), Some((0.1, 2.0)));
        assert_eq!(locate_peak(&samples[..1]), None);
    }

    #[test]
    fn infeasible_samples_become_sentinels() {
        let m = ContactModel::new(0.5, 0.01).unwrap();
        let s = GraspState {
            f_n: 8.0,
            ..nominal().1
        };
        // cos γ · 5 > 4 for γ < 36.87°
        assert!(matches!(
            torque_margin(&m, &s, 0.0),
            Err(Error::ZeroCapacity { .. })
        ));
        let curve = gamma_sweep(&m, &s, 10).unwrap();
        assert!(curve.samples[0].margin.is_none());
        assert!(curve.samples[9].margin.is_some());
        assert!(gamma_sweep(&m, &s, 1).is_err());
    }
}
