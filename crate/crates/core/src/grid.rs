//! Sweep ranges (`start:stop:step`) and search bounds (`lo:hi`), with an
//! optional `deg` suffix for angles.

use std::f64::consts::PI;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A stop value within this many steps of a grid point is treated as landing
/// on it.
const LANDING_TOLERANCE: f64 = 1e-12;

const DEG: f64 = PI / 180.0;

/// Splits a trailing `deg`/`rad` unit off `text` and returns the body with its
/// scale to radians (or to the native unit when no suffix is present).
fn split_unit(text: &str) -> (&str, f64) {
    let text = text.trim();
    if let Some(body) = text.strip_suffix("deg") {
        (body.trim_end(), DEG)
    } else if let Some(body) = text.strip_suffix("rad") {
        (body.trim_end(), 1.0)
    } else {
        (text, 1.0)
    }
}

fn number(text: &str, whole: &str) -> Result<f64> {
    let v: f64 = text
        .trim()
        .parse()
        .map_err(|_| Error::Usage(format!("malformed number {text:?} in {whole:?}")))?;
    if !v.is_finite() {
        return Err(Error::Usage(format!("non-finite value in {whole:?}")));
    }
    Ok(v)
}

/// Inclusive arithmetic grid. Values are kept in the unit they were written in
/// and scaled on output.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRange {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
    /// Multiplier applied to every value (π/180 for degree input).
    pub scale: f64,
}

impl SweepRange {
    pub fn new(start: f64, stop: f64, step: f64) -> Result<Self> {
        let range = SweepRange {
            start,
            stop,
            step,
            scale: 1.0,
        };
        range.check()?;
        Ok(range)
    }

    pub fn single(value: f64) -> Self {
        SweepRange {
            start: value,
            stop: value,
            step: 1.0,
            scale: 1.0,
        }
    }

    fn check(&self) -> Result<()> {
        if !(self.start.is_finite() && self.stop.is_finite()) {
            return Err(Error::Usage("range endpoints must be finite".into()));
        }
        if !(self.step.is_finite() && self.step > 0.0) {
            return Err(Error::Usage(format!(
                "range step must be positive, got {}",
                self.step
            )));
        }
        if self.stop < self.start {
            return Err(Error::Usage(format!(
                "range stop {} precedes start {}",
                self.stop, self.start
            )));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.layout().0
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of points and whether the stop value itself is one of them.
    fn layout(&self) -> (usize, bool) {
        let steps = (self.stop - self.start) / self.step;
        let nearest = steps.round();
        if (steps - nearest).abs() <= LANDING_TOLERANCE * steps.abs().max(1.0) {
            (nearest as usize + 1, true)
        } else {
            (steps.floor() as usize + 1, false)
        }
    }

    pub fn values(&self) -> Vec<f64> {
        let (count, lands) = self.layout();
        (0..count)
            .map(|i| {
                let raw = if lands && i + 1 == count {
                    self.stop
                } else {
                    self.start + i as f64 * self.step
                };
                raw * self.scale
            })
            .collect()
    }
}

impl FromStr for SweepRange {
    type Err = Error;

    /// Accepts `start:stop:step` or a single value, each optionally followed
    /// by `deg`.
    fn from_str(text: &str) -> Result<Self> {
        let (body, scale) = split_unit(text);
        let parts: Vec<&str> = body.split(':').collect();
        let range = match parts.as_slice() {
            [single] => {
                let v = number(single, text)?;
                SweepRange::single(v)
            }
            [start, stop, step] => SweepRange {
                start: number(start, text)?,
                stop: number(stop, text)?,
                step: number(step, text)?,
                scale: 1.0,
            },
            _ => {
                return Err(Error::Usage(format!(
                    "expected start:stop:step, got {text:?}"
                )))
            }
        };
        range.check()?;
        Ok(SweepRange { scale, ..range })
    }
}

/// Closed search interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
            return Err(Error::Usage(format!("empty interval [{lo}, {hi}]")));
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(value: f64) -> Self {
        Interval {
            lo: value,
            hi: value,
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.lo && x <= self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    /// `n` evenly spaced points including both ends (one point if degenerate).
    pub fn linspace(&self, n: usize) -> Vec<f64> {
        if n <= 1 || self.width() == 0.0 {
            return vec![self.lo];
        }
        let step = self.width() / (n - 1) as f64;
        (0..n)
            .map(|i| {
                if i + 1 == n {
                    self.hi
                } else {
                    self.lo + i as f64 * step
                }
            })
            .collect()
    }
}

impl FromStr for Interval {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let (body, scale) = split_unit(text);
        match body.split(':').collect::<Vec<_>>().as_slice() {
            [lo, hi] => Interval::new(number(lo, text)? * scale, number(hi, text)? * scale),
            [single] => Ok(Interval::point(number(single, text)? * scale)),
            _ => Err(Error::Usage(format!("expected lo:hi, got {text:?}"))),
        }
    }
}
