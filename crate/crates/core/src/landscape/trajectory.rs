// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! Deterministic shuttle trajectories and path-averaged g-factors.

use serde::{Deserialize, Serialize};

use super::ou::{sample_ou, GFactorLandscape, OUParams, DEFAULT_DOT_SIGMA};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TrajectoryKind {
    /// Back and forth over `d`, starting at `origin + d/2` heading down.
    Triangle,
    /// `(origin + v t) mod d` around a loop of circumference `d`.
    Loop,
    /// Fixed at `origin`.
    Static,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShuttleTrajectory {
    pub kind: TrajectoryKind,
    /// One-way distance or loop circumference, m.
    pub d: f64,
    /// Speed, m/s.
    pub v: f64,
    /// Landscape coordinate of the centre (triangle), start (loop) or
    /// position (static), m.
    pub origin: f64,
}

impl ShuttleTrajectory {
    pub fn triangle(d: f64, v: f64, centre: f64) -> Result<Self> {
        Self::new(TrajectoryKind::Triangle, d, v, centre)
    }

    pub fn looped(circumference: f64, v: f64, start: f64) -> Result<Self> {
        Self::new(TrajectoryKind::Loop, circumference, v, start)
    }

    pub fn fixed(position: f64) -> Self {
        ShuttleTrajectory {
            kind: TrajectoryKind::Static,
            d: 0.0,
            v: 0.0,
            origin: position,
        }
    }

    pub fn new(kind: TrajectoryKind, d: f64, v: f64, origin: f64) -> Result<Self> {
        if !(v >= 0.0 && v.is_finite()) {
            return Err(Error::arg(format!("speed must be >= 0, got {v}")));
        }
        if kind != TrajectoryKind::Static && !(d > 0.0 && d.is_finite()) {
            return Err(Error::arg(format!("distance must be positive, got {d}")));
        }
        if !origin.is_finite() {
            return Err(Error::arg("origin must be finite"));
        }
        Ok(ShuttleTrajectory { kind, d, v, origin })
    }

    /// Landscape coordinate at time `t`.
    pub fn position(&self, t: f64) -> f64 {
        match self.kind {
            TrajectoryKind::Static => self.origin,
            TrajectoryKind::Loop => (self.origin + self.v * t).rem_euclid(self.d),
            TrajectoryKind::Triangle => {
                if self.v == 0.0 {
                    return self.origin + self.d / 2.0;
                }
                let period = 2.0 * self.d / self.v;
                let tau = t.rem_euclid(period);
                let x = if tau < self.d / self.v {
                    self.d / 2.0 - self.v * tau
                } else {
                    -1.5 * self.d + self.v * tau
                };
                self.origin + x
            }
        }
    }

    /// Repetition period, if the motion is periodic.
    pub fn period(&self) -> Option<f64> {
        match self.kind {
            TrajectoryKind::Static => None,
            _ if self.v == 0.0 => None,
            TrajectoryKind::Loop => Some(self.d / self.v),
            TrajectoryKind::Triangle => Some(2.0 * self.d / self.v),
        }
    }
}

/// Number and width of midpoint-rule time steps for a path average over
/// `duration`: step `min(dx / v, duration / 1000)`.
pub fn quadrature_steps(dx: f64, v: f64, duration: f64) -> (usize, f64) {
    let mut h = duration / 1000.0;
    if v > 0.0 {
        h = h.min(dx / v);
    }
    let n = ((duration / h) - 1e-9).ceil().max(1.0) as usize;
    (n, duration / n as f64)
}

/// Time average of the dot-averaged g along `traj` over `[0, duration]`.
pub fn path_mean(l: &GFactorLandscape, traj: &ShuttleTrajectory, duration: f64) -> Result<f64> {
    if traj.kind == TrajectoryKind::Static {
        return l.dot_average(traj.origin);
    }
    path_mean_fn(l, |t| traj.position(t), traj.v, duration)
}

/// Midpoint-rule time average of the dot-averaged g along any path
/// `x(t)` with speed at most `v_max`.
pub fn path_mean_fn<X: Fn(f64) -> f64>(
    l: &GFactorLandscape,
    x: X,
    v_max: f64,
    duration: f64,
) -> Result<f64> {
    if !(duration > 0.0 && duration.is_finite()) {
        return Err(Error::arg(format!(
            "duration must be positive, got {duration}"
        )));
    }
    let (n, h) = quadrature_steps(l.dx(), v_max, duration);
    let mut acc = 0.0;
    for k in 0..n {
        acc += l.dot_average(x((k as f64 + 0.5) * h))?;
    }
    Ok(acc / n as f64)
}

/// Landscape margin kept on each side of a triangle path, m.
pub const TRACK_MARGIN: f64 = 6.0 * DEFAULT_DOT_SIGMA;

/// Monte Carlo std of the full-period triangle path mean over a one-way
/// distance `d`, with landscape seeds `params.seed + trial`.
pub fn homogenised_sigma(params: &OUParams, d: f64, n_trials: usize) -> Result<f64> {
    if n_trials < 2 {
        return Err(Error::arg("homogenised_sigma needs at least two trials"));
    }
    if !(d >= 0.0 && d.is_finite()) {
        return Err(Error::arg(format!("distance must be >= 0, got {d}")));
    }
    let means = (0..n_trials)
        .map(|k| {
            let p = params
                .with_length(d + 2.0 * TRACK_MARGIN)
                .with_seed(params.seed.wrapping_add(k as u64));
            let l = sample_ou(&p)?;
            if d == 0.0 {
                return l.dot_average(TRACK_MARGIN);
            }
            let v = 1.0;
            let traj = ShuttleTrajectory::triangle(d, v, TRACK_MARGIN + d / 2.0)?;
            path_mean(&l, &traj, 2.0 * d / v)
        })
        .collect::<Result<Vec<f64>>>()?;
    let n = means.len() as f64;
    let mean = means.iter().sum::<f64>() / n;
    let var = means.iter().map(|m| (m - mean).powi(2)).sum::<f64>() / (n - 1.0);
    Ok(var.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::{NM, UM};

    #[test]
    fn triangle_branches() {
        let (d, v) = (2.0 * UM, 10.0);
        let tr = ShuttleTrajectory::triangle(d, v, 0.0).unwrap();
        assert_eq!(tr.position(0.0), d / 2.0);
        assert!((tr.position(d / v) + d / 2.0).abs() < 1e-18);
        assert!((tr.position(2.0 * d / v) - d / 2.0).abs() < 1e-18);
        assert!((tr.position(0.5 * d / v)).abs() < 1e-18);
    }

    #[test]
    fn loop_position() {
        let tr = ShuttleTrajectory::looped(5.0 * UM, 50.0, 0.0).unwrap();
        assert!((tr.position(2.5 * UM / 50.0) - 2.5 * UM).abs() < 1e-18);
        assert!(ShuttleTrajectory::looped(0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn static_path_mean_is_dot_average() {
        let l = sample_ou(&OUParams::new(1e-3, 300.0 * NM, 11)).unwrap();
        let x = 150.5 * NM;
        let g = path_mean(&l, &ShuttleTrajectory::fixed(x), 1e-6).unwrap();
        assert_eq!(g, l.dot_average(x).unwrap());
    }

    #[test]
    fn exiting_the_grid_is_a_range_error() {
        let l = sample_ou(&OUParams::new(1e-3, 300.0 * NM, 1)).unwrap();
        let tr = ShuttleTrajectory::triangle(400.0 * NM, 10.0, 150.0 * NM).unwrap();
        assert!(matches!(path_mean(&l, &tr, 1e-7), Err(Error::Range(_))));
    }
}
