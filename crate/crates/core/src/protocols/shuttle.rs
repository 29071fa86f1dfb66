// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! X gates on a spin shuttled across a g-factor landscape.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::drive::{drive_single_spin, DrivePlan, DriveTone, Frame};
use crate::error::{Error, Result};
use crate::landscape::{path_mean, GFactorLandscape, ShuttleTrajectory};
use crate::qdyn::{average_fidelity, gates, ComplexUnitary, DEFAULT_STEPS};
use crate::units::larmor;

/// Choice of drive frequency for a shuttled spin.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum DriveMode {
    /// Path-averaged splitting `ḡ B0` (needs the landscape).
    I,
    /// Device-average splitting `g0 B0`.
    II,
    /// An explicit carrier, rad/s.
    Fixed { omega: f64 },
}

/// Dot-averaged g at the midpoints of `n_steps` equal steps of `[0, t]`.
pub fn g_along_path(
    l: &GFactorLandscape,
    traj: &ShuttleTrajectory,
    duration: f64,
    n_steps: usize,
) -> Result<Vec<f64>> {
    let dt = duration / n_steps as f64;
    (0..n_steps)
        .map(|k| l.dot_average(traj.position((k as f64 + 0.5) * dt)))
        .collect()
}

/// Maps a midpoint time back to its step index.
#[inline]
pub(crate) fn step_index(t: f64, dt: f64, n: usize) -> usize {
    ((t / dt - 0.5).round().max(0.0) as usize).min(n - 1)
}

/// Propagates a spin with splitting `larmor(g(x(t)), b0) + shift` under
/// `plan`. With `scale_rabi`, tone amplitudes follow `g(x(t)) / g0`.
#[allow(clippy::too_many_arguments)]
pub fn shuttled_spin_unitary(
    l: &GFactorLandscape,
    traj: &ShuttleTrajectory,
    b0: f64,
    shift: f64,
    plan: &DrivePlan,
    frame: Frame,
    scale_rabi: bool,
    n_steps: usize,
) -> Result<ComplexUnitary> {
    if n_steps == 0 {
        return Err(Error::arg("n_steps must be at least 1"));
    }
    let g = g_along_path(l, traj, plan.gate_time, n_steps)?;
    let dt = plan.gate_time / n_steps as f64;
    let g0 = l.g0();
    let q = |t: f64| larmor(g[step_index(t, dt, n_steps)], b0) + shift;
    let s = |t: f64| {
        if scale_rabi {
            g[step_index(t, dt, n_steps)] / g0
        } else {
            1.0
        }
    };
    drive_single_spin(q, s, plan, frame, n_steps)
}

/// A resonant-amplitude X gate on a shuttled spin.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShuttleGate {
    /// T.
    pub b0: f64,
    /// rad/s.
    pub rabi: f64,
    pub phase: f64,
    pub mode: DriveMode,
    /// Added to the spin splitting, rad/s.
    pub shift: f64,
    pub frame: Frame,
    /// Scale the drive with local g, gate time `π / Ω̄`.
    pub scale_rabi: bool,
    pub n_steps: usize,
}

impl ShuttleGate {
    pub fn new(b0: f64, rabi: f64, mode: DriveMode) -> Self {
        ShuttleGate {
            b0,
            rabi,
            phase: 0.0,
            mode,
            shift: 0.0,
            frame: Frame::Rotating,
            scale_rabi: false,
            n_steps: DEFAULT_STEPS,
        }
    }

    fn nominal_time(&self) -> f64 {
        PI / self.rabi
    }

    /// Carrier frequency, rad/s.
    pub fn drive_frequency(&self, l: &GFactorLandscape, traj: &ShuttleTrajectory) -> Result<f64> {
        Ok(match self.mode {
            DriveMode::I => larmor(path_mean(l, traj, self.nominal_time())?, self.b0) + self.shift,
            DriveMode::II => larmor(l.g0(), self.b0) + self.shift,
            DriveMode::Fixed { omega } => omega,
        })
    }

    pub fn plan(&self, l: &GFactorLandscape, traj: &ShuttleTrajectory) -> Result<DrivePlan> {
        if !(self.rabi > 0.0) || !(self.b0 > 0.0) {
            return Err(Error::arg("Rabi frequency and B0 must be positive"));
        }
        let tone = DriveTone {
            omega: self.drive_frequency(l, traj)?,
            rabi: self.rabi,
            phase: self.phase,
        };
        let mut plan = DrivePlan::single(tone);
        if self.scale_rabi {
            let g_bar = path_mean(l, traj, self.nominal_time())?;
            plan.gate_time = PI / (self.rabi * g_bar / l.g0());
        }
        Ok(plan)
    }

    pub fn unitary(
        &self,
        l: &GFactorLandscape,
        traj: &ShuttleTrajectory,
    ) -> Result<ComplexUnitary> {
        let plan = self.plan(l, traj)?;
        shuttled_spin_unitary(
            l,
            traj,
            self.b0,
            self.shift,
            &plan,
            self.frame,
            self.scale_rabi,
            self.n_steps,
        )
    }

    /// `1 - F(U, X)` after Z stripping.
    pub fn infidelity(&self, l: &GFactorLandscape, traj: &ShuttleTrajectory) -> Result<f64> {
        let u = self.unitary(l, traj)?;
        Ok(1.0 - average_fidelity(&u, &gates::x(), 1, true)?)
    }
}

/// Infidelity of a shuttled X gate at Rabi frequency `rabi` driven per
/// `mode` in the rotating frame.
pub fn shuttled_x_gate_sim(
    l: &GFactorLandscape,
    traj: &ShuttleTrajectory,
    rabi: f64,
    b0: f64,
    mode: DriveMode,
) -> Result<f64> {
    ShuttleGate::new(b0, rabi, mode).infidelity(l, traj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::landscape::{sample_ou, OUParams, TRACK_MARGIN};
    use crate::units::{mhz, UM};

    #[test]
    fn flat_landscape_is_perfect_in_both_modes() {
        let d = 1.0 * UM;
        let l = sample_ou(&OUParams::new(0.0, d + 2.0 * TRACK_MARGIN, 1)).unwrap();
        let tr = ShuttleTrajectory::triangle(d, 10.0, TRACK_MARGIN + d / 2.0).unwrap();
        for mode in [DriveMode::I, DriveMode::II] {
            let inf = shuttled_x_gate_sim(&l, &tr, mhz(5.0), 0.1, mode).unwrap();
            assert!(inf < 1e-8, "{mode:?}: {inf}");
        }
    }

    #[test]
    fn leaving_the_track_is_a_range_error() {
        let l = sample_ou(&OUParams::new(1e-3, 0.5 * UM, 1)).unwrap();
        let tr = ShuttleTrajectory::triangle(1.0 * UM, 10.0, 0.25 * UM).unwrap();
        let r = shuttled_x_gate_sim(&l, &tr, mhz(5.0), 0.1, DriveMode::II);
        assert!(matches!(r, Err(Error::Range(_))));
    }

    #[test]
    fn step_index_inverts_midpoints() {
        let dt = 1e-11;
        for k in [0usize, 1, 17, 9_999] {
            assert_eq!(step_index((k as f64 + 0.5) * dt, dt, 10_000), k);
        }
    }
}
