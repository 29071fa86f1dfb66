// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! Drive tones, multi-tone plans and the driven single-spin simulator.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qdyn::{pauli, propagate, CMatrix, ComplexUnitary, HamiltonianTrace};

/// One transverse drive tone; `rabi` is the angular Rabi frequency it
/// produces on resonance.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DriveTone {
    /// Carrier frequency, rad/s.
    pub omega: f64,
    /// Rabi frequency, rad/s.
    pub rabi: f64,
    /// Carrier phase, rad.
    #[serde(default)]
    pub phase: f64,
}

impl DriveTone {
    pub fn new(omega: f64, rabi: f64) -> Self {
        DriveTone {
            omega,
            rabi,
            phase: 0.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.omega > 0.0 && self.omega.is_finite()) {
            return Err(Error::arg(format!(
                "tone frequency must be positive, got {}",
                self.omega
            )));
        }
        if !(self.rabi > 0.0 && self.rabi.is_finite()) {
            return Err(Error::arg(format!(
                "Rabi frequency must be positive, got {}",
                self.rabi
            )));
        }
        if !self.phase.is_finite() {
            return Err(Error::arg("tone phase must be finite"));
        }
        Ok(())
    }
}

/// Tones applied together for `gate_time`, simulated in the frame rotating
/// at `rotating_frame`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DrivePlan {
    pub tones: Vec<DriveTone>,
    /// s.
    pub gate_time: f64,
    /// rad/s.
    pub rotating_frame: f64,
}

impl DrivePlan {
    /// A single tone lasting `pi / rabi`, in its own frame.
    pub fn single(tone: DriveTone) -> Self {
        DrivePlan {
            gate_time: PI / tone.rabi,
            rotating_frame: tone.omega,
            tones: vec![tone],
        }
    }

    /// Several tones sharing the Rabi frequency of the first, framed at the
    /// first tone.
    pub fn multi(tones: Vec<DriveTone>) -> Result<Self> {
        let first = *tones
            .first()
            .ok_or_else(|| Error::arg("drive plan needs a tone"))?;
        Ok(DrivePlan {
            gate_time: PI / first.rabi,
            rotating_frame: first.omega,
            tones,
        })
    }

    pub fn validate(&self) -> Result<()> {
        if self.tones.is_empty() {
            return Err(Error::arg("drive plan needs at least one tone"));
        }
        for t in &self.tones {
            t.validate()?;
        }
        if !(self.gate_time > 0.0 && self.gate_time.is_finite()) {
            return Err(Error::arg("gate time must be positive"));
        }
        if !self.rotating_frame.is_finite() {
            return Err(Error::arg("rotating frame must be finite"));
        }
        Ok(())
    }
}

/// Simulation frame for driven spins.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Frame {
    /// Rotating at the plan's reference frequency, counter-rotating terms
    /// dropped.
    #[default]
    Rotating,
    /// Full lab-frame drive `rabi cos(omega t + phase) σx`, reported in the
    /// rotating frame after the gate. Needs far more steps.
    Lab,
}

/// Propagates one spin with instantaneous splitting `omega_q(t)` (rad/s)
/// under `plan`. `rabi_scale(t)` multiplies every tone amplitude.
pub fn drive_single_spin<Q, S>(
    omega_q: Q,
    rabi_scale: S,
    plan: &DrivePlan,
    frame: Frame,
    n_steps: usize,
) -> Result<ComplexUnitary>
where
    Q: Fn(f64) -> f64,
    S: Fn(f64) -> f64,
{
    plan.validate()?;
    let w_ref = plan.rotating_frame;
    match frame {
        Frame::Rotating => {
            let h = |t: f64| {
                let bz = 0.5 * (omega_q(t) - w_ref);
                let s = 0.5 * rabi_scale(t);
                let (mut bx, mut by) = (0.0, 0.0);
                for tone in &plan.tones {
                    let a = (tone.omega - w_ref) * t + tone.phase;
                    let (sn, cs) = a.sin_cos();
                    bx += s * tone.rabi * cs;
                    by += s * tone.rabi * sn;
                }
                pauli::bloch(0.0, bx, by, bz)
            };
            propagate(&HamiltonianTrace::new(2, plan.gate_time, n_steps, h)?)
        }
        Frame::Lab => {
            let h = |t: f64| {
                let bz = 0.5 * omega_q(t);
                let s = rabi_scale(t);
                let bx: f64 = plan
                    .tones
                    .iter()
                    .map(|tone| s * tone.rabi * (tone.omega * t + tone.phase).cos())
                    .sum();
                pauli::bloch(0.0, bx, 0.0, bz)
            };
            let u = propagate(&HamiltonianTrace::new(2, plan.gate_time, n_steps, h)?)?;
            Ok(to_rotating_frame(&u, w_ref, plan.gate_time))
        }
    }
}

/// `exp(i w T σz / 2) U`, the lab propagator seen from a frame rotating at `w`.
pub fn to_rotating_frame(u: &ComplexUnitary, w: f64, t: f64) -> ComplexUnitary {
    let r = crate::qdyn::gates::rz(-w * t);
    r.compose(u)
}

/// σx-like rotating-frame drive matrix for tests and diagnostics.
pub fn rotating_drive_term(rabi: f64, phase: f64) -> CMatrix {
    let (s, c) = phase.sin_cos();
    pauli::bloch(0.0, 0.5 * rabi * c, 0.5 * rabi * s, 0.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qdyn::{average_fidelity, gates, DEFAULT_STEPS};
    use crate::units::mhz;

    #[test]
    fn resonant_single_tone_is_x() {
        let plan = DrivePlan::single(DriveTone::new(mhz(2800.0), mhz(5.0)));
        let u = drive_single_spin(
            |_| mhz(2800.0),
            |_| 1.0,
            &plan,
            Frame::Rotating,
            DEFAULT_STEPS,
        )
        .unwrap();
        let f = average_fidelity(&u, &gates::x(), 1, true).unwrap();
        assert!(1.0 - f < 1e-10, "{}", 1.0 - f);
    }

    #[test]
    fn lab_frame_agrees_with_rotating_frame() {
        // Low carrier keeps the lab-frame run cheap; Bloch–Siegert is
        // (rabi / 4 omega)^2-small.
        let w = mhz(400.0);
        let plan = DrivePlan::single(DriveTone::new(w, mhz(2.0)));
        let q = |_t: f64| w + mhz(0.3);
        let rot = drive_single_spin(q, |_| 1.0, &plan, Frame::Rotating, 20_000).unwrap();
        let lab = drive_single_spin(q, |_| 1.0, &plan, Frame::Lab, 400_000).unwrap();
        let fr = average_fidelity(&rot, &gates::x(), 1, true).unwrap();
        let fl = average_fidelity(&lab, &gates::x(), 1, true).unwrap();
        assert!((fr - fl).abs() < 1e-3, "{fr} vs {fl}");
    }

    #[test]
    fn empty_plan_rejected() {
        assert!(DrivePlan::multi(vec![]).is_err());
        assert!(DriveTone::new(1.0, 0.0).validate().is_err());
    }
}
