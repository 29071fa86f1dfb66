// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! Drive planners: one shuttle tone, or Stark-shifted bins with one tone per
//! occupied target bin.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::scenario::{ArchitectureKind, Scenario};
use crate::error::{Error, Result};
use crate::protocols::{nearest_sync_p, sync_omega, DrivePlan, DriveTone, SyncKind};
use crate::units::larmor;

/// Stark tuning range relative to the g-factor spread.
pub const STARK_FRACTION: f64 = 0.1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShuttleVariant {
    /// Residual spread left in place.
    SigmaPositive,
    /// Targets compensated onto the tone.
    SigmaZero,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShuttleDrivePlan {
    pub variant: ShuttleVariant,
    pub drive: DrivePlan,
    /// Extra splitting per qubit, rad/s.
    pub compensation: Vec<f64>,
}

/// Single tone at `(g0 + G) B0` (2×N) or `g0 B0` (loops) at the scenario's
/// Rabi frequency. `SigmaZero` moves every target's effective frequency
/// onto the tone.
pub fn plan_shuttle_drive(s: &Scenario, variant: ShuttleVariant) -> ShuttleDrivePlan {
    let cfg = &s.config;
    let g_tone = match cfg.kind {
        ArchitectureKind::TwoByN => cfg.g_shift,
        _ => 0.0,
    };
    let omega = larmor(cfg.g0() + g_tone, cfg.b0);
    let drive = DrivePlan {
        tones: vec![DriveTone::new(omega, s.rabi)],
        gate_time: s.gate_time(),
        rotating_frame: omega,
    };
    let compensation = s
        .qubits
        .iter()
        .map(|q| match variant {
            ShuttleVariant::SigmaZero if q.is_target => omega - q.effective_frequency,
            _ => 0.0,
        })
        .collect();
    ShuttleDrivePlan {
        variant,
        drive,
        compensation,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BinningPlan {
    /// Half the bin spacing and the Stark range, rad/s.
    pub delta_omega: f64,
    /// `g0 B0`, rad/s.
    pub omega0: f64,
    /// Bin index `k` of each qubit; its centre is `omega0 + 2 k delta_omega`.
    pub bins: Vec<i64>,
    /// Stark shift applied to each qubit, rad/s.
    pub shifts: Vec<f64>,
    pub p: u32,
    pub rabi: f64,
    pub tones: Vec<DriveTone>,
}

impl BinningPlan {
    pub fn centre(&self, k: i64) -> f64 {
        self.omega0 + 2.0 * k as f64 * self.delta_omega
    }

    pub fn gate_time(&self) -> f64 {
        PI / self.rabi
    }

    /// The tones, framed at qubit `i`'s bin.
    pub fn drive_for(&self, i: usize) -> DrivePlan {
        DrivePlan {
            tones: self.tones.clone(),
            gate_time: self.gate_time(),
            rotating_frame: self.centre(self.bins[i]),
        }
    }
}

/// Nearest bin index to `offset / (2 δω)`; exact halves go toward zero.
fn nearest_bin(x: f64) -> i64 {
    let r = x.round();
    if (x - x.trunc()).abs() == 0.5 {
        x.trunc() as i64
    } else {
        r as i64
    }
}

/// Stark-shifts each parked qubit onto its nearest bin and puts one tone on
/// every bin holding a target, at `Ω = δω / p`. A non-target sharing a
/// target's bin is a planning conflict.
pub fn plan_binning_drive(s: &Scenario, p: u32) -> Result<BinningPlan> {
    let cfg = &s.config;
    let g0 = cfg.g0();
    let delta_omega = larmor(STARK_FRACTION * cfg.delta_g * g0, cfg.b0);
    if !(delta_omega > 0.0) {
        return Err(Error::arg("binning needs a positive g-factor spread"));
    }
    let omega0 = larmor(g0, cfg.b0);
    let rabi = sync_omega(delta_omega, p, SyncKind::Bins)?;
    let mut bins = Vec::with_capacity(s.n_q());
    let mut shifts = Vec::with_capacity(s.n_q());
    for q in &s.qubits {
        let k = nearest_bin((q.effective_frequency - omega0) / (2.0 * delta_omega));
        let centre = omega0 + 2.0 * k as f64 * delta_omega;
        bins.push(k);
        shifts.push(centre - q.effective_frequency);
    }
    let target_bins: BTreeSet<i64> = s
        .qubits
        .iter()
        .zip(&bins)
        .filter(|(q, _)| q.is_target)
        .map(|(_, &k)| k)
        .collect();
    let clashes = s
        .qubits
        .iter()
        .zip(&bins)
        .filter(|(q, k)| !q.is_target && target_bins.contains(k))
        .count();
    if clashes > 0 {
        return Err(Error::PlanConflict(format!(
            "{clashes} non-target(s) share a bin with a target"
        )));
    }
    let tones = target_bins
        .iter()
        .map(|&k| DriveTone::new(omega0 + 2.0 * k as f64 * delta_omega, rabi))
        .collect();
    Ok(BinningPlan {
        delta_omega,
        omega0,
        bins,
        shifts,
        p,
        rabi,
        tones,
    })
}

/// Binning plan with `p` chosen so `Ω` is closest to the nominal Rabi
/// frequency.
pub fn plan_binning_drive_nominal(s: &Scenario) -> Result<BinningPlan> {
    let cfg = &s.config;
    let dw = larmor(STARK_FRACTION * cfg.delta_g * cfg.g0(), cfg.b0);
    plan_binning_drive(s, nearest_sync_p(dw, cfg.rabi_nominal, SyncKind::Bins)?)
}
