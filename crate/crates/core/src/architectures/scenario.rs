// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! Device scenarios: which qubits exist, where they move and what they see.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::landscape::ou::DEFAULT_G0;
use crate::landscape::{
    path_mean, sample_ou, sample_ou_periodic, GFactorLandscape, OUParams, ShuttleTrajectory,
    TRACK_MARGIN,
};
use crate::protocols::{nearest_sync_p, sync_omega, SyncKind};
use crate::units::{larmor, mhz, UM};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArchitectureKind {
    /// Targets shuttled on the top row, non-targets on the bottom row.
    TwoByN,
    /// Qubits circulating around loops, one landscape per loop.
    LoopedPipeline,
    /// Parked qubits, as used by the binning baseline.
    Static,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArchitectureConfig {
    pub kind: ArchitectureKind,
    pub n_t: usize,
    pub n_n: usize,
    /// T.
    pub b0: f64,
    /// Relative spread `Δg / g0`.
    pub delta_g: f64,
    /// Dimensionless g shift of the target row.
    pub g_shift: f64,
    /// One-way distance or loop circumference, m.
    pub d: f64,
    /// m/s.
    pub v: f64,
    /// rad/s.
    pub rabi_nominal: f64,
    pub qubits_per_loop: usize,
    pub loops: usize,
}

impl ArchitectureConfig {
    /// 2×N array with `n_n = n_t - 2`, `G B0 = 2π·300 MHz` at 0.1 T.
    pub fn two_by_n(n_t: usize) -> Self {
        let b0 = 0.1;
        ArchitectureConfig {
            kind: ArchitectureKind::TwoByN,
            n_t,
            n_n: n_t.saturating_sub(2),
            b0,
            delta_g: 1e-3,
            g_shift: mhz(300.0) / larmor(1.0, b0),
            d: 3.0 * UM,
            v: 10.0,
            rabi_nominal: mhz(5.0),
            qubits_per_loop: 1,
            loops: 0,
        }
    }

    /// `loops` loops of circumference 20 μm with `qubits_per_loop` each, all
    /// targets.
    pub fn looped(loops: usize, qubits_per_loop: usize) -> Self {
        ArchitectureConfig {
            kind: ArchitectureKind::LoopedPipeline,
            n_t: loops * qubits_per_loop,
            n_n: 0,
            g_shift: 0.0,
            d: 20.0 * UM,
            v: 50.0,
            qubits_per_loop,
            loops,
            ..Self::two_by_n(2)
        }
    }

    /// Parked qubits at 1 T with `Δg = 10⁻² g0`.
    pub fn binning(n_t: usize) -> Self {
        ArchitectureConfig {
            kind: ArchitectureKind::Static,
            b0: 1.0,
            delta_g: 1e-2,
            g_shift: 0.0,
            ..Self::two_by_n(n_t)
        }
    }

    pub fn g0(&self) -> f64 {
        DEFAULT_G0
    }

    /// Target-row shift as a frequency, rad/s.
    pub fn gap(&self) -> f64 {
        larmor(self.g_shift, self.b0)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_t == 0 {
            return Err(Error::arg("need at least one target"));
        }
        if !(self.b0 > 0.0 && self.rabi_nominal > 0.0 && self.delta_g >= 0.0 && self.g_shift >= 0.0)
        {
            return Err(Error::arg(
                "B0, Rabi frequency must be positive; Δg, G non-negative",
            ));
        }
        if self.kind != ArchitectureKind::Static && !(self.d > 0.0 && self.v > 0.0) {
            return Err(Error::arg("d and v must be positive"));
        }
        match self.kind {
            ArchitectureKind::TwoByN if self.n_n > 0 && !(self.g_shift > 0.0) => {
                Err(Error::arg("non-targets need a positive row shift G"))
            }
            ArchitectureKind::LoopedPipeline if self.n_n != 0 => {
                Err(Error::arg("looped pipeline has no non-targets"))
            }
            ArchitectureKind::LoopedPipeline
                if self.qubits_per_loop == 0 || self.n_t != self.loops * self.qubits_per_loop =>
            {
                Err(Error::arg(format!(
                    "n_t = {} must equal loops × qubits_per_loop = {} × {}",
                    self.n_t, self.loops, self.qubits_per_loop
                )))
            }
            _ => Ok(()),
        }
    }

    /// Rabi frequency for the shuttle plan: synchronised with the row gap
    /// when non-targets are present.
    pub fn shuttle_rabi(&self) -> Result<f64> {
        if self.n_n == 0 {
            return Ok(self.rabi_nominal);
        }
        let gap = self.gap();
        sync_omega(
            gap,
            nearest_sync_p(gap, self.rabi_nominal, SyncKind::TwoFrequency)?,
            SyncKind::TwoFrequency,
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct QubitRecord {
    pub seed: u64,
    pub landscape: GFactorLandscape,
    pub trajectory: ShuttleTrajectory,
    /// Dimensionless g shift of the qubit's track.
    pub g_shift: f64,
    pub is_target: bool,
    /// Row (2×N) or loop index.
    pub group: usize,
    /// `(ḡ + g_shift) B0` over the gate, rad/s.
    pub effective_frequency: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Scenario {
    pub config: ArchitectureConfig,
    pub seed: u64,
    /// Rabi frequency the effective frequencies were averaged for, rad/s.
    pub rabi: f64,
    pub qubits: Vec<QubitRecord>,
}

impl Scenario {
    pub fn gate_time(&self) -> f64 {
        PI / self.rabi
    }

    pub fn targets(&self) -> impl Iterator<Item = &QubitRecord> {
        self.qubits.iter().filter(|q| q.is_target)
    }

    pub fn n_q(&self) -> usize {
        self.qubits.len()
    }
}

/// SplitMix64 finaliser; derives independent sub-seeds from one trial seed.
pub fn mix_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(0x9E37_79B9_7F4A_7C15u64.wrapping_mul(index.wrapping_add(1)));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[allow(clippy::too_many_arguments)]
fn record(
    cfg: &ArchitectureConfig,
    seed: u64,
    landscape: GFactorLandscape,
    trajectory: ShuttleTrajectory,
    g_shift: f64,
    is_target: bool,
    group: usize,
    gate_time: f64,
) -> Result<QubitRecord> {
    let g_bar = path_mean(&landscape, &trajectory, gate_time)?;
    Ok(QubitRecord {
        seed,
        effective_frequency: larmor(g_bar + g_shift, cfg.b0),
        landscape,
        trajectory,
        g_shift,
        is_target,
        group,
    })
}

/// Targets on the top row with shift `G`, non-targets on the bottom row;
/// every qubit gets its own landscape segment.
pub fn build_2xn_scenario(cfg: &ArchitectureConfig, seed: u64) -> Result<Scenario> {
    if cfg.kind != ArchitectureKind::TwoByN {
        return Err(Error::arg("build_2xn_scenario needs a two_by_n config"));
    }
    cfg.validate()?;
    let rabi = cfg.shuttle_rabi()?;
    let t = PI / rabi;
    let mut qubits = Vec::with_capacity(cfg.n_t + cfg.n_n);
    for i in 0..cfg.n_t + cfg.n_n {
        let is_target = i < cfg.n_t;
        let s = mix_seed(seed, i as u64);
        let l = sample_ou(&OUParams::new(cfg.delta_g, cfg.d + 2.0 * TRACK_MARGIN, s))?;
        let tr = ShuttleTrajectory::triangle(cfg.d, cfg.v, TRACK_MARGIN + cfg.d / 2.0)?;
        let shift = if is_target { cfg.g_shift } else { 0.0 };
        qubits.push(record(
            cfg,
            s,
            l,
            tr,
            shift,
            is_target,
            usize::from(!is_target),
            t,
        )?);
    }
    Ok(Scenario {
        config: *cfg,
        seed,
        rabi,
        qubits,
    })
}

/// Qubits of a loop share its landscape, starting `d / qubits_per_loop`
/// apart.
pub fn build_loop_scenario(cfg: &ArchitectureConfig, seed: u64) -> Result<Scenario> {
    if cfg.kind != ArchitectureKind::LoopedPipeline {
        return Err(Error::arg(
            "build_loop_scenario needs a looped_pipeline config",
        ));
    }
    cfg.validate()?;
    let rabi = cfg.shuttle_rabi()?;
    let t = PI / rabi;
    let mut qubits = Vec::with_capacity(cfg.n_t);
    for k in 0..cfg.loops {
        let s = mix_seed(seed, k as u64);
        let l = sample_ou_periodic(&OUParams::new(cfg.delta_g, cfg.d, s))?;
        let circ = l.extent();
        for m in 0..cfg.qubits_per_loop {
            let start = circ * m as f64 / cfg.qubits_per_loop as f64;
            let tr = ShuttleTrajectory::looped(circ, cfg.v, start)?;
            qubits.push(record(cfg, s, l.clone(), tr, 0.0, true, k, t)?);
        }
    }
    Ok(Scenario {
        config: *cfg,
        seed,
        rabi,
        qubits,
    })
}

/// Parked qubits, each on its own short landscape; `d` and `v` are ignored.
pub fn build_static_scenario(cfg: &ArchitectureConfig, seed: u64) -> Result<Scenario> {
    if cfg.kind != ArchitectureKind::Static {
        return Err(Error::arg("build_static_scenario needs a static config"));
    }
    cfg.validate()?;
    let mut qubits = Vec::with_capacity(cfg.n_t + cfg.n_n);
    for i in 0..cfg.n_t + cfg.n_n {
        let s = mix_seed(seed, i as u64);
        let l = sample_ou(&OUParams::new(cfg.delta_g, 2.0 * TRACK_MARGIN, s))?;
        let tr = ShuttleTrajectory::fixed(TRACK_MARGIN);
        let is_target = i < cfg.n_t;
        qubits.push(record(cfg, s, l, tr, 0.0, is_target, 0, 1.0)?);
    }
    Ok(Scenario {
        config: *cfg,
        seed,
        rabi: cfg.rabi_nominal,
        qubits,
    })
}

pub fn build_scenario(cfg: &ArchitectureConfig, seed: u64) -> Result<Scenario> {
    match cfg.kind {
        ArchitectureKind::TwoByN => build_2xn_scenario(cfg, seed),
        ArchitectureKind::LoopedPipeline => build_loop_scenario(cfg, seed),
        ArchitectureKind::Static => build_static_scenario(cfg, seed),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_n_counts_and_shifts() {
        let s = build_2xn_scenario(&ArchitectureConfig::two_by_n(3), 1).unwrap();
        assert_eq!(s.targets().count(), 3);
        assert_eq!(s.n_q(), 4);
        assert!(s.qubits.iter().all(|q| (q.g_shift > 0.0) == q.is_target));
    }

    #[test]
    fn deterministic_in_seed() {
        let c = ArchitectureConfig::two_by_n(4);
        let a = build_2xn_scenario(&c, 9).unwrap();
        let b = build_2xn_scenario(&c, 9).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, build_2xn_scenario(&c, 10).unwrap());
    }

    #[test]
    fn surface_code_loops() {
        let c = ArchitectureConfig::looped(9, 2);
        assert_eq!(c.n_t, 18);
        let s = build_loop_scenario(&c, 3).unwrap();
        assert_eq!(s.n_q(), 18);
        assert_eq!(s.qubits[0].landscape, s.qubits[1].landscape);
        assert_ne!(s.qubits[0].landscape, s.qubits[2].landscape);
    }

    #[test]
    fn full_turn_members_share_frequency() {
        let mut c = ArchitectureConfig::looped(2, 3);
        c.d = 5.0 * UM;
        let s = build_loop_scenario(&c, 5).unwrap();
        // vT = 5 μm: each member completes exactly one turn
        let w0 = s.qubits[0].effective_frequency;
        for q in &s.qubits[..3] {
            assert!(((q.effective_frequency - w0) / w0).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_bad_configs() {
        let mut c = ArchitectureConfig::looped(3, 2);
        c.n_t = 5;
        assert!(build_loop_scenario(&c, 0).is_err());
        assert!(build_2xn_scenario(&ArchitectureConfig::two_by_n(0), 0).is_err());
        assert!(build_2xn_scenario(&ArchitectureConfig::looped(1, 1), 0).is_err());
    }

    #[test]
    fn sync_rabi_only_with_non_targets() {
        let c = ArchitectureConfig::two_by_n(8);
        assert!((crate::units::to_mhz(c.shuttle_rabi().unwrap()) - 5.0007).abs() < 1e-4);
        let l = ArchitectureConfig::looped(9, 1);
        assert_eq!(l.shuttle_rabi().unwrap(), l.rabi_nominal);
    }
}
