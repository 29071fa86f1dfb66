// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! Driven CROT between two exchange-coupled spins on parallel shuttle
//! tracks, the second shifted by `G`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::shuttle::{g_along_path, step_index};
use crate::error::{Error, Result};
use crate::landscape::{path_mean, GFactorLandscape, ShuttleTrajectory};
use crate::qdyn::{
    constant_trace, crot_fidelity_virtual_z, pauli, propagate, CMatrix, ComplexUnitary,
    HamiltonianTrace, DEFAULT_STEPS,
};
use crate::units::larmor;

/// `J0 / (G B0)` above which the CROT regime is doubtful.
pub const WEAK_EXCHANGE_RATIO: f64 = 0.2;

/// `|10> <-> |11>` transition frequency for splittings `w1`, `w2` and
/// exchange `j`.
pub fn crot_resonance(w1: f64, w2: f64, j: f64) -> f64 {
    0.5 * (w1 + w2 - j + (j * j + (w1 - w2).powi(2)).sqrt())
}

/// Landscape-agnostic carrier `[(2 g0 + G) B0 - J0 + sqrt(J0² + (G B0)²)] / 2`.
pub fn omega_ii(g0: f64, g_shift: f64, b0: f64, j0: f64) -> f64 {
    crot_resonance(larmor(g0, b0), larmor(g0 + g_shift, b0), j0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CrotMode {
    /// Carrier from the two path means.
    I,
    /// Carrier from `g0` and `G` only.
    II,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrotConfig {
    /// T.
    pub b0: f64,
    /// Dimensionless shift of the second track.
    pub g_shift: f64,
    /// Constant exchange, rad/s.
    pub j0: f64,
    /// rad/s.
    pub rabi: f64,
    pub mode: CrotMode,
    pub n_steps: usize,
}

impl CrotConfig {
    pub fn new(b0: f64, g_shift: f64, j0: f64, rabi: f64) -> Self {
        CrotConfig {
            b0,
            g_shift,
            j0,
            rabi,
            mode: CrotMode::II,
            n_steps: DEFAULT_STEPS,
        }
    }

    /// Shift from a target frequency gap `G B0` (rad/s).
    pub fn from_gap(b0: f64, gap: f64, j0: f64, rabi: f64) -> Self {
        Self::new(b0, gap / larmor(1.0, b0), j0, rabi)
    }

    pub fn gap(&self) -> f64 {
        larmor(self.g_shift, self.b0)
    }

    pub fn gate_time(&self) -> f64 {
        PI / self.rabi
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.b0 > 0.0 && self.rabi > 0.0 && self.j0 >= 0.0) {
            return Err(Error::arg(
                "B0 and Rabi frequency must be positive, J0 >= 0",
            ));
        }
        if !(self.g_shift > 0.0 && self.g_shift.is_finite()) {
            return Err(Error::arg("track shift G must be positive"));
        }
        if self.n_steps == 0 {
            return Err(Error::arg("n_steps must be at least 1"));
        }
        let ratio = self.j0 / self.gap();
        if ratio > WEAK_EXCHANGE_RATIO {
            log::warn!(
                "J0 / (G B0) = {ratio:.3} exceeds {WEAK_EXCHANGE_RATIO}; CROT selectivity is poor"
            );
        }
        Ok(())
    }
}

/// Rotating-frame two-spin Hamiltonian for splittings detuned by `d1`, `d2`
/// from the carrier.
fn crot_hamiltonian(d1: f64, d2: f64, j0: f64, rabi: f64) -> CMatrix {
    let (id, x, z) = (pauli::id(), pauli::x(), pauli::z());
    z.kron(&id).scale_re(d1 / 2.0)
        + id.kron(&z).scale_re(d2 / 2.0)
        + pauli::heisenberg().scale_re(j0 / 4.0)
        + (x.kron(&id) + id.kron(&x)).scale_re(rabi / 2.0)
}

/// Static spins at `w1`, `w2` (rad/s) driven at `carrier`.
pub fn static_crot_unitary(
    w1: f64,
    w2: f64,
    carrier: f64,
    cfg: &CrotConfig,
) -> Result<ComplexUnitary> {
    cfg.validate()?;
    let h = crot_hamiltonian(w1 - carrier, w2 - carrier, cfg.j0, cfg.rabi);
    propagate(&constant_trace(h, cfg.gate_time(), cfg.n_steps)?)
}

/// Infidelity of the static, exactly resonant CROT with splittings `g0 B0`
/// and `(g0 + G) B0`.
pub fn static_crot_residual(g0: f64, cfg: &CrotConfig) -> Result<f64> {
    let w1 = larmor(g0, cfg.b0);
    let w2 = larmor(g0 + cfg.g_shift, cfg.b0);
    let u = static_crot_unitary(w1, w2, crot_resonance(w1, w2, cfg.j0), cfg)?;
    Ok(1.0 - crot_fidelity_virtual_z(&u)?)
}

/// Shuttled CROT: both spins follow `traj` on their own landscapes; `l2`
/// carries the `G` shift. Returns the gate and its infidelity.
pub fn shuttled_crot_unitary(
    l1: &GFactorLandscape,
    l2: &GFactorLandscape,
    traj: &ShuttleTrajectory,
    cfg: &CrotConfig,
) -> Result<(ComplexUnitary, f64)> {
    cfg.validate()?;
    let t_gate = cfg.gate_time();
    let carrier = match cfg.mode {
        CrotMode::II => omega_ii(l1.g0(), cfg.g_shift, cfg.b0, cfg.j0),
        CrotMode::I => crot_resonance(
            larmor(path_mean(l1, traj, t_gate)?, cfg.b0),
            larmor(path_mean(l2, traj, t_gate)? + cfg.g_shift, cfg.b0),
            cfg.j0,
        ),
    };
    let n = cfg.n_steps;
    let g1 = g_along_path(l1, traj, t_gate, n)?;
    let g2 = g_along_path(l2, traj, t_gate, n)?;
    let dt = t_gate / n as f64;
    let (j0, rabi, b0, gs) = (cfg.j0, cfg.rabi, cfg.b0, cfg.g_shift);
    let h = |t: f64| {
        let k = step_index(t, dt, n);
        crot_hamiltonian(
            larmor(g1[k], b0) - carrier,
            larmor(g2[k] + gs, b0) - carrier,
            j0,
            rabi,
        )
    };
    let u = propagate(&HamiltonianTrace::new(4, t_gate, n, h)?)?;
    let f = crot_fidelity_virtual_z(&u)?;
    Ok((u, 1.0 - f))
}

pub fn shuttled_crot_sim(
    l1: &GFactorLandscape,
    l2: &GFactorLandscape,
    traj: &ShuttleTrajectory,
    cfg: &CrotConfig,
) -> Result<f64> {
    Ok(shuttled_crot_unitary(l1, l2, traj, cfg)?.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::mhz;

    #[test]
    fn resonance_limits() {
        let (w1, w2) = (mhz(2800.0), mhz(3800.0));
        assert!((crot_resonance(w1, w2, 0.0) - w2).abs() < 1e-3);
        let j = mhz(10.0);
        let w = crot_resonance(w1, w2, j);
        assert!(w < w2 && w > w2 - j);
    }

    #[test]
    fn static_residual_is_small_but_finite() {
        let cfg = CrotConfig::from_gap(0.1, mhz(1000.0), mhz(20.0), mhz(5.0));
        let r = static_crot_residual(2.0, &cfg).unwrap();
        assert!(r > 0.0 && r < 0.1, "{r}");
    }
}
