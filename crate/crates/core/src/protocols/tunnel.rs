// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! Tunnel-coupling homogenisation: one electron hopping in a double dot.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qdyn::{constant_trace, pauli, propagate, CMatrix, ComplexUnitary, DEFAULT_STEPS};

/// Charge-return overlap below which a run is flagged.
pub const CHARGE_RETURN_MIN: f64 = 0.999;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TunnelConfig {
    /// Right-dot minus left-dot spin splitting, rad/s.
    pub omega12: f64,
    /// Tunnel coupling, rad/s.
    pub t_c: f64,
    pub rabi: f64,
    /// Double-dot detuning, rad/s.
    pub epsilon: f64,
    pub p: u32,
    pub enforce: bool,
    pub n_steps: usize,
}

impl TunnelConfig {
    /// `t_c = 2 p rabi`, zero detuning.
    pub fn synchronised(omega12: f64, rabi: f64, p: u32) -> Self {
        TunnelConfig {
            omega12,
            t_c: 2.0 * p as f64 * rabi,
            rabi,
            epsilon: 0.0,
            p,
            enforce: true,
            n_steps: DEFAULT_STEPS,
        }
    }

    pub fn gate_time(&self) -> f64 {
        PI / self.rabi
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rabi > 0.0 && self.rabi.is_finite()) {
            return Err(Error::arg("Rabi frequency must be positive"));
        }
        if !(self.t_c.is_finite() && self.omega12.is_finite() && self.epsilon.is_finite()) {
            return Err(Error::arg("tunnel parameters must be finite"));
        }
        if self.enforce {
            let want = 2.0 * self.p as f64 * self.rabi;
            if self.p == 0 || (self.t_c - want).abs() > 1e-12 * want {
                return Err(Error::arg(format!(
                    "t_c = {} violates t_c = 2 p Ω with p = {}, Ω = {}",
                    self.t_c, self.p, self.rabi
                )));
            }
        }
        if self.n_steps == 0 {
            return Err(Error::arg("n_steps must be at least 1"));
        }
        Ok(())
    }

    /// Charge ⊗ spin Hamiltonian in the frame rotating at the mean
    /// splitting; charge index 0 is the left dot.
    pub fn hamiltonian(&self) -> CMatrix {
        let (id, x, z) = (pauli::id(), pauli::x(), pauli::z());
        z.kron(&z).scale_re(-self.omega12 / 4.0)
            + z.kron(&id).scale_re(self.epsilon)
            + x.kron(&id).scale_re(self.t_c)
            + id.kron(&x).scale_re(self.rabi / 2.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TunnelOutcome {
    pub unitary: ComplexUnitary,
    /// Spin infidelity against X on the left-dot block; charge leakage
    /// counts as error.
    pub infidelity: f64,
    /// `|<L|U|L>|_F^2 / 2`.
    pub charge_return: f64,
    pub charge_returned: bool,
}

pub fn tunnel_gate_sim(cfg: &TunnelConfig) -> Result<TunnelOutcome> {
    cfg.validate()?;
    let u = propagate(&constant_trace(
        cfg.hamiltonian(),
        cfg.gate_time(),
        cfg.n_steps,
    )?)?;
    let mut block = CMatrix::zeros(2);
    for r in 0..2 {
        for c in 0..2 {
            block[(r, c)] = u.get(r, c);
        }
    }
    let charge_return = block.frobenius_sq() / 2.0;
    let f = spin_block_fidelity(&block);
    Ok(TunnelOutcome {
        unitary: u,
        infidelity: 1.0 - f,
        charge_return,
        charge_returned: charge_return >= CHARGE_RETURN_MIN,
    })
}

/// X fidelity of the Z-stripped spin block, `(|b01| + |b10|)^2 / 4`. The
/// block need not be unitary, so leakage lowers the score.
fn spin_block_fidelity(b: &CMatrix) -> f64 {
    let tr = b[(0, 1)].norm() + b[(1, 0)].norm();
    (tr * tr / 4.0).clamp(0.0, 1.0)
}

/// Frequency shift gained by hopping between the dots relative to a Stark
/// range of `stark_fraction · Δω_q`: `1 / (2 stark_fraction)`.
pub fn tunability_gain(delta_g: f64, stark_fraction: f64) -> Result<f64> {
    if !(stark_fraction > 0.0) {
        return Err(Error::arg(format!(
            "stark_fraction must be positive, got {stark_fraction}"
        )));
    }
    if !(delta_g >= 0.0) {
        return Err(Error::arg("delta_g must be >= 0"));
    }
    Ok(1.0 / (2.0 * stark_fraction))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::mhz;

    #[test]
    fn degenerate_dots_are_perfect() {
        let out = tunnel_gate_sim(&TunnelConfig::synchronised(0.0, mhz(5.0), 50)).unwrap();
        assert!(out.infidelity < 1e-8);
        assert!(out.charge_returned);
    }

    #[test]
    fn off_condition_flags_charge() {
        let mut cfg = TunnelConfig::synchronised(mhz(5.0), mhz(5.0), 10);
        cfg.t_c *= 1.0 + 0.25 / 10.0;
        cfg.enforce = false;
        let out = tunnel_gate_sim(&cfg).unwrap();
        assert!(!out.charge_returned, "{}", out.charge_return);
    }

    #[test]
    fn gain_values() {
        assert!((tunability_gain(2e-3, 0.1).unwrap() - 5.0).abs() < 1e-12);
        assert!((tunability_gain(2e-3, 0.5).unwrap() - 1.0).abs() < 1e-12);
        assert!((tunability_gain(2e-3, 0.25).unwrap() - 2.0).abs() < 1e-12);
        assert!(tunability_gain(2e-3, 0.0).is_err());
    }
}
