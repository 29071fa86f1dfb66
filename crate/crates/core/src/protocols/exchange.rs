// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! Exchange-based homogenisation of two spins driven at their mean frequency.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qdyn::{
    average_fidelity, constant_trace, expectation, gates, pauli, propagate, propagate_observed,
    CMatrix, ComplexUnitary, C64, DEFAULT_STEPS,
};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExchangeConfig {
    /// `omega_q2 - omega_q1`, rad/s.
    pub omega12: f64,
    /// Exchange coupling, rad/s.
    pub j: f64,
    /// Rabi frequency, rad/s.
    pub rabi: f64,
    /// Swap periods per gate; `j = 2 p rabi` is enforced when `enforce`.
    pub p: u32,
    pub enforce: bool,
    pub n_steps: usize,
}

impl ExchangeConfig {
    /// `j = 2 p rabi`, so the spins are back in place after the gate.
    pub fn synchronised(omega12: f64, rabi: f64, p: u32) -> Self {
        ExchangeConfig {
            omega12,
            j: 2.0 * p as f64 * rabi,
            rabi,
            p,
            enforce: true,
            n_steps: DEFAULT_STEPS,
        }
    }

    /// Ratios `J/Ω` (rounded to the nearest even integer) and `ω12/Ω` at a
    /// given Rabi frequency.
    pub fn from_ratios(j_over_rabi: f64, omega12_over_rabi: f64, rabi: f64) -> Result<Self> {
        let p = (j_over_rabi / 2.0).round();
        if p < 1.0 {
            return Err(Error::arg(format!("J/Ω = {j_over_rabi} gives p < 1")));
        }
        Ok(Self::synchronised(omega12_over_rabi * rabi, rabi, p as u32))
    }

    pub fn gate_time(&self) -> f64 {
        PI / self.rabi
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rabi > 0.0 && self.rabi.is_finite()) {
            return Err(Error::arg("Rabi frequency must be positive"));
        }
        if !(self.j >= 0.0 && self.j.is_finite() && self.omega12.is_finite()) {
            return Err(Error::arg("exchange and splitting must be finite, J >= 0"));
        }
        if self.enforce {
            let want = 2.0 * self.p as f64 * self.rabi;
            if self.p == 0 || (self.j - want).abs() > 1e-12 * want {
                return Err(Error::arg(format!(
                    "J = {} violates J = 2 p Ω with p = {}, Ω = {}",
                    self.j, self.p, self.rabi
                )));
            }
        }
        if self.n_steps == 0 {
            return Err(Error::arg("n_steps must be at least 1"));
        }
        Ok(())
    }

    /// Rotating-frame Hamiltonian at the mean qubit frequency.
    pub fn hamiltonian(&self) -> CMatrix {
        let id = pauli::id();
        let z = pauli::z();
        let x = pauli::x();
        pauli::heisenberg().scale_re(self.j / 4.0)
            + z.kron(&id).scale_re(-self.omega12 / 4.0)
            + id.kron(&z).scale_re(self.omega12 / 4.0)
            + (x.kron(&id) + id.kron(&x)).scale_re(self.rabi / 2.0)
    }
}

/// Returns the gate and its infidelity against `X ⊗ X` (no Z stripping).
pub fn exchange_gate_sim(cfg: &ExchangeConfig) -> Result<(ComplexUnitary, f64)> {
    cfg.validate()?;
    let tr = constant_trace(cfg.hamiltonian(), cfg.gate_time(), cfg.n_steps)?;
    let u = propagate(&tr)?;
    let f = average_fidelity(&u, &gates::xx(), 2, false)?;
    Ok((u, 1.0 - f))
}

/// `|0> ⊗ (sqrt(3/4)|0> + sqrt(1/4)|1>)`.
pub fn exchange_initial_state() -> [C64; 4] {
    let a = C64::new(0.75f64.sqrt(), 0.0);
    let b = C64::new(0.5, 0.0);
    [a, b, C64::new(0.0, 0.0), C64::new(0.0, 0.0)]
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TracePoint {
    pub t: f64,
    pub z1: f64,
    pub z2: f64,
}

/// `<σz ⊗ I>` and `<I ⊗ σz>` every `sample_period` seconds (which must be a
/// whole number of time steps) from the initial state above.
pub fn exchange_time_trace(cfg: &ExchangeConfig, sample_period: f64) -> Result<Vec<TracePoint>> {
    cfg.validate()?;
    let dt = cfg.gate_time() / cfg.n_steps as f64;
    let ratio = sample_period / dt;
    let every = ratio.round();
    if every < 1.0 || (ratio - every).abs() > 1e-6 * every {
        return Err(Error::arg(format!(
            "sample period {sample_period:e} s is not a whole number of steps of {dt:e} s"
        )));
    }
    let psi0 = exchange_initial_state();
    let z1 = pauli::z().kron(&pauli::id());
    let z2 = pauli::id().kron(&pauli::z());
    let tr = constant_trace(cfg.hamiltonian(), cfg.gate_time(), cfg.n_steps)?;
    let mut out = Vec::new();
    propagate_observed(&tr, every as usize, |_, t, u| {
        let psi = u.apply(&psi0);
        out.push(TracePoint {
            t,
            z1: expectation(&z1, &psi),
            z2: expectation(&z2, &psi),
        });
    })?;
    Ok(out)
}

/// Stroboscopic trace sampled once per swap period `2π/J`.
pub fn stroboscopic_trace(cfg: &ExchangeConfig) -> Result<Vec<TracePoint>> {
    if cfg.j <= 0.0 {
        return Err(Error::arg("stroboscopic sampling needs J > 0"));
    }
    exchange_time_trace(cfg, 2.0 * PI / cfg.j)
}
