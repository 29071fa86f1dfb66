// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! Named simulators usable as sweep targets. Each maps a parameter point
//! (in config units) and a trial seed to one infidelity.

use std::collections::BTreeMap;

use crate::architectures::{
    build_scenario, mix_seed, plan_binning_drive_nominal, plan_shuttle_drive, simulate_scenario,
    ArchitectureConfig, Plan, ShuttleVariant,
};
use crate::error::{Error, Result};
use crate::landscape::{sample_ou, OUParams, ShuttleTrajectory, TRACK_MARGIN};
use crate::protocols::{
    exchange_gate_sim, shuttled_crot_sim, shuttled_x_gate_sim, tunnel_gate_sim, CrotConfig,
    DriveMode, ExchangeConfig, TunnelConfig,
};
use crate::units::{larmor, mhz, UM};

/// Parameter values of one grid point, keyed by config name.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Params(pub BTreeMap<String, f64>);

impl Params {
    pub fn get(&self, key: &str, default: f64) -> f64 {
        self.0.get(key).copied().unwrap_or(default)
    }

    fn count(&self, key: &str, default: usize) -> Result<usize> {
        let v = self.get(key, default as f64);
        if v < 0.0 || v.fract() != 0.0 {
            return Err(Error::arg(format!(
                "{key} must be a non-negative integer, got {v}"
            )));
        }
        Ok(v as usize)
    }
}

pub type SimFn = fn(&Params, u64) -> Result<f64>;

#[derive(Clone, Copy, Debug)]
pub struct SimulatorInfo {
    pub run: SimFn,
    /// Keys the simulator reads; anything else in a sweep is rejected.
    pub keys: &'static [&'static str],
}

#[derive(Clone, Debug)]
pub struct Registry {
    sims: BTreeMap<&'static str, SimulatorInfo>,
}

const SHUTTLE_KEYS: &[&str] = &["d_um", "v_mps", "omega_MHz", "delta_g_rel", "B0_tesla"];
const CROT_KEYS: &[&str] = &[
    "d_um",
    "v_mps",
    "omega_MHz",
    "delta_g_rel",
    "B0_tesla",
    "G_B0_MHz",
    "J0_MHz",
];
const ARCH_KEYS: &[&str] = &[
    "n_t",
    "n_n",
    "d_um",
    "v_mps",
    "omega_MHz",
    "delta_g_rel",
    "B0_tesla",
    "G_B0_MHz",
];
const LOOP_KEYS: &[&str] = &[
    "loops",
    "qubits_per_loop",
    "d_um",
    "v_mps",
    "omega_MHz",
    "delta_g_rel",
    "B0_tesla",
];

impl Default for Registry {
    fn default() -> Self {
        let mut r = Registry {
            sims: BTreeMap::new(),
        };
        r.register(
            "exchange",
            exchange,
            &["J_over_omega", "omega12_over_omega", "omega_MHz"],
        );
        r.register(
            "tunnel",
            tunnel,
            &["tc_over_omega", "omega12_over_omega", "omega_MHz"],
        );
        r.register("shuttle_mode_i", shuttle_mode_i, SHUTTLE_KEYS);
        r.register("shuttle_mode_ii", shuttle_mode_ii, SHUTTLE_KEYS);
        r.register("crot_mode_ii", crot_mode_ii, CROT_KEYS);
        r.register("arch_2xn_shuttle", arch_2xn_shuttle, ARCH_KEYS);
        r.register(
            "arch_2xn_binning",
            arch_2xn_binning,
            &["n_t", "n_n", "omega_MHz", "delta_g_rel", "B0_tesla"],
        );
        r.register(
            "arch_loop_sigma_positive",
            arch_loop_sigma_positive,
            LOOP_KEYS,
        );
        r.register("arch_loop_sigma_zero", arch_loop_sigma_zero, LOOP_KEYS);
        r
    }
}

impl Registry {
    pub fn register(&mut self, id: &'static str, run: SimFn, keys: &'static [&'static str]) {
        self.sims.insert(id, SimulatorInfo { run, keys });
    }

    pub fn get(&self, id: &str) -> Result<&SimulatorInfo> {
        self.sims
            .get(id)
            .ok_or_else(|| Error::arg(format!("unknown simulator `{id}`")))
    }

    pub fn ids(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.sims.keys().copied()
    }
}

fn exchange(p: &Params, _seed: u64) -> Result<f64> {
    let cfg = ExchangeConfig::from_ratios(
        p.get("J_over_omega", 100.0),
        p.get("omega12_over_omega", 1.0),
        mhz(p.get("omega_MHz", 5.0)),
    )?;
    Ok(exchange_gate_sim(&cfg)?.1)
}

fn tunnel(p: &Params, _seed: u64) -> Result<f64> {
    let rabi = mhz(p.get("omega_MHz", 5.0));
    let ratio = p.get("tc_over_omega", 100.0);
    let k = (ratio / 2.0).round();
    if k < 1.0 {
        return Err(Error::arg(format!("t_c/Ω = {ratio} gives p < 1")));
    }
    let cfg = TunnelConfig::synchronised(p.get("omega12_over_omega", 1.0) * rabi, rabi, k as u32);
    Ok(tunnel_gate_sim(&cfg)?.infidelity)
}

fn shuttle(p: &Params, seed: u64, mode: DriveMode) -> Result<f64> {
    let d = p.get("d_um", 1.0) * UM;
    let l = sample_ou(&OUParams::new(
        p.get("delta_g_rel", 1e-3),
        d + 2.0 * TRACK_MARGIN,
        seed,
    ))?;
    let tr = ShuttleTrajectory::triangle(d, p.get("v_mps", 10.0), TRACK_MARGIN + d / 2.0)?;
    shuttled_x_gate_sim(
        &l,
        &tr,
        mhz(p.get("omega_MHz", 5.0)),
        p.get("B0_tesla", 0.1),
        mode,
    )
}

fn shuttle_mode_i(p: &Params, seed: u64) -> Result<f64> {
    shuttle(p, seed, DriveMode::I)
}

fn shuttle_mode_ii(p: &Params, seed: u64) -> Result<f64> {
    shuttle(p, seed, DriveMode::II)
}

fn crot_mode_ii(p: &Params, seed: u64) -> Result<f64> {
    let d = p.get("d_um", 1.0) * UM;
    let rabi_mhz = p.get("omega_MHz", 5.0);
    let b0 = p.get("B0_tesla", 0.1);
    let cfg = CrotConfig::from_gap(
        b0,
        mhz(p.get("G_B0_MHz", 1000.0)),
        mhz(p.get("J0_MHz", 10.0 * rabi_mhz)),
        mhz(rabi_mhz),
    );
    let op = OUParams::new(
        p.get("delta_g_rel", 1e-3),
        d + 2.0 * TRACK_MARGIN,
        mix_seed(seed, 0),
    );
    let l1 = sample_ou(&op)?;
    let l2 = sample_ou(&op.with_seed(mix_seed(seed, 1)))?;
    let tr = ShuttleTrajectory::triangle(d, p.get("v_mps", 50.0), TRACK_MARGIN + d / 2.0)?;
    shuttled_crot_sim(&l1, &l2, &tr, &cfg)
}

fn arch_common(p: &Params, mut c: ArchitectureConfig) -> ArchitectureConfig {
    c.d = p.get("d_um", c.d / UM) * UM;
    c.v = p.get("v_mps", c.v);
    c.rabi_nominal = mhz(p.get("omega_MHz", 5.0));
    c.delta_g = p.get("delta_g_rel", c.delta_g);
    c.b0 = p.get("B0_tesla", c.b0);
    c
}

fn two_by_n(p: &Params) -> Result<ArchitectureConfig> {
    let n_t = p.count("n_t", 8)?;
    let mut c = arch_common(p, ArchitectureConfig::two_by_n(n_t));
    c.n_n = p.count("n_n", c.n_n)?;
    c.g_shift = mhz(p.get("G_B0_MHz", 300.0)) / larmor(1.0, c.b0);
    Ok(c)
}

fn arch_2xn_shuttle(p: &Params, seed: u64) -> Result<f64> {
    let c = two_by_n(p)?;
    let s = build_scenario(&c, seed)?;
    let plan = Plan::Shuttle(plan_shuttle_drive(&s, ShuttleVariant::SigmaPositive));
    Ok(simulate_scenario(&s, &plan)?.mean_infidelity())
}

fn arch_2xn_binning(p: &Params, seed: u64) -> Result<f64> {
    let n_t = p.count("n_t", 8)?;
    let mut c = arch_common(p, ArchitectureConfig::binning(n_t));
    c.n_n = p.count("n_n", c.n_n)?;
    let s = build_scenario(&c, seed)?;
    let plan = Plan::Binning(plan_binning_drive_nominal(&s)?);
    Ok(simulate_scenario(&s, &plan)?.mean_infidelity())
}

fn arch_loop(p: &Params, seed: u64, variant: ShuttleVariant) -> Result<f64> {
    let c = ArchitectureConfig::looped(p.count("loops", 9)?, p.count("qubits_per_loop", 2)?);
    let c = arch_common(p, c);
    let s = build_scenario(&c, seed)?;
    let plan = Plan::Shuttle(plan_shuttle_drive(&s, variant));
    Ok(simulate_scenario(&s, &plan)?.mean_infidelity())
}

fn arch_loop_sigma_positive(p: &Params, seed: u64) -> Result<f64> {
    arch_loop(p, seed, ShuttleVariant::SigmaPositive)
}

fn arch_loop_sigma_zero(p: &Params, seed: u64) -> Result<f64> {
    arch_loop(p, seed, ShuttleVariant::SigmaZero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_simulator_runs_at_defaults() {
        let r = Registry::default();
        let mut p = Params::default();
        p.0.insert("n_t".into(), 2.0);
        p.0.insert("loops".into(), 1.0);
        p.0.insert("qubits_per_loop".into(), 1.0);
        p.0.insert("d_um".into(), 0.5);
        for id in r.ids() {
            match (r.get(id).unwrap().run)(&p, 3) {
                Ok(x) => assert!((0.0..=1.0).contains(&x), "{id}: {x}"),
                Err(Error::PlanConflict(_)) => {}
                Err(e) => panic!("{id}: {e}"),
            }
        }
    }

    #[test]
    fn unknown_id() {
        assert!(Registry::default().get("nope").is_err());
    }
}
