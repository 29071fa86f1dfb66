// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! Device-level simulation: each qubit alone under the full drive, scored
//! against X (targets) or I (non-targets).

use std::f64::consts::PI;

use serde::Serialize;
use serde_json::{json, Value};

use super::plan::{BinningPlan, ShuttleDrivePlan};
use super::scenario::Scenario;
use crate::error::{Error, Result};
use crate::protocols::{drive_single_spin, shuttled_spin_unitary, DrivePlan, Frame};
use crate::qdyn::{average_fidelity, gates, ComplexUnitary, DEFAULT_STEPS};
use crate::units::larmor;

/// Steps per drive-frame cycle of the fastest rotating term.
const STEPS_PER_CYCLE: f64 = 200.0;

#[derive(Clone, Debug, PartialEq)]
pub enum Plan {
    Shuttle(ShuttleDrivePlan),
    Binning(BinningPlan),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScenarioOutcome {
    pub fidelities: Vec<f64>,
    pub is_target: Vec<bool>,
    /// Geometric mean of the per-qubit fidelities.
    pub device_fidelity: f64,
}

impl ScenarioOutcome {
    pub fn mean_infidelity(&self) -> f64 {
        self.fidelities.iter().map(|f| 1.0 - f).sum::<f64>() / self.fidelities.len() as f64
    }

    fn mean_where(&self, target: bool) -> Option<f64> {
        let v: Vec<f64> = self
            .fidelities
            .iter()
            .zip(&self.is_target)
            .filter(|(_, &t)| t == target)
            .map(|(f, _)| 1.0 - f)
            .collect();
        (!v.is_empty()).then(|| v.iter().sum::<f64>() / v.len() as f64)
    }

    pub fn mean_target_infidelity(&self) -> Option<f64> {
        self.mean_where(true)
    }

    pub fn mean_non_target_infidelity(&self) -> Option<f64> {
        self.mean_where(false)
    }
}

/// `(∏ F_i)^(1/n)`.
pub fn geometric_mean(f: &[f64]) -> f64 {
    if f.iter().any(|&x| x <= 0.0) {
        return 0.0;
    }
    (f.iter().map(|x| x.ln()).sum::<f64>() / f.len() as f64).exp()
}

fn steps_for(plan: &DrivePlan, spin: f64) -> usize {
    let fastest = plan
        .tones
        .iter()
        .map(|t| (t.omega - plan.rotating_frame).abs())
        .fold((spin - plan.rotating_frame).abs(), f64::max);
    let cycles = fastest * plan.gate_time / (2.0 * PI);
    DEFAULT_STEPS.max((cycles * STEPS_PER_CYCLE).ceil() as usize)
}

fn score(u: &ComplexUnitary, is_target: bool) -> Result<f64> {
    let target = if is_target {
        gates::x()
    } else {
        ComplexUnitary::identity(2)
    };
    average_fidelity(u, &target, 1, true)
}

fn finish(s: &Scenario, fidelities: Vec<f64>) -> ScenarioOutcome {
    ScenarioOutcome {
        device_fidelity: geometric_mean(&fidelities),
        is_target: s.qubits.iter().map(|q| q.is_target).collect(),
        fidelities,
    }
}

pub fn simulate_shuttle(s: &Scenario, plan: &ShuttleDrivePlan) -> Result<ScenarioOutcome> {
    if plan.compensation.len() != s.n_q() {
        return Err(Error::arg("plan does not match the scenario"));
    }
    let b0 = s.config.b0;
    let mut out = Vec::with_capacity(s.n_q());
    for (q, &comp) in s.qubits.iter().zip(&plan.compensation) {
        let shift = larmor(q.g_shift, b0) + comp;
        let n = steps_for(&plan.drive, q.effective_frequency + comp);
        let u = shuttled_spin_unitary(
            &q.landscape,
            &q.trajectory,
            b0,
            shift,
            &plan.drive,
            Frame::Rotating,
            false,
            n,
        )?;
        out.push(score(&u, q.is_target)?);
    }
    Ok(finish(s, out))
}

/// Parked qubits sit exactly on their bin centres after the Stark shift.
pub fn simulate_binning(s: &Scenario, plan: &BinningPlan) -> Result<ScenarioOutcome> {
    if plan.bins.len() != s.n_q() {
        return Err(Error::arg("plan does not match the scenario"));
    }
    let mut out = Vec::with_capacity(s.n_q());
    for (i, q) in s.qubits.iter().enumerate() {
        let drive = plan.drive_for(i);
        let w = drive.rotating_frame;
        let u = drive_single_spin(
            |_| w,
            |_| 1.0,
            &drive,
            Frame::Rotating,
            steps_for(&drive, w),
        )?;
        out.push(score(&u, q.is_target)?);
    }
    Ok(finish(s, out))
}

pub fn simulate_scenario(s: &Scenario, plan: &Plan) -> Result<ScenarioOutcome> {
    match plan {
        Plan::Shuttle(p) => simulate_shuttle(s, p),
        Plan::Binning(p) => simulate_binning(s, p),
    }
}

/// Audit record: seeds, shifts, trajectories and tones, without the
/// landscape samples.
pub fn scenario_dump(s: &Scenario, plan: Option<&Plan>) -> Value {
    let qubits: Vec<Value> = s
        .qubits
        .iter()
        .enumerate()
        .map(|(i, q)| {
            let mut v = json!({
                "index": i,
                "seed": q.seed,
                "is_target": q.is_target,
                "group": q.group,
                "g_shift": q.g_shift,
                "trajectory": q.trajectory,
                "effective_frequency_rad_s": q.effective_frequency,
            });
            match plan {
                Some(Plan::Shuttle(p)) => v["compensation_rad_s"] = json!(p.compensation[i]),
                Some(Plan::Binning(p)) => {
                    v["bin"] = json!(p.bins[i]);
                    v["stark_shift_rad_s"] = json!(p.shifts[i]);
                }
                None => {}
            }
            v
        })
        .collect();
    let plan_json = match plan {
        Some(Plan::Shuttle(p)) => {
            json!({"kind": "shuttle", "variant": p.variant, "drive": p.drive})
        }
        Some(Plan::Binning(p)) => json!({
            "kind": "binning",
            "p": p.p,
            "rabi_rad_s": p.rabi,
            "delta_omega_rad_s": p.delta_omega,
            "tones": p.tones,
        }),
        None => Value::Null,
    };
    json!({
        "config": s.config,
        "seed": s.seed,
        "rabi_rad_s": s.rabi,
        "qubits": qubits,
        "plan": plan_json,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::architectures::plan::{
        plan_binning_drive_nominal, plan_shuttle_drive, ShuttleVariant,
    };
    use crate::architectures::scenario::{
        build_2xn_scenario, build_static_scenario, ArchitectureConfig,
    };

    #[test]
    fn flat_device_is_perfect() {
        let mut c = ArchitectureConfig::two_by_n(2);
        c.delta_g = 0.0;
        let s = build_2xn_scenario(&c, 1).unwrap();
        let p = plan_shuttle_drive(&s, ShuttleVariant::SigmaPositive);
        let o = simulate_shuttle(&s, &p).unwrap();
        assert!(1.0 - o.device_fidelity < 1e-8);
    }

    #[test]
    fn device_fidelity_is_geometric_mean() {
        let s = build_2xn_scenario(&ArchitectureConfig::two_by_n(4), 2).unwrap();
        let o = simulate_scenario(
            &s,
            &Plan::Shuttle(plan_shuttle_drive(&s, ShuttleVariant::SigmaPositive)),
        )
        .unwrap();
        let prod: f64 = o.fidelities.iter().product();
        assert!((o.device_fidelity - prod.powf(1.0 / o.fidelities.len() as f64)).abs() < 1e-12);
    }

    #[test]
    fn binning_ignores_motion_parameters() {
        let mut a = ArchitectureConfig::binning(3);
        a.n_n = 0;
        let mut b = a;
        b.d *= 7.0;
        b.v *= 3.0;
        let sa = build_static_scenario(&a, 11).unwrap();
        let sb = build_static_scenario(&b, 11).unwrap();
        let oa = simulate_binning(&sa, &plan_binning_drive_nominal(&sa).unwrap()).unwrap();
        let ob = simulate_binning(&sb, &plan_binning_drive_nominal(&sb).unwrap()).unwrap();
        assert_eq!(oa.fidelities, ob.fidelities);
    }

    #[test]
    fn dump_lists_every_qubit() {
        let s = build_2xn_scenario(&ArchitectureConfig::two_by_n(3), 5).unwrap();
        let p = Plan::Shuttle(plan_shuttle_drive(&s, ShuttleVariant::SigmaPositive));
        let v = scenario_dump(&s, Some(&p));
        assert_eq!(v["qubits"].as_array().unwrap().len(), 4);
        assert_eq!(v["plan"]["kind"], "shuttle");
    }
}
