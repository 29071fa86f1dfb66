// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! Command dispatch and artifact writing.

use std::fs::{self, File};
use std::io::BufWriter;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use super::config::{Command, ParamValue, RunConfig};
use crate::error::{Error, Result};
use crate::montecarlo::{
    run_sweep, to_json, write_csv, Axis, Registry, SweepResult, SweepSpec, GENERATOR_ID,
    TOOL_VERSION,
};
use crate::protocols::{
    estimate_both_conventions, exchange_time_trace, gtensor_axis, stroboscopic_trace,
    ExchangeConfig, GTensor, ParamEstimate, TracePoint,
};
use crate::qdyn::{gates, schmidt_coefficients, ComplexUnitary};
use crate::units::to_mhz;

#[derive(Clone, Debug, Serialize)]
pub struct Manifest {
    pub config: Value,
    pub seed: u64,
    pub generator_id: &'static str,
    pub tool_version: &'static str,
    pub started_at: String,
    pub duration_s: f64,
    /// Files written, relative to the output directory.
    pub outputs: Vec<String>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub result: Value,
}

struct Ctx<'a> {
    cfg: &'a RunConfig,
    dir: &'a Path,
    outputs: Vec<String>,
}

impl Ctx<'_> {
    fn path(&mut self, name: &str) -> PathBuf {
        self.outputs.push(name.to_string());
        self.dir.join(name)
    }

    fn write_json(&mut self, name: &str, v: &Value) -> Result<()> {
        let f = File::create(self.path(name))?;
        serde_json::to_writer_pretty(BufWriter::new(f), v).map_err(|e| Error::Io(e.to_string()))
    }

    /// Sweeps `simulator` over every list-valued key in `keys`, renaming
    /// config keys through `rename` on the way.
    fn sweep(&mut self, simulator: &str, keys: &[(&str, &str)]) -> Result<SweepResult> {
        let mut axes = Vec::new();
        let mut spec = SweepSpec::new(simulator, vec![], self.cfg.trials, self.cfg.seed);
        for &(from, to) in keys {
            match self.cfg.params.get(from) {
                Some(ParamValue::List(v)) => axes.push(Axis::new(to, v.clone())),
                Some(ParamValue::Number(x)) => spec = spec.with_fixed(to, *x),
                _ => return Err(Error::config(from, "expected a numeric key")),
            }
        }
        spec.axes = axes;
        let r = run_sweep(&spec, &Registry::default(), self.cfg.workers)?;
        write_csv(
            &r,
            BufWriter::new(File::create(self.path(&format!("{simulator}.csv")))?),
        )?;
        self.write_json(&format!("{simulator}.json"), &to_json(&r))?;
        Ok(r)
    }
}

fn same(keys: &[&'static str]) -> Vec<(&'static str, &'static str)> {
    keys.iter().map(|k| (*k, *k)).collect()
}

fn write_trace(path: PathBuf, trace: &[TracePoint]) -> Result<()> {
    let mut w = csv::Writer::from_writer(BufWriter::new(File::create(path)?));
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(["t_ns", "z1", "z2"]).map_err(io)?;
    for p in trace {
        w.write_record([(p.t * 1e9).to_string(), p.z1.to_string(), p.z2.to_string()])
            .map_err(io)?;
    }
    w.flush()?;
    Ok(())
}

fn estimate_json(e: &ParamEstimate, freq_to_mhz: impl Fn(f64) -> f64) -> Value {
    json!({
        "d_min_um": e.d_min * 1e6,
        "v_min_mps": e.v_min,
        "G_min_MHz": freq_to_mhz(e.g_min_b0),
        "sigma_at_d": e.sigma_at_d,
        "I1": e.i1,
        "I2": e.i2,
    })
}

fn dispatch(ctx: &mut Ctx) -> Result<Value> {
    let cfg = ctx.cfg;
    match cfg.command {
        Command::DemoExchange => {
            let rabi = cfg.si("omega_MHz")?;
            let mut ec = ExchangeConfig::from_ratios(
                cfg.number("J_over_omega")?,
                cfg.number("omega12_over_omega")?,
                rabi,
            )?;
            ec.n_steps = cfg.number("n_steps")? as usize;
            let full = exchange_time_trace(&ec, ec.gate_time() / ec.n_steps as f64)?;
            let strobe = stroboscopic_trace(&ec)?;
            write_trace(ctx.path("exchange_trace.csv"), &full)?;
            write_trace(ctx.path("exchange_stroboscopic.csv"), &strobe)?;
            Ok(json!({"J_over_omega_used": ec.j / ec.rabi, "p": ec.p}))
        }
        Command::SweepExchange => {
            ctx.sweep(
                "exchange",
                &same(&["J_over_omega", "omega12_over_omega", "omega_MHz"]),
            )?;
            Ok(Value::Null)
        }
        Command::SweepTunnel => {
            ctx.sweep(
                "tunnel",
                &same(&["tc_over_omega", "omega12_over_omega", "omega_MHz"]),
            )?;
            Ok(Value::Null)
        }
        Command::SweepShuttle => {
            let keys = same(&["d_um", "v_mps", "omega_MHz", "delta_g_rel", "B0_tesla"]);
            let mode = cfg.text("mode")?;
            if mode != "II" {
                ctx.sweep("shuttle_mode_i", &keys)?;
            }
            if mode != "I" {
                ctx.sweep("shuttle_mode_ii", &keys)?;
            }
            Ok(Value::Null)
        }
        Command::SweepCrot => {
            ctx.sweep(
                "crot_mode_ii",
                &same(&[
                    "d_um",
                    "v_mps",
                    "omega_MHz",
                    "delta_g_rel",
                    "B0_tesla",
                    "G_B0_MHz",
                    "J0_MHz",
                ]),
            )?;
            Ok(Value::Null)
        }
        Command::Arch2xn => {
            let plan = cfg.text("plan")?;
            if plan != "binning" {
                ctx.sweep(
                    "arch_2xn_shuttle",
                    &same(&[
                        "n_t",
                        "d_um",
                        "v_mps",
                        "omega_MHz",
                        "delta_g_rel",
                        "B0_tesla",
                        "G_B0_MHz",
                    ]),
                )?;
            }
            if plan != "shuttle" {
                ctx.sweep(
                    "arch_2xn_binning",
                    &[
                        ("n_t", "n_t"),
                        ("omega_MHz", "omega_MHz"),
                        ("binning_delta_g_rel", "delta_g_rel"),
                        ("binning_B0_tesla", "B0_tesla"),
                    ],
                )?;
            }
            Ok(Value::Null)
        }
        Command::ArchLoop => {
            let keys = same(&[
                "loops",
                "qubits_per_loop",
                "d_um",
                "v_mps",
                "omega_MHz",
                "delta_g_rel",
                "B0_tesla",
            ]);
            ctx.sweep("arch_loop_sigma_positive", &keys)?;
            ctx.sweep("arch_loop_sigma_zero", &keys)?;
            Ok(Value::Null)
        }
        Command::EstimateParams => {
            let g0 = crate::landscape::ou::DEFAULT_G0;
            let r = estimate_both_conventions(
                cfg.number("delta_g_rel")? * g0,
                cfg.si("B0_tesla")?,
                cfg.si("omega_MHz")?,
                cfg.si("lambda_nm")?,
                cfg.number("target_infidelity")?,
                cfg.number("quantile_factor")?,
            )?;
            let v = json!({
                "angular": estimate_json(&r.angular, to_mhz),
                "bare_rad_per_s": estimate_json(&r.bare_rad_per_s, |w| w / 1e6),
            });
            ctx.write_json("estimate.json", &v)?;
            Ok(v)
        }
        Command::Schmidt => {
            let gate = cfg.text("gate")?;
            let u = match gate {
                "cnot" => gates::cnot(),
                "swap" => gates::swap(),
                "xx" => gates::xx(),
                _ => ComplexUnitary::identity(4),
            };
            let s = schmidt_coefficients(&u)?;
            let v = json!({"gate": gate, "coefficients": s.coefficients, "rank": s.rank(1e-9)});
            ctx.write_json("schmidt.json", &v)?;
            Ok(v)
        }
        Command::Gtensor => {
            let g = GTensor {
                g0: cfg.number("g0")?,
                alpha: cfg.number("alpha")?,
                beta: cfg.number("beta")?,
                g13: cfg.number("g13")?,
                g23: cfg.number("g23")?,
                g33: cfg.number("g33")?,
            };
            let b1 = cfg.si("B1_mT")?;
            let a = gtensor_axis(&g, b1)?;
            let v = json!({
                "theta": a.theta,
                "b1_eff_ratio": a.b1_eff / b1,
                "phase_correction": a.phase_correction,
            });
            ctx.write_json("gtensor.json", &v)?;
            Ok(v)
        }
    }
}

/// Runs `cfg`, writing artifacts and `manifest.json` into `out_dir`.
pub fn run(cfg: &RunConfig, out_dir: &Path) -> Result<Manifest> {
    let started = Instant::now();
    let started_at = chrono::Utc::now().to_rfc3339();
    fs::create_dir_all(out_dir)?;
    let mut ctx = Ctx {
        cfg,
        dir: out_dir,
        outputs: Vec::new(),
    };
    let result = dispatch(&mut ctx)?;
    let mut outputs = ctx.outputs;
    outputs.push("manifest.json".into());
    let manifest = Manifest {
        config: cfg.to_json(),
        seed: cfg.seed,
        generator_id: GENERATOR_ID,
        tool_version: TOOL_VERSION,
        started_at,
        duration_s: started.elapsed().as_secs_f64(),
        outputs,
        result,
    };
    let f = File::create(out_dir.join("manifest.json"))?;
    serde_json::to_writer_pretty(BufWriter::new(f), &manifest)
        .map_err(|e| Error::Io(e.to_string()))?;
    Ok(manifest)
}
