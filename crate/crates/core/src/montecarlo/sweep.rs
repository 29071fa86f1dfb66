// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! Grid sweeps with counter-seeded trials, evaluated in parallel and reduced
//! in grid order.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::registry::{Params, Registry};
use super::stats::{summarize, Summary};
use crate::error::{Error, Result};

pub const GENERATOR_ID: &str = "ChaCha8Rng/rand_chacha-0.9";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Axis {
    pub name: String,
    pub values: Vec<f64>,
}

impl Axis {
    pub fn new(name: impl Into<String>, values: Vec<f64>) -> Self {
        Axis {
            name: name.into(),
            values,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub simulator: String,
    /// Swept parameters; the last axis varies fastest.
    pub axes: Vec<Axis>,
    /// Parameters held at one value.
    #[serde(default)]
    pub fixed: BTreeMap<String, f64>,
    pub trials_per_point: usize,
    pub base_seed: u64,
}

impl SweepSpec {
    pub fn new(
        simulator: impl Into<String>,
        axes: Vec<Axis>,
        trials_per_point: usize,
        base_seed: u64,
    ) -> Self {
        SweepSpec {
            simulator: simulator.into(),
            axes,
            fixed: BTreeMap::new(),
            trials_per_point,
            base_seed,
        }
    }

    pub fn with_fixed(mut self, key: impl Into<String>, value: f64) -> Self {
        self.fixed.insert(key.into(), value);
        self
    }

    pub fn n_points(&self) -> usize {
        self.axes.iter().map(|a| a.values.len()).product()
    }

    pub fn validate(&self, registry: &Registry) -> Result<()> {
        let info = registry.get(&self.simulator)?;
        if self.trials_per_point == 0 {
            return Err(Error::arg("trials_per_point must be at least 1"));
        }
        if self.axes.iter().any(|a| a.values.is_empty()) {
            return Err(Error::arg("every sweep axis needs at least one value"));
        }
        let mut seen = std::collections::BTreeSet::new();
        for key in self
            .axes
            .iter()
            .map(|a| a.name.as_str())
            .chain(self.fixed.keys().map(String::as_str))
        {
            if !info.keys.contains(&key) {
                return Err(Error::arg(format!(
                    "simulator `{}` has no parameter `{key}`",
                    self.simulator
                )));
            }
            if !seen.insert(key) {
                return Err(Error::arg(format!("parameter `{key}` given twice")));
            }
        }
        Ok(())
    }

    /// Axis values of grid point `index`.
    pub fn point(&self, mut index: usize) -> Vec<f64> {
        let mut out = vec![0.0; self.axes.len()];
        for (slot, axis) in out.iter_mut().zip(&self.axes).rev() {
            let n = axis.values.len();
            *slot = axis.values[index % n];
            index /= n;
        }
        out
    }

    fn params(&self, index: usize) -> Params {
        let mut m = self.fixed.clone();
        for (axis, v) in self.axes.iter().zip(self.point(index)) {
            m.insert(axis.name.clone(), v);
        }
        Params(m)
    }

    /// `base_seed + point · trials + trial`.
    pub fn trial_seed(&self, point: usize, trial: usize) -> u64 {
        self.base_seed
            .wrapping_add((point as u64).wrapping_mul(self.trials_per_point as u64))
            .wrapping_add(trial as u64)
    }

    /// SHA-256 of the canonical JSON form.
    pub fn hash(&self) -> String {
        let bytes = serde_json::to_vec(self).expect("sweep spec serialises");
        Sha256::digest(&bytes)
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointRecord {
    pub index: usize,
    pub values: Vec<f64>,
    /// `None` when every trial failed.
    pub summary: Option<Summary>,
    pub failures: usize,
    /// First failure message, if any.
    pub first_error: Option<String>,
}

impl PointRecord {
    pub fn n(&self) -> usize {
        self.summary.map_or(0, |s| s.n)
    }

    pub fn flagged(&self) -> bool {
        self.summary.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub spec_hash: String,
    pub base_seed: u64,
    pub generator_id: String,
    pub tool_version: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub spec: SweepSpec,
    pub points: Vec<PointRecord>,
    pub provenance: Provenance,
}

impl SweepResult {
    pub fn axis_names(&self) -> Vec<&str> {
        self.spec.axes.iter().map(|a| a.name.as_str()).collect()
    }
}

/// Runs every trial of every grid point on `workers` threads (all cores
/// when `None`). Output does not depend on the worker count.
pub fn run_sweep(
    spec: &SweepSpec,
    registry: &Registry,
    workers: Option<usize>,
) -> Result<SweepResult> {
    spec.validate(registry)?;
    let sim = registry.get(&spec.simulator)?.run;
    let trials = spec.trials_per_point;
    let n_points = spec.n_points();
    let params: Vec<Params> = (0..n_points).map(|i| spec.params(i)).collect();
    let eval = || -> Vec<std::result::Result<f64, String>> {
        (0..n_points * trials)
            .into_par_iter()
            .map(|k| {
                let (i, t) = (k / trials, k % trials);
                sim(&params[i], spec.trial_seed(i, t)).map_err(|e| e.to_string())
            })
            .collect()
    };
    let outcomes = match workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .map_err(|e| Error::arg(format!("cannot start {w} workers: {e}")))?
            .install(eval),
        None => eval(),
    };
    let points = outcomes
        .chunks(trials)
        .enumerate()
        .map(|(index, chunk)| {
            let ok: Vec<f64> = chunk
                .iter()
                .filter_map(|r| r.as_ref().ok().copied())
                .collect();
            PointRecord {
                index,
                values: spec.point(index),
                summary: summarize(&ok).ok(),
                failures: chunk.len() - ok.len(),
                first_error: chunk.iter().find_map(|r| r.as_ref().err().cloned()),
            }
        })
        .collect();
    Ok(SweepResult {
        spec: spec.clone(),
        points,
        provenance: Provenance {
            spec_hash: spec.hash(),
            base_seed: spec.base_seed,
            generator_id: GENERATOR_ID.into(),
            tool_version: TOOL_VERSION.into(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn flaky(p: &Params, seed: u64) -> Result<f64> {
        if seed.is_multiple_of(3) {
            return Err(Error::Model("boom".into()));
        }
        Ok(p.get("x", 0.0) + seed as f64 * 1e-3)
    }

    fn registry() -> Registry {
        let mut r = Registry::default();
        r.register("flaky", flaky, &["x", "y"]);
        r
    }

    #[test]
    fn grid_order_and_seeds() {
        let spec = SweepSpec::new(
            "flaky",
            vec![
                Axis::new("x", vec![1.0, 2.0]),
                Axis::new("y", vec![0.0, 5.0, 6.0]),
            ],
            4,
            10,
        );
        assert_eq!(spec.n_points(), 6);
        assert_eq!(spec.point(4), vec![2.0, 5.0]);
        assert_eq!(spec.trial_seed(2, 3), 10 + 8 + 3);
    }

    #[test]
    fn failures_are_recorded_not_fatal() {
        let spec = SweepSpec::new("flaky", vec![Axis::new("x", vec![1.0])], 6, 0);
        let r = run_sweep(&spec, &registry(), Some(1)).unwrap();
        assert_eq!(r.points[0].failures, 2);
        assert_eq!(r.points[0].n(), 4);
    }

    #[test]
    fn worker_count_does_not_matter() {
        let spec = SweepSpec::new("flaky", vec![Axis::new("x", vec![1.0, 2.0, 3.0])], 50, 7);
        let a = run_sweep(&spec, &registry(), Some(1)).unwrap();
        let b = run_sweep(&spec, &registry(), Some(8)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn deterministic_single_trial_has_zero_std() {
        let spec = SweepSpec::new(
            "exchange",
            vec![Axis::new("omega12_over_omega", vec![1.0])],
            1,
            0,
        );
        let r = run_sweep(&spec, &Registry::default(), Some(1)).unwrap();
        assert_eq!(r.points[0].summary.unwrap().std, 0.0);
    }

    #[test]
    fn rejects_unknown_parameters() {
        let spec = SweepSpec::new("exchange", vec![Axis::new("d_um", vec![1.0])], 1, 0);
        assert!(run_sweep(&spec, &Registry::default(), Some(1)).is_err());
    }
}
