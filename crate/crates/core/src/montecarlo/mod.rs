// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! Reproducible parallel parameter sweeps.

pub mod output;
pub mod registry;
pub mod stats;
pub mod sweep;

pub use output::{to_json, write_csv, CSV_SCHEMA, JSON_SCHEMA};
pub use registry::{Params, Registry, SimFn, SimulatorInfo};
pub use stats::{nearest_rank, summarize, Summary};
pub use sweep::{
    run_sweep, Axis, PointRecord, Provenance, SweepResult, SweepSpec, GENERATOR_ID, TOOL_VERSION,
};
