// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! Multi-qubit architectures: the 2×N array, the looped pipeline and the
//! binning baseline.

pub mod plan;
pub mod scenario;
pub mod simulate;

pub use plan::{
    plan_binning_drive, plan_binning_drive_nominal, plan_shuttle_drive, BinningPlan,
    ShuttleDrivePlan, ShuttleVariant, STARK_FRACTION,
};
pub use scenario::{
    build_2xn_scenario, build_loop_scenario, build_scenario, build_static_scenario, mix_seed,
    ArchitectureConfig, ArchitectureKind, QubitRecord, Scenario,
};
pub use simulate::{
    geometric_mean, scenario_dump, simulate_binning, simulate_scenario, simulate_shuttle, Plan,
    ScenarioOutcome,
};
