// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! Homogenisation protocols as simulators.

pub mod crot;
pub mod drive;
pub mod estimate;
pub mod exchange;
pub mod gtensor;
pub mod shuttle;
pub mod sync;
pub mod tunnel;

pub use crot::{
    crot_resonance, omega_ii, shuttled_crot_sim, shuttled_crot_unitary, static_crot_residual,
    CrotConfig, CrotMode,
};
pub use drive::{drive_single_spin, DrivePlan, DriveTone, Frame};
pub use estimate::{
    estimate_both_conventions, estimate_parameters, ConventionReport, ParamEstimate,
};
pub use exchange::{
    exchange_gate_sim, exchange_time_trace, stroboscopic_trace, ExchangeConfig, TracePoint,
};
pub use gtensor::{gtensor_axis, rotating_frame_drive, GTensor, GTensorAxis};
pub use shuttle::{shuttled_spin_unitary, shuttled_x_gate_sim, DriveMode, ShuttleGate};
pub use sync::{crosstalk_infidelity, nearest_sync_p, sync_crosstalk_check, sync_omega, SyncKind};
pub use tunnel::{tunability_gain, tunnel_gate_sim, TunnelConfig, TunnelOutcome};
