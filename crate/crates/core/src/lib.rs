// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! Simulation toolkit for motion-based frequency homogenisation of globally
//! driven spin qubits.

// `!(x > 0.0)` is used throughout to reject NaN along with non-positive values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod architectures;
pub mod cli;
pub mod error;
pub mod landscape;
pub mod montecarlo;
pub mod protocols;
pub mod qdyn;
pub mod units;

pub use error::{Error, Result};
