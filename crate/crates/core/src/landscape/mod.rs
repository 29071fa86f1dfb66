// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! Stochastic g-factor landscapes, shuttle trajectories and path means.

pub mod ou;
pub mod trajectory;

pub use ou::{sample_ou, sample_ou_periodic, GFactorLandscape, OUParams};
pub use trajectory::{
    homogenised_sigma, path_mean, path_mean_fn, quadrature_steps, ShuttleTrajectory,
    TrajectoryKind, TRACK_MARGIN,
};
