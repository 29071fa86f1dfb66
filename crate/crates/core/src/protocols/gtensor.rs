// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! Rotation axis of a drive seen through an anisotropic g-tensor.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Entries of
/// `[[g0 + alpha, beta, g13], [beta, g0 + alpha, g23], [0, 0, g33]]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GTensor {
    pub g0: f64,
    pub alpha: f64,
    pub beta: f64,
    pub g13: f64,
    pub g23: f64,
    pub g33: f64,
}

impl Default for GTensor {
    /// Typical Si/SiO2 interface values.
    fn default() -> Self {
        GTensor {
            g0: 1.994,
            alpha: -1e-3,
            beta: 1e-2,
            g13: 1e-3,
            g23: 1e-3,
            g33: 2.002,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GTensorAxis {
    /// In-plane tilt of the rotation axis, rad.
    pub theta: f64,
    /// Effective drive amplitude, T.
    pub b1_eff: f64,
    /// Carrier phase that restores an x rotation, rad.
    pub phase_correction: f64,
}

pub fn gtensor_axis(g: &GTensor, b1: f64) -> Result<GTensorAxis> {
    let gx = g.g0 + g.alpha;
    if gx == 0.0
        || g.g0 == 0.0
        || ![g.g0, g.alpha, g.beta, g.g13, g.g23, g.g33]
            .iter()
            .all(|v| v.is_finite())
    {
        return Err(Error::arg(
            "g-tensor must be finite with g0 and g0 + alpha non-zero",
        ));
    }
    let theta = (g.beta / gx).atan();
    let b1_eff = ((1.0 + g.alpha / g.g0).powi(2) + (g.beta / g.g0).powi(2)).sqrt() * b1;
    Ok(GTensorAxis {
        theta,
        b1_eff,
        phase_correction: -theta,
    })
}

/// Numerically time-averaged rotating-frame transverse drive
/// `(c_x, c_y)` multiplying `(σx, σy)`, for a carrier `B1 cos(ωt + phase)`
/// along x. Units of `g · B1`.
pub fn rotating_frame_drive(g: &GTensor, b1: f64, phase: f64, n_samples: usize) -> (f64, f64) {
    let a = (g.g0 + g.alpha) * b1;
    let b = g.beta * b1;
    let n = n_samples.max(8);
    let (mut cx, mut cy) = (0.0, 0.0);
    for k in 0..n {
        let wt = 2.0 * PI * (k as f64 + 0.5) / n as f64;
        let drive = (wt + phase).cos();
        let (s, c) = wt.sin_cos();
        // Frame rotation maps σx -> c σx - s σy and σy -> c σy + s σx.
        cx += 0.5 * drive * (a * c + b * s);
        cy += 0.5 * drive * (b * c - a * s);
    }
    (cx / n as f64, cy / n as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isotropic_in_plane() {
        let g = GTensor {
            beta: 0.0,
            ..Default::default()
        };
        let ax = gtensor_axis(&g, 1e-3).unwrap();
        assert_eq!(ax.theta, 0.0);
        assert!((ax.b1_eff - (1.0 + g.alpha / g.g0) * 1e-3).abs() < 1e-18);
    }

    #[test]
    fn default_tensor_is_nearly_ideal() {
        let g = GTensor::default();
        let ax = gtensor_axis(&g, 1.0).unwrap();
        assert!((ax.theta.sin() - 5.0e-3).abs() < 1e-4, "{}", ax.theta.sin());
        assert!((ax.b1_eff - 1.0).abs() <= 1e-3);
    }

    #[test]
    fn doubling_beta_doubles_tilt() {
        let g = GTensor::default();
        let g2 = GTensor {
            beta: 2.0 * g.beta,
            ..g
        };
        let s1 = gtensor_axis(&g, 1.0).unwrap().theta.sin();
        let s2 = gtensor_axis(&g2, 1.0).unwrap().theta.sin();
        assert!((s2 / s1 - 2.0).abs() < 0.01);
    }

    #[test]
    fn phase_correction_leaves_pure_x() {
        let g = GTensor::default();
        let ax = gtensor_axis(&g, 1.0).unwrap();
        let (cx, cy) = rotating_frame_drive(&g, 1.0, ax.phase_correction, 64);
        assert!(cy.abs() < 1e-9, "{cy}");
        assert!((cx - 0.25 * g.g0 * ax.b1_eff).abs() < 1e-12);
    }

    #[test]
    fn degenerate_tensor_rejected() {
        let g = GTensor {
            alpha: -1.994,
            ..Default::default()
        };
        assert!(gtensor_axis(&g, 1.0).is_err());
    }
}
