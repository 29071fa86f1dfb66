// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! Closed-form shuttling distance, speed and target shift for a target
//! infidelity.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::units::larmor;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParamEstimate {
    /// m.
    pub d_min: f64,
    /// m/s.
    pub v_min: f64,
    /// Minimum target shift `G B0`, in the frequency unit of the inputs.
    pub g_min_b0: f64,
    /// Homogenised spread `Δg / sqrt(d_min / λ)`.
    pub sigma_at_d: f64,
    /// Off-resonance term at `d_min`.
    pub i1: f64,
    /// Crosstalk term at `g_min_b0`.
    pub i2: f64,
}

/// Inverts `I1 = 1 / (1 + (Ω / (q σ B0))²)` with `σ = Δg / sqrt(d/λ)` and
/// `I2 = 1 / (1 + (G B0 / Ω)²)`; `q` sets the quantile coverage.
pub fn estimate_parameters(
    delta_g: f64,
    b0: f64,
    rabi: f64,
    lambda: f64,
    target: f64,
    quantile_factor: f64,
) -> Result<ParamEstimate> {
    let delta_omega = larmor(delta_g, b0);
    let mut e = estimate_from_spread(delta_omega, rabi, lambda, target, quantile_factor)?;
    e.sigma_at_d = delta_g / (e.d_min / lambda).sqrt();
    Ok(e)
}

/// As [`estimate_parameters`] with the spread given directly as a
/// frequency `Δω_q`. `sigma_at_d` is then relative (`σ/Δg`).
pub fn estimate_from_spread(
    delta_omega: f64,
    rabi: f64,
    lambda: f64,
    target: f64,
    quantile_factor: f64,
) -> Result<ParamEstimate> {
    if !(target > 0.0 && target < 1.0) {
        return Err(Error::arg(format!(
            "target infidelity must lie in (0, 1), got {target}"
        )));
    }
    if !(rabi > 0.0 && lambda > 0.0 && delta_omega > 0.0 && quantile_factor > 0.0) {
        return Err(Error::arg(
            "spread, Rabi frequency, λ and quantile factor must be positive",
        ));
    }
    let odds = 1.0 / target - 1.0;
    let d_min = lambda * (quantile_factor * delta_omega / rabi).powi(2) * odds;
    let v_min = rabi * d_min / PI;
    let g_min_b0 = rabi * odds.sqrt();
    let sigma_rel = 1.0 / (d_min / lambda).sqrt();
    let i1 = 1.0 / (1.0 + (rabi / (quantile_factor * sigma_rel * delta_omega)).powi(2));
    let i2 = 1.0 / (1.0 + (g_min_b0 / rabi).powi(2));
    Ok(ParamEstimate {
        d_min,
        v_min,
        g_min_b0,
        sigma_at_d: sigma_rel,
        i1,
        i2,
    })
}

/// The same inputs under both readings of quoted frequencies: as ordinary
/// frequencies (`ω = 2π f`) and as bare angular values (`ω = f`).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConventionReport {
    pub angular: ParamEstimate,
    pub bare_rad_per_s: ParamEstimate,
}

pub fn estimate_both_conventions(
    delta_g: f64,
    b0: f64,
    rabi: f64,
    lambda: f64,
    target: f64,
    quantile_factor: f64,
) -> Result<ConventionReport> {
    let angular = estimate_parameters(delta_g, b0, rabi, lambda, target, quantile_factor)?;
    let mut bare = estimate_from_spread(
        larmor(delta_g, b0) / (2.0 * PI),
        rabi / (2.0 * PI),
        lambda,
        target,
        quantile_factor,
    )?;
    bare.sigma_at_d = delta_g / (bare.d_min / lambda).sqrt();
    Ok(ConventionReport {
        angular,
        bare_rad_per_s: bare,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::{mhz, to_mhz, NM, UM};

    #[test]
    fn unit_ratio_point() {
        let e = estimate_parameters(2e-3, 0.1, mhz(5.0), 20.0 * NM, 0.5, 2.0).unwrap();
        assert!((e.g_min_b0 - mhz(5.0)).abs() < 1e-6);
        assert!(estimate_parameters(2e-3, 0.1, mhz(5.0), 20.0 * NM, 1.0, 2.0).is_err());
    }

    #[test]
    fn low_spread_design_point() {
        let r = estimate_both_conventions(2e-3, 0.1, mhz(5.0), 20.0 * NM, 2e-3, 2.0).unwrap();
        let a = r.angular;
        assert!((a.d_min / UM - 12.5).abs() < 0.1, "{}", a.d_min / UM);
        assert!((to_mhz(a.g_min_b0) - 111.7).abs() < 0.1);
        assert!((a.i1 - 2e-3).abs() < 1e-12 && (a.i2 - 2e-3).abs() < 1e-12);
        let b = r.bare_rad_per_s;
        assert!((b.d_min - a.d_min).abs() < 1e-12 * a.d_min);
        assert!((b.v_min - 19.9).abs() < 0.1, "{}", b.v_min);
    }
}
