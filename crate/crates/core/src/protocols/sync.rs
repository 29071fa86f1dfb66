// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! Rabi frequencies that make off-resonant spins complete whole turns.

use serde::{Deserialize, Serialize};

use super::drive::{drive_single_spin, DrivePlan, DriveTone, Frame};
use crate::error::{Error, Result};
use crate::qdyn::{average_fidelity, ComplexUnitary};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SyncKind {
    /// One target and one non-target frequency: `Ω = s / sqrt(4p² - 1)`.
    TwoFrequency,
    /// Bins of width `2s`: `Ω = s / p`.
    Bins,
}

pub fn sync_omega(spacing: f64, p: u32, kind: SyncKind) -> Result<f64> {
    if p == 0 {
        return Err(Error::arg("p must be at least 1"));
    }
    if !(spacing > 0.0 && spacing.is_finite()) {
        return Err(Error::arg(format!(
            "spacing must be positive, got {spacing}"
        )));
    }
    let p = p as f64;
    Ok(match kind {
        SyncKind::TwoFrequency => spacing / (4.0 * p * p - 1.0).sqrt(),
        SyncKind::Bins => spacing / p,
    })
}

/// The `p` whose synchronised Ω lies closest to `nominal`; ties go to the
/// smaller `p`, i.e. the faster gate.
pub fn nearest_sync_p(spacing: f64, nominal: f64, kind: SyncKind) -> Result<u32> {
    if !(nominal > 0.0) {
        return Err(Error::arg("nominal Rabi frequency must be positive"));
    }
    let guess = match kind {
        SyncKind::TwoFrequency => 0.5 * ((spacing / nominal).powi(2) + 1.0).sqrt(),
        SyncKind::Bins => spacing / nominal,
    };
    let lo = (guess.floor() as u32).max(1);
    let mut best = (lo, f64::INFINITY);
    for p in lo..=lo + 1 {
        let err = (sync_omega(spacing, p, kind)? - nominal).abs();
        if err < best.1 {
            best = (p, err);
        }
    }
    Ok(best.0)
}

/// Identity infidelity (after Z strip) of a spin detuned by `spacing` from
/// a single tone of Rabi frequency `rabi` lasting `π / rabi`.
pub fn crosstalk_infidelity(spacing: f64, rabi: f64) -> Result<f64> {
    let w = 1.0e10;
    let plan = DrivePlan::single(DriveTone::new(w, rabi));
    let u = drive_single_spin(|_| w + spacing, |_| 1.0, &plan, Frame::Rotating, 1)?;
    Ok(1.0 - average_fidelity(&u, &ComplexUnitary::identity(2), 1, true)?)
}

/// Non-target infidelity at the exactly synchronised two-frequency Ω.
pub fn sync_crosstalk_check(spacing: f64, p: u32) -> Result<f64> {
    crosstalk_infidelity(spacing, sync_omega(spacing, p, SyncKind::TwoFrequency)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::{mhz, to_mhz};

    #[test]
    fn closed_forms() {
        assert!((sync_omega(3f64.sqrt(), 1, SyncKind::TwoFrequency).unwrap() - 1.0).abs() < 1e-15);
        let w = sync_omega(mhz(300.0), 30, SyncKind::TwoFrequency).unwrap();
        assert!((to_mhz(w) - 5.0007).abs() < 1e-4, "{}", to_mhz(w));
        let b = sync_omega(mhz(30.0), 6, SyncKind::Bins).unwrap();
        assert!((to_mhz(b) - 5.0).abs() < 1e-12);
        assert!(sync_omega(1.0, 0, SyncKind::Bins).is_err());
    }

    #[test]
    fn nearest_p_for_design_values() {
        assert_eq!(
            nearest_sync_p(mhz(300.0), mhz(5.0), SyncKind::TwoFrequency).unwrap(),
            30
        );
        assert_eq!(
            nearest_sync_p(mhz(56.0), mhz(5.0), SyncKind::Bins).unwrap(),
            11
        );
    }

    #[test]
    fn synchronised_non_target_idles() {
        for p in [1, 3, 30] {
            assert!(sync_crosstalk_check(mhz(300.0), p).unwrap() < 1e-6);
        }
        let w = sync_omega(mhz(300.0), 30, SyncKind::TwoFrequency).unwrap();
        assert!(crosstalk_infidelity(mhz(300.0), 1.1 * w).unwrap() > 1e-4);
    }
}
