// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! Physical constants and unit conversions.
//!
//! Internally every frequency is angular (rad/s), lengths are metres, times
//! seconds and fields tesla. Conversions happen only at the config boundary.

use std::f64::consts::PI;

/// Bohr magneton over the reduced Planck constant, in rad s⁻¹ T⁻¹.
///
/// Multiplying by a g-factor and a field in tesla gives an angular Larmor
/// frequency: g = 2 at 0.1 T is 2π × 2.8 GHz.
pub const BOHR_RAD_PER_S_PER_T: f64 = 2.0 * PI * 13.996_244_936e9;

pub const NM: f64 = 1e-9;
pub const UM: f64 = 1e-6;

/// Ordinary frequency in MHz to angular frequency in rad/s.
pub fn mhz(f: f64) -> f64 {
    2.0 * PI * f * 1e6
}

/// Angular frequency in rad/s to ordinary frequency in MHz.
pub fn to_mhz(omega: f64) -> f64 {
    omega / (2.0 * PI * 1e6)
}

/// Angular Larmor frequency of a spin with g-factor `g` in a field `b0`.
pub fn larmor(g: f64, b0: f64) -> f64 {
    g * BOHR_RAD_PER_S_PER_T * b0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn larmor_matches_table_scale() {
        // g = 2 at 0.1 T sits at 2.8 GHz
        let f = to_mhz(larmor(2.0, 0.1));
        assert!((f - 2799.249).abs() < 1e-2, "{f}");
    }

    #[test]
    fn mhz_round_trip() {
        assert!((to_mhz(mhz(5.0)) - 5.0).abs() < 1e-12);
    }
}
