// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! Euler-angle and operator-Schmidt decompositions.

use std::f64::consts::{FRAC_PI_2, PI};

use nalgebra::Matrix4;
use serde::Serialize;

use super::matrix::{CMatrix, C64};
use super::unitary::{gates, ComplexUnitary};
use crate::error::{Error, Result};

/// `U = e^{i global_phase} Z_phi X_theta Z_lam`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SU2Decomposition {
    pub theta: f64,
    pub phi: f64,
    pub lam: f64,
    pub global_phase: f64,
}

impl SU2Decomposition {
    pub fn reconstruct(&self) -> CMatrix {
        let u = gates::rz(self.phi)
            .compose(&gates::rx(self.theta))
            .compose(&gates::rz(self.lam))
            .scale_phase(self.global_phase);
        *u.matrix()
    }
}

const DEGENERATE: f64 = 1e-12;

pub fn su2_decompose(u: &ComplexUnitary) -> Result<SU2Decomposition> {
    if u.dim() != 2 {
        return Err(Error::arg(format!(
            "su2_decompose needs a 2x2 unitary, got {}",
            u.dim()
        )));
    }
    let (a, b, c, d) = (u.get(0, 0), u.get(0, 1), u.get(1, 0), u.get(1, 1));
    let theta = 2.0 * a.norm().clamp(0.0, 1.0).acos();
    let (phi, lam) = if b.norm() < DEGENERATE {
        (d.arg() - a.arg(), 0.0)
    } else if a.norm() < DEGENERATE {
        let diff = c.arg() - b.arg();
        (diff / 2.0, -diff / 2.0)
    } else {
        let sum = d.arg() - a.arg();
        let diff = c.arg() - b.arg();
        ((sum + diff) / 2.0, (sum - diff) / 2.0)
    };
    let make = |phi: f64, lam: f64| SU2Decomposition {
        theta,
        phi,
        lam,
        global_phase: if a.norm() >= b.norm() {
            a.arg() + (phi + lam) / 2.0
        } else {
            b.arg() + FRAC_PI_2 + (phi - lam) / 2.0
        },
    };
    // Halved phase differences are fixed only up to π; the second branch
    // flips the relative sign of the off-diagonal entries.
    let (first, other) = (make(phi, lam), make(phi + PI, lam - PI));
    let err = |s: &SU2Decomposition| s.reconstruct().max_abs_diff(u.matrix());
    Ok(if err(&other) < err(&first) {
        other
    } else {
        first
    })
}

/// Operator-Schmidt coefficients, descending.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SchmidtSpectrum {
    pub coefficients: Vec<f64>,
}

impl SchmidtSpectrum {
    /// Number of coefficients above `tol`.
    pub fn rank(&self, tol: f64) -> usize {
        self.coefficients.iter().filter(|&&a| a > tol).count()
    }

    pub fn norm_sq(&self) -> f64 {
        self.coefficients.iter().map(|a| a * a).sum()
    }
}

/// Singular values of the realigned matrix `R[(i,k),(j,l)] = U[(i,j),(k,l)]`.
/// The raw normalisation gives `sum(alpha^2) = tr(U†U) = 4`.
pub fn schmidt_coefficients(u: &ComplexUnitary) -> Result<SchmidtSpectrum> {
    if u.dim() != 4 {
        return Err(Error::arg(format!(
            "Schmidt decomposition needs a 4x4 unitary, got {}",
            u.dim()
        )));
    }
    let mut r = Matrix4::<C64>::zeros();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    r[(2 * i + k, 2 * j + l)] = u.get(2 * i + j, 2 * k + l);
                }
            }
        }
    }
    let mut coefficients: Vec<f64> = r.singular_values().iter().copied().collect();
    coefficients.sort_by(|a, b| b.total_cmp(a));
    Ok(SchmidtSpectrum { coefficients })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x_and_identity_angles() {
        let dx = su2_decompose(&gates::x()).unwrap();
        assert!((dx.theta - PI).abs() < 1e-12);
        assert!(dx.reconstruct().max_abs_diff(gates::x().matrix()) < 1e-12);
        let di = su2_decompose(&ComplexUnitary::identity(2)).unwrap();
        assert!(di.theta.abs() < 1e-12);
        assert!(
            (di.phi + di.lam)
                .rem_euclid(2.0 * PI)
                .min((2.0 * PI - (di.phi + di.lam)).rem_euclid(2.0 * PI))
                < 1e-12
        );
    }

    #[test]
    fn composite_reconstructs() {
        for (t, p, l, g) in [
            (0.7, 0.3, -0.2, 0.785),
            (2.9, -1.7, 2.2, -3.0),
            (0.0, 1.0, 0.4, 0.1),
        ] {
            let u = gates::rz(p)
                .compose(&gates::rx(t))
                .compose(&gates::rz(l))
                .scale_phase(g);
            let dec = su2_decompose(&u).unwrap();
            assert!(dec.reconstruct().max_abs_diff(u.matrix()) < 1e-9, "{dec:?}");
        }
    }

    #[test]
    fn product_and_cnot_spectra() {
        let xx = schmidt_coefficients(&gates::xx()).unwrap();
        assert_eq!(xx.rank(1e-10), 1);
        assert!((xx.norm_sq() - 4.0).abs() < 1e-9);
        let cn = schmidt_coefficients(&gates::cnot()).unwrap();
        assert_eq!(cn.rank(1e-10), 2);
        assert!((cn.coefficients[0] - cn.coefficients[1]).abs() < 1e-12);
        assert!((cn.norm_sq() - 4.0).abs() < 1e-9);
    }
}
