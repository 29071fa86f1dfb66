// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::FRAC_1_SQRT_2;

use super::matrix::{pauli, CMatrix, C64, I, ONE};
use crate::error::{Error, Result};

/// Max-entry tolerance on `U†U - I`.
pub const UNITARITY_TOL: f64 = 1e-10;

/// A checked unitary operator of dimension 2 or 4.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexUnitary(CMatrix);

impl ComplexUnitary {
    /// Validates dimension and unitarity.
    pub fn new(m: CMatrix) -> Result<Self> {
        if m.dim() != 2 && m.dim() != 4 {
            return Err(Error::arg(format!(
                "unitary dimension {} not in {{2, 4}}",
                m.dim()
            )));
        }
        if !m.is_finite() {
            return Err(Error::arg("non-finite matrix entries"));
        }
        let err = m.unitarity_error();
        if err > UNITARITY_TOL {
            return Err(Error::arg(format!(
                "matrix not unitary: |U†U - I| = {err:.3e}"
            )));
        }
        Ok(ComplexUnitary(m))
    }

    pub fn from_row_major(entries: &[C64]) -> Result<Self> {
        Self::new(CMatrix::from_row_major(entries)?)
    }

    pub fn identity(dim: usize) -> Self {
        assert!(dim == 2 || dim == 4);
        ComplexUnitary(CMatrix::identity(dim))
    }

    /// Wraps a matrix already known to be unitary.
    pub(crate) fn from_trusted(m: CMatrix) -> Self {
        debug_assert!(m.unitarity_error() < 1e-8);
        ComplexUnitary(m)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    #[inline]
    pub fn matrix(&self) -> &CMatrix {
        &self.0
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> C64 {
        self.0[(r, c)]
    }

    pub fn adjoint(&self) -> Self {
        ComplexUnitary(self.0.adjoint())
    }

    /// Product `self · rhs`.
    pub fn compose(&self, rhs: &ComplexUnitary) -> Self {
        ComplexUnitary(self.0 * rhs.0)
    }

    pub fn kron(&self, other: &ComplexUnitary) -> Result<Self> {
        if self.dim() * other.dim() > 4 {
            return Err(Error::arg("tensor product exceeds dimension 4"));
        }
        Ok(ComplexUnitary(self.0.kron(&other.0)))
    }

    pub fn scale_phase(&self, phase: f64) -> Self {
        ComplexUnitary(self.0.scale(C64::from_polar(1.0, phase)))
    }

    pub fn to_row_major(&self) -> Vec<C64> {
        self.0.to_row_major()
    }
}

/// Standard gates, with `P_a = exp(-i a P / 2)` for rotations.
pub mod gates {
    use super::*;

    pub fn x() -> ComplexUnitary {
        ComplexUnitary(pauli::x())
    }

    pub fn y() -> ComplexUnitary {
        ComplexUnitary(pauli::y())
    }

    pub fn z() -> ComplexUnitary {
        ComplexUnitary(pauli::z())
    }

    pub fn hadamard() -> ComplexUnitary {
        let h = C64::new(FRAC_1_SQRT_2, 0.0);
        ComplexUnitary(CMatrix::from_rows([[h, h], [h, -h]]))
    }

    pub fn rx(theta: f64) -> ComplexUnitary {
        let (s, c) = (theta / 2.0).sin_cos();
        ComplexUnitary(CMatrix::from_rows([
            [C64::new(c, 0.0), C64::new(0.0, -s)],
            [C64::new(0.0, -s), C64::new(c, 0.0)],
        ]))
    }

    pub fn ry(theta: f64) -> ComplexUnitary {
        let (s, c) = (theta / 2.0).sin_cos();
        ComplexUnitary(CMatrix::from_rows([
            [C64::new(c, 0.0), C64::new(-s, 0.0)],
            [C64::new(s, 0.0), C64::new(c, 0.0)],
        ]))
    }

    pub fn rz(phi: f64) -> ComplexUnitary {
        ComplexUnitary(CMatrix::diagonal(&[
            C64::from_polar(1.0, -phi / 2.0),
            C64::from_polar(1.0, phi / 2.0),
        ]))
    }

    /// Rotation by `theta` about the in-plane axis at azimuth `phase`.
    pub fn rxy(theta: f64, phase: f64) -> ComplexUnitary {
        let (s, c) = (theta / 2.0).sin_cos();
        let e = C64::from_polar(1.0, phase);
        ComplexUnitary(CMatrix::from_rows([
            [C64::new(c, 0.0), -I * s * e.conj()],
            [-I * s * e, C64::new(c, 0.0)],
        ]))
    }

    /// Controlled-X with the first qubit as control.
    pub fn cnot() -> ComplexUnitary {
        let mut m = CMatrix::zeros(4);
        m[(0, 0)] = ONE;
        m[(1, 1)] = ONE;
        m[(2, 3)] = ONE;
        m[(3, 2)] = ONE;
        ComplexUnitary(m)
    }

    pub fn swap() -> ComplexUnitary {
        let mut m = CMatrix::zeros(4);
        m[(0, 0)] = ONE;
        m[(1, 2)] = ONE;
        m[(2, 1)] = ONE;
        m[(3, 3)] = ONE;
        ComplexUnitary(m)
    }

    pub fn xx() -> ComplexUnitary {
        ComplexUnitary(pauli::x().kron(&pauli::x()))
    }
}
