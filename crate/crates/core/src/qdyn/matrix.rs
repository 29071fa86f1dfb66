// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! Small dense complex matrices (dimension up to 4) stored inline.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

const MAX_DIM: usize = 4;

/// A square complex matrix of dimension 1..=4, row-major, no heap.
#[derive(Clone, Copy, PartialEq)]
pub struct CMatrix {
    dim: usize,
    data: [C64; MAX_DIM * MAX_DIM],
}

impl CMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!((1..=MAX_DIM).contains(&dim), "dimension {dim} unsupported");
        CMatrix {
            dim,
            data: [ZERO; MAX_DIM * MAX_DIM],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for k in 0..dim {
            m[(k, k)] = ONE;
        }
        m
    }

    /// Builds a matrix from row-major entries; `entries.len()` must be a
    /// perfect square no larger than 16.
    pub fn from_row_major(entries: &[C64]) -> Result<Self> {
        let dim = (entries.len() as f64).sqrt().round() as usize;
        if dim == 0 || dim > MAX_DIM || dim * dim != entries.len() {
            return Err(Error::arg(format!(
                "{} entries do not form a square matrix of dimension <= {MAX_DIM}",
                entries.len()
            )));
        }
        let mut m = Self::zeros(dim);
        for (k, v) in entries.iter().enumerate() {
            m[(k / dim, k % dim)] = *v;
        }
        Ok(m)
    }

    pub fn from_rows<const N: usize>(rows: [[C64; N]; N]) -> Self {
        let mut m = Self::zeros(N);
        for (r, row) in rows.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                m[(r, c)] = *v;
            }
        }
        m
    }

    pub fn diagonal(diag: &[C64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (k, v) in diag.iter().enumerate() {
            m[(k, k)] = *v;
        }
        m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Row-major copy of the entries.
    pub fn to_row_major(&self) -> Vec<C64> {
        let mut out = Vec::with_capacity(self.dim * self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                out.push(self[(r, c)]);
            }
        }
        out
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                m[(c, r)] = self[(r, c)].conj();
            }
        }
        m
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|k| self[(k, k)]).sum()
    }

    pub fn scale(&self, s: C64) -> Self {
        let mut m = *self;
        for v in m.data.iter_mut() {
            *v *= s;
        }
        m
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.scale(C64::new(s, 0.0))
    }

    /// Kronecker product; the result must still fit in a 4×4 matrix.
    pub fn kron(&self, other: &CMatrix) -> Self {
        let dim = self.dim * other.dim;
        let mut m = Self::zeros(dim);
        for r1 in 0..self.dim {
            for c1 in 0..self.dim {
                let a = self[(r1, c1)];
                for r2 in 0..other.dim {
                    for c2 in 0..other.dim {
                        m[(r1 * other.dim + r2, c1 * other.dim + c2)] = a * other[(r2, c2)];
                    }
                }
            }
        }
        m
    }

    /// Largest entry-wise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &CMatrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        let mut worst = 0.0f64;
        for r in 0..self.dim {
            for c in 0..self.dim {
                worst = worst.max((self[(r, c)] - other[(r, c)]).norm());
            }
        }
        worst
    }

    pub fn max_abs(&self) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..self.dim {
            for c in 0..self.dim {
                worst = worst.max(self[(r, c)].norm());
            }
        }
        worst
    }

    /// Hermitian to within `rel_tol` relative to the largest entry.
    pub fn is_hermitian(&self, rel_tol: f64) -> bool {
        let scale = self.max_abs().max(1.0);
        self.max_abs_diff(&self.adjoint()) <= rel_tol * scale
    }

    /// Max-entry deviation of `self† self` from the identity.
    pub fn unitarity_error(&self) -> f64 {
        (self.adjoint() * *self).max_abs_diff(&CMatrix::identity(self.dim))
    }

    pub fn frobenius_sq(&self) -> f64 {
        let mut s = 0.0;
        for r in 0..self.dim {
            for c in 0..self.dim {
                s += self[(r, c)].norm_sqr();
            }
        }
        s
    }

    pub fn is_finite(&self) -> bool {
        self.data[..self.dim * self.dim]
            .iter()
            .all(|v| v.re.is_finite() && v.im.is_finite())
    }

    /// Applies the matrix to a state vector of matching length.
    pub fn apply(&self, state: &[C64]) -> Vec<C64> {
        assert_eq!(state.len(), self.dim);
        (0..self.dim)
            .map(|r| (0..self.dim).map(|c| self[(r, c)] * state[c]).sum())
            .collect()
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = C64;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &C64 {
        debug_assert!(r < self.dim && c < self.dim);
        &self.data[r * MAX_DIM + c]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut C64 {
        debug_assert!(r < self.dim && c < self.dim);
        &mut self.data[r * MAX_DIM + c]
    }
}

impl Mul for CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in product");
        let n = self.dim;
        let mut m = CMatrix::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self[(r, k)];
                if a == ZERO {
                    continue;
                }
                for c in 0..n {
                    m.data[r * MAX_DIM + c] += a * rhs.data[k * MAX_DIM + c];
                }
            }
        }
        m
    }
}

impl Add for CMatrix {
    type Output = CMatrix;
    fn add(self, rhs: CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in sum");
        let mut m = self;
        for (a, b) in m.data.iter_mut().zip(rhs.data.iter()) {
            *a += *b;
        }
        m
    }
}

impl Sub for CMatrix {
    type Output = CMatrix;
    fn sub(self, rhs: CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in difference");
        let mut m = self;
        for (a, b) in m.data.iter_mut().zip(rhs.data.iter()) {
            *a -= *b;
        }
        m
    }
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMatrix({}x{})[", self.dim, self.dim)?;
        for r in 0..self.dim {
            write!(f, "  ")?;
            for c in 0..self.dim {
                let v = self[(r, c)];
                write!(f, "{:+.6e}{:+.6e}i  ", v.re, v.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Pauli matrices and common spin operators.
pub mod pauli {
    use super::{CMatrix, C64, I, ONE, ZERO};

    pub fn id() -> CMatrix {
        CMatrix::identity(2)
    }

    pub fn x() -> CMatrix {
        CMatrix::from_rows([[ZERO, ONE], [ONE, ZERO]])
    }

    pub fn y() -> CMatrix {
        CMatrix::from_rows([[ZERO, -I], [I, ZERO]])
    }

    pub fn z() -> CMatrix {
        CMatrix::from_rows([[ONE, ZERO], [ZERO, -ONE]])
    }

    /// σ·σ = XX + YY + ZZ on two qubits.
    pub fn heisenberg() -> CMatrix {
        x().kron(&x()) + y().kron(&y()) + z().kron(&z())
    }

    /// `a·I + bx·σx + by·σy + bz·σz` built directly.
    pub fn bloch(a: f64, bx: f64, by: f64, bz: f64) -> CMatrix {
        CMatrix::from_rows([
            [C64::new(a + bz, 0.0), C64::new(bx, -by)],
            [C64::new(bx, by), C64::new(a - bz, 0.0)],
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_algebra() {
        let (x, y, z) = (pauli::x(), pauli::y(), pauli::z());
        assert!((x * y).max_abs_diff(&z.scale(I)) < 1e-15);
        assert!((x * x).max_abs_diff(&pauli::id()) < 1e-15);
        assert_eq!(pauli::heisenberg().trace(), ZERO);
    }

    #[test]
    fn kron_layout_is_first_factor_major() {
        let zi = pauli::z().kron(&pauli::id());
        assert_eq!(zi[(2, 2)], -ONE);
        assert_eq!(zi[(1, 1)], ONE);
    }

    #[test]
    fn rejects_non_square_input() {
        assert!(CMatrix::from_row_major(&[ONE; 3]).is_err());
        assert!(CMatrix::from_row_major(&[ONE; 25]).is_err());
        assert_eq!(CMatrix::from_row_major(&[ONE; 4]).unwrap().dim(), 2);
    }
}
