// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! Time-ordered propagation by exact exponentiation of midpoint-sampled
//! Hamiltonians.

use nalgebra::Matrix4;

use super::matrix::{CMatrix, C64, ZERO};
use super::unitary::{ComplexUnitary, UNITARITY_TOL};
use crate::error::{Error, Result};

pub const DEFAULT_STEPS: usize = 10_000;

/// Hermiticity tolerance, relative to the largest Hamiltonian entry.
pub const HERMITICITY_TOL: f64 = 1e-12;

/// A Hamiltonian `H(t)` in rad/s sampled over `[0, duration]`.
pub struct HamiltonianTrace<F> {
    dim: usize,
    duration: f64,
    n_steps: usize,
    evaluate: F,
    constant: bool,
}

impl<F: Fn(f64) -> CMatrix> HamiltonianTrace<F> {
    pub fn new(dim: usize, duration: f64, n_steps: usize, evaluate: F) -> Result<Self> {
        if dim != 2 && dim != 4 {
            return Err(Error::arg(format!(
                "Hamiltonian dimension {dim} not in {{2, 4}}"
            )));
        }
        if !(duration.is_finite() && duration > 0.0) {
            return Err(Error::arg(format!(
                "duration must be positive, got {duration}"
            )));
        }
        Ok(HamiltonianTrace {
            dim,
            duration,
            n_steps,
            evaluate,
            constant: false,
        })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn duration(&self) -> f64 {
        self.duration
    }

    #[inline]
    pub fn n_steps(&self) -> usize {
        self.n_steps
    }

    pub fn dt(&self) -> f64 {
        self.duration / self.n_steps as f64
    }

    pub fn evaluate(&self, t: f64) -> CMatrix {
        (self.evaluate)(t)
    }
}

/// A time-independent trace; propagation exponentiates once.
pub fn constant_trace(
    h: CMatrix,
    duration: f64,
    n_steps: usize,
) -> Result<HamiltonianTrace<impl Fn(f64) -> CMatrix>> {
    let mut tr = HamiltonianTrace::new(h.dim(), duration, n_steps, move |_| h)?;
    tr.constant = true;
    Ok(tr)
}

fn checked_sample<F: Fn(f64) -> CMatrix>(h: &HamiltonianTrace<F>, t: f64) -> Result<CMatrix> {
    let m = h.evaluate(t);
    if m.dim() != h.dim {
        return Err(Error::Model(format!(
            "Hamiltonian at t = {t:e} has dimension {} (expected {})",
            m.dim(),
            h.dim
        )));
    }
    if !m.is_finite() || !m.is_hermitian(HERMITICITY_TOL) {
        return Err(Error::Model(format!(
            "Hamiltonian not Hermitian at t = {t:e}"
        )));
    }
    Ok(m)
}

/// Returns the time-ordered product of `exp(-i H(t_k) dt)` over midpoints
/// `t_k = (k + 1/2) dt`.
pub fn propagate<F: Fn(f64) -> CMatrix>(h: &HamiltonianTrace<F>) -> Result<ComplexUnitary> {
    propagate_observed(h, 0, |_, _, _| {})
}

/// As [`propagate`], calling `observe(k, t, U(t))` at `t = 0` and after every
/// `every` steps (never when `every == 0`).
pub fn propagate_observed<F, O>(
    h: &HamiltonianTrace<F>,
    every: usize,
    mut observe: O,
) -> Result<ComplexUnitary>
where
    F: Fn(f64) -> CMatrix,
    O: FnMut(usize, f64, &CMatrix),
{
    if h.n_steps == 0 {
        return Err(Error::arg("n_steps must be at least 1"));
    }
    let dt = h.dt();
    let mut u = CMatrix::identity(h.dim);
    if every > 0 {
        observe(0, 0.0, &u);
    }
    if h.constant && every == 0 {
        let m = checked_sample(h, 0.5 * dt)?;
        u = expm_hermitian(&m, h.duration);
    } else {
        let fixed = if h.constant {
            Some(expm_hermitian(&checked_sample(h, 0.5 * dt)?, dt))
        } else {
            None
        };
        for k in 0..h.n_steps {
            let step = match fixed {
                Some(s) => s,
                None => {
                    let t = (k as f64 + 0.5) * dt;
                    expm_hermitian(&checked_sample(h, t)?, dt)
                }
            };
            u = step * u;
            if every > 0 && (k + 1) % every == 0 {
                observe(k + 1, (k + 1) as f64 * dt, &u);
            }
        }
    }
    let err = u.unitarity_error();
    if !(err <= UNITARITY_TOL) {
        return Err(Error::Model(format!(
            "propagator lost unitarity: |U†U - I| = {err:.3e}"
        )));
    }
    Ok(ComplexUnitary::from_trusted(u))
}

/// `exp(-i H t)` for Hermitian `H` of dimension 2 or 4.
pub fn expm_hermitian(h: &CMatrix, t: f64) -> CMatrix {
    match h.dim() {
        2 => expm_hermitian_2(h, t),
        4 => expm_hermitian_4(h, t),
        d => panic!("expm_hermitian: unsupported dimension {d}"),
    }
}

fn expm_hermitian_2(h: &CMatrix, t: f64) -> CMatrix {
    let h0 = 0.5 * (h[(0, 0)].re + h[(1, 1)].re);
    let hz = 0.5 * (h[(0, 0)].re - h[(1, 1)].re);
    let off = 0.5 * (h[(1, 0)] + h[(0, 1)].conj());
    let (hx, hy) = (off.re, off.im);
    let r = (hx * hx + hy * hy + hz * hz).sqrt();
    let (s, c) = (r * t).sin_cos();
    // sin(r t) / r, continuous at r -> 0
    let k = if r * t.abs() > 1e-8 {
        s / r
    } else {
        t * (1.0 - (r * t).powi(2) / 6.0)
    };
    let phase = C64::from_polar(1.0, -h0 * t);
    let m = CMatrix::from_rows([
        [C64::new(c, -k * hz), C64::new(-k * hy, -k * hx)],
        [C64::new(k * hy, -k * hx), C64::new(c, k * hz)],
    ]);
    m.scale(phase)
}

fn expm_hermitian_4(h: &CMatrix, t: f64) -> CMatrix {
    let mut a = Matrix4::<C64>::zeros();
    for r in 0..4 {
        for c in 0..4 {
            a[(r, c)] = 0.5 * (h[(r, c)] + h[(c, r)].conj());
        }
    }
    let eig = a.symmetric_eigen();
    let phases: [C64; 4] = std::array::from_fn(|k| C64::from_polar(1.0, -eig.eigenvalues[k] * t));
    let v = &eig.eigenvectors;
    let mut out = CMatrix::zeros(4);
    for r in 0..4 {
        for c in 0..4 {
            let mut acc = ZERO;
            for k in 0..4 {
                acc += v[(r, k)] * phases[k] * v[(c, k)].conj();
            }
            out[(r, c)] = acc;
        }
    }
    out
}

/// Expectation `<psi| O |psi>` for normalised `psi`.
pub fn expectation(op: &CMatrix, psi: &[C64]) -> f64 {
    let o_psi = op.apply(psi);
    psi.iter()
        .zip(o_psi.iter())
        .map(|(a, b)| (a.conj() * b).re)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qdyn::matrix::{pauli, I};
    use std::f64::consts::PI;

    #[test]
    fn commuting_sigma_z_closed_form() {
        let delta = 2.0e7;
        let h = pauli::z().scale_re(delta / 2.0);
        let tr = HamiltonianTrace::new(2, PI / delta, 100, move |_| h).unwrap();
        let u = propagate(&tr).unwrap();
        let want = CMatrix::diagonal(&[
            C64::from_polar(1.0, -PI / 2.0),
            C64::from_polar(1.0, PI / 2.0),
        ]);
        assert!(u.matrix().max_abs_diff(&want) < 1e-12);
    }

    #[test]
    fn resonant_rabi_gives_x_up_to_phase() {
        let omega = 3.0e7;
        let h = pauli::x().scale_re(omega / 2.0);
        let tr = constant_trace(h, PI / omega, DEFAULT_STEPS).unwrap();
        let u = propagate(&tr).unwrap();
        assert!(u.matrix().max_abs_diff(&pauli::x().scale(-I)) < 1e-12);
    }

    #[test]
    fn zero_steps_is_an_argument_error() {
        let tr = HamiltonianTrace::new(2, 1.0, 0, |_| pauli::z()).unwrap();
        assert!(matches!(propagate(&tr), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn non_hermitian_is_a_model_error() {
        let tr = HamiltonianTrace::new(2, 1.0, 4, |_| pauli::z().scale(I)).unwrap();
        assert!(matches!(propagate(&tr), Err(Error::Model(_))));
    }

    #[test]
    fn four_level_exponential_matches_kron_of_two_level() {
        let a = pauli::bloch(0.3, 0.2, -0.7, 1.1);
        let b = pauli::bloch(-0.1, 0.5, 0.4, -0.2);
        let h = a.kron(&CMatrix::identity(2)) + CMatrix::identity(2).kron(&b);
        let u4 = expm_hermitian(&h, 0.8);
        let want = expm_hermitian(&a, 0.8).kron(&expm_hermitian(&b, 0.8));
        assert!(u4.max_abs_diff(&want) < 1e-12);
    }

    #[test]
    fn observer_sees_every_block() {
        let tr = HamiltonianTrace::new(2, 1.0, 10, |_| pauli::x()).unwrap();
        let mut seen = vec![];
        propagate_observed(&tr, 5, |k, _, _| seen.push(k)).unwrap();
        assert_eq!(seen, vec![0, 5, 10]);
    }
}
