// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! Gate fidelity metrics and removal of virtual-Z rotations.

use super::matrix::{CMatrix, C64};
use super::unitary::ComplexUnitary;
use crate::error::{Error, Result};

/// Removes the Z rotations from a single-qubit unitary:
/// `(|u00|, -i|u01|; -i|u10|, |u11|)`.
pub fn strip_z(u: &ComplexUnitary) -> Result<ComplexUnitary> {
    if u.dim() != 2 {
        return Err(Error::arg(format!(
            "strip_z needs a 2x2 unitary, got dimension {}",
            u.dim()
        )));
    }
    let m = CMatrix::from_rows([
        [
            C64::new(u.get(0, 0).norm(), 0.0),
            C64::new(0.0, -u.get(0, 1).norm()),
        ],
        [
            C64::new(0.0, -u.get(1, 0).norm()),
            C64::new(u.get(1, 1).norm(), 0.0),
        ],
    ]);
    Ok(ComplexUnitary::from_trusted(m))
}

/// `|tr(target† Ũ)|^(2/n_q) / 4`, clamped to `[0, 1]`, where `Ũ` is the
/// Z-stripped operator for single qubits when `strip` is set.
pub fn average_fidelity(
    u: &ComplexUnitary,
    target: &ComplexUnitary,
    n_q: u32,
    strip: bool,
) -> Result<f64> {
    if u.dim() != target.dim() {
        return Err(Error::arg(format!(
            "dimension mismatch: {} vs target {}",
            u.dim(),
            target.dim()
        )));
    }
    if n_q == 0 || 1usize << n_q != u.dim() {
        return Err(Error::arg(format!(
            "n_q = {n_q} inconsistent with dimension {}",
            u.dim()
        )));
    }
    let u = if strip && u.dim() == 2 {
        strip_z(u)?
    } else {
        *u
    };
    let tr = (target.matrix().adjoint() * *u.matrix()).trace().norm();
    Ok((tr.powf(2.0 / n_q as f64) / 4.0).clamp(0.0, 1.0))
}

/// Fidelity against controlled-X (first qubit controls, `|10> <-> |11>`)
/// maximised over global phase and independent Z rotations before and
/// after the gate on each qubit.
///
/// The four entries that CNOT selects carry freely adjustable phases, so the
/// optimum aligns them all.
pub fn crot_fidelity_virtual_z(u: &ComplexUnitary) -> Result<f64> {
    if u.dim() != 4 {
        return Err(Error::arg(format!(
            "CROT fidelity needs a 4x4 unitary, got {}",
            u.dim()
        )));
    }
    let s = u.get(0, 0).norm() + u.get(1, 1).norm() + u.get(2, 3).norm() + u.get(3, 2).norm();
    Ok((s / 4.0).clamp(0.0, 1.0))
}

/// Off-resonant driving envelope `x² / (1 + x²)` with `x = detuning / omega`.
pub fn rabi_infidelity(detuning: f64, omega: f64) -> Result<f64> {
    if !(omega > 0.0) {
        return Err(Error::arg(format!(
            "Rabi frequency must be positive, got {omega}"
        )));
    }
    let x = detuning / omega;
    Ok(x * x / (1.0 + x * x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qdyn::unitary::gates;
    use crate::units::mhz;
    use std::f64::consts::PI;

    #[test]
    fn fidelity_reference_values() {
        let x = gates::x();
        let id = ComplexUnitary::identity(2);
        assert!((average_fidelity(&x, &x, 1, false).unwrap() - 1.0).abs() < 1e-15);
        assert!(average_fidelity(&id, &x, 1, false).unwrap().abs() < 1e-15);
        let half = gates::rx(PI / 2.0);
        assert!((average_fidelity(&half, &x, 1, false).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn strip_matches_direct_rotation() {
        let composite = gates::rz(0.3)
            .compose(&gates::rx(0.7))
            .compose(&gates::rz(-0.2))
            .scale_phase(PI / 4.0);
        let stripped = strip_z(&composite).unwrap();
        assert!(stripped.matrix().max_abs_diff(gates::rx(0.7).matrix()) < 1e-10);
        assert!(
            strip_z(&gates::rz(1.3))
                .unwrap()
                .matrix()
                .max_abs_diff(&CMatrix::identity(2))
                < 1e-15
        );
    }

    #[test]
    fn strip_of_x_has_x_moduli() {
        let s = strip_z(&gates::x()).unwrap();
        for (r, c) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            assert_eq!(s.get(r, c).norm(), gates::x().get(r, c).norm());
        }
        assert!(s.matrix().unitarity_error() < 1e-15);
    }

    #[test]
    fn mismatches_are_argument_errors() {
        let two = gates::x();
        let four = gates::cnot();
        assert!(average_fidelity(&two, &four, 1, true).is_err());
        assert!(average_fidelity(&four, &four, 1, false).is_err());
        assert!(strip_z(&four).is_err());
    }

    #[test]
    fn crot_fidelity_absorbs_local_phases() {
        let pre = gates::rz(0.4).kron(&gates::rz(-1.1)).unwrap();
        let post = gates::rz(2.0).kron(&gates::rz(0.25)).unwrap();
        let u = post.compose(&gates::cnot()).compose(&pre).scale_phase(0.9);
        assert!((crot_fidelity_virtual_z(&u).unwrap() - 1.0).abs() < 1e-14);
        let plain = average_fidelity(&u, &gates::cnot(), 2, false).unwrap();
        assert!(plain < 0.99);
    }

    #[test]
    fn rabi_envelope() {
        assert_eq!(rabi_infidelity(0.0, 1.0).unwrap(), 0.0);
        assert!((rabi_infidelity(2.0, 2.0).unwrap() - 0.5).abs() < 1e-15);
        let i = rabi_infidelity(2.0 * mhz(0.112), mhz(5.0)).unwrap();
        assert!((i - 2.0e-3).abs() < 1e-4, "{i}");
        assert!(rabi_infidelity(1.0, 0.0).is_err());
    }
}
