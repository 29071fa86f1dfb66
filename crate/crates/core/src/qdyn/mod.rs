// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! Dense complex linear algebra, propagation, fidelities and decompositions
//! for one and two spins.

pub mod decompose;
pub mod fidelity;
pub mod matrix;
pub mod propagate;
pub mod unitary;

pub use decompose::{schmidt_coefficients, su2_decompose, SU2Decomposition, SchmidtSpectrum};
pub use fidelity::{average_fidelity, crot_fidelity_virtual_z, rabi_infidelity, strip_z};
pub use matrix::{pauli, CMatrix, C64};
pub use propagate::{
    constant_trace, expectation, expm_hermitian, propagate, propagate_observed, HamiltonianTrace,
    DEFAULT_STEPS,
};
pub use unitary::{gates, ComplexUnitary, UNITARITY_TOL};
