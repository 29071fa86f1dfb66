// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

#![allow(dead_code)]

use rand::Rng;
use spinhom::qdyn::{CMatrix, C64};

/// Classical fourth-order Runge-Kutta on `dU/dt = -i H(t) U`.
pub fn rk4_propagator(dim: usize, duration: f64, n: usize, h: impl Fn(f64) -> CMatrix) -> CMatrix {
    let mi = C64::new(0.0, -1.0);
    let dt = duration / n as f64;
    let f = |t: f64, u: CMatrix| (h(t) * u).scale(mi);
    let mut u = CMatrix::identity(dim);
    for k in 0..n {
        let t = k as f64 * dt;
        let k1 = f(t, u);
        let k2 = f(t + 0.5 * dt, u + k1.scale_re(0.5 * dt));
        let k3 = f(t + 0.5 * dt, u + k2.scale_re(0.5 * dt));
        let k4 = f(t + dt, u + k3.scale_re(dt));
        u = u + (k1 + k2.scale_re(2.0) + k3.scale_re(2.0) + k4).scale_re(dt / 6.0);
    }
    u
}

pub fn random_hermitian(rng: &mut impl Rng, dim: usize, scale: f64) -> CMatrix {
    let mut m = CMatrix::zeros(dim);
    for r in 0..dim {
        m[(r, r)] = C64::new(scale * rng.random_range(-1.0..1.0), 0.0);
        for c in r + 1..dim {
            let z = C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)) * scale;
            m[(r, c)] = z;
            m[(c, r)] = z.conj();
        }
    }
    m
}
