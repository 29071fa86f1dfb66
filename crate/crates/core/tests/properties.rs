// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! Structural invariants over randomised inputs.

mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spinhom::architectures::geometric_mean;
use spinhom::landscape::{sample_ou, OUParams};
use spinhom::montecarlo::summarize;
use spinhom::qdyn::{
    expm_hermitian, gates, propagate, schmidt_coefficients, strip_z, su2_decompose, ComplexUnitary,
    HamiltonianTrace,
};
use spinhom::units::NM;

fn su2(a: f64, t: f64, b: f64, phase: f64) -> ComplexUnitary {
    gates::rz(a)
        .compose(&gates::rx(t))
        .compose(&gates::rz(b))
        .scale_phase(phase)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn propagation_is_unitary(seed in any::<u64>(), dim in prop::sample::select(vec![2usize, 4]), w in 0.1f64..30.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h0 = common::random_hermitian(&mut rng, dim, 10.0);
        let h1 = common::random_hermitian(&mut rng, dim, 10.0);
        let tr = HamiltonianTrace::new(dim, 1.0, 300, move |t: f64| h0 + h1.scale_re((w * t).sin())).unwrap();
        prop_assert!(propagate(&tr).unwrap().matrix().unitarity_error() < 1e-10);
    }

    #[test]
    fn hermitian_exponential_is_unitary(seed in any::<u64>(), t in -5.0f64..5.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = common::random_hermitian(&mut rng, 4, 3.0);
        prop_assert!(h.is_hermitian(1e-12));
        prop_assert!(expm_hermitian(&h, t).unitarity_error() < 1e-10);
    }

    #[test]
    fn su2_reconstructs(a in -3.1f64..3.1, t in 0.01f64..3.13, b in -3.1f64..3.1, ph in -3.1f64..3.1) {
        let u = su2(a, t, b, ph);
        let d = su2_decompose(&u).unwrap();
        prop_assert!(d.reconstruct().max_abs_diff(u.matrix()) < 1e-9);
    }

    #[test]
    fn strip_z_ignores_z_frames(a in -3.1f64..3.1, t in 0.0f64..3.13, b in -3.1f64..3.1, ph in -3.1f64..3.1) {
        let bare = strip_z(&gates::rx(t)).unwrap();
        let dressed = strip_z(&su2(a, t, b, ph)).unwrap();
        prop_assert!(bare.matrix().max_abs_diff(dressed.matrix()) < 1e-12);
    }

    #[test]
    fn schmidt_weights_sum_to_dimension(a in -3.1f64..3.1, t in 0.0f64..3.13, b in -3.1f64..3.1, mix in 0.0f64..1.0) {
        let local = su2(a, t, b, 0.0).kron(&su2(b, mix, a, 0.0)).unwrap();
        let u = local.compose(&gates::cnot()).compose(&ComplexUnitary::new(expm_hermitian(
            &spinhom::qdyn::pauli::heisenberg(), mix)).unwrap());
        let s = schmidt_coefficients(&u).unwrap();
        prop_assert!((s.norm_sq() - 4.0).abs() < 1e-9);
        prop_assert!(s.coefficients.windows(2).all(|w| w[0] >= w[1] - 1e-12));
        let p = schmidt_coefficients(&local).unwrap();
        prop_assert_eq!(p.rank(1e-9), 1);
    }

    #[test]
    fn dot_average_within_sample_range(seed in any::<u64>(), x in 10.0f64..190.0) {
        let l = sample_ou(&OUParams::new(1e-3, 200.0 * NM, seed)).unwrap();
        let (lo, hi) = l.samples().iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &s| (a.min(s), b.max(s)));
        let g = l.dot_average(x * NM).unwrap();
        prop_assert!(g >= lo - 1e-15 && g <= hi + 1e-15);
    }

    #[test]
    fn summary_is_ordered(xs in prop::collection::vec(-1e3f64..1e3, 1..200)) {
        let s = summarize(&xs).unwrap();
        let (lo, hi) = xs.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| (a.min(v), b.max(v)));
        prop_assert!(lo <= s.p50 && s.p50 <= s.p95 && s.p95 <= hi);
        prop_assert!(s.mean >= lo - 1e-9 && s.mean <= hi + 1e-9 && s.std >= 0.0);
    }

    #[test]
    fn geometric_mean_bounded(fs in prop::collection::vec(1e-6f64..1.0, 1..50)) {
        let g = geometric_mean(&fs);
        let arith = fs.iter().sum::<f64>() / fs.len() as f64;
        let min = fs.iter().cloned().fold(1.0, f64::min);
        prop_assert!(g <= arith + 1e-12 && g >= min - 1e-12);
    }
}
