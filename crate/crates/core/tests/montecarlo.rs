// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! Sweep engine: statistics, reproducibility and serialisation.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use spinhom::montecarlo::{run_sweep, summarize, write_csv, Axis, Registry, SweepSpec};

#[test]
fn summary_of_normal_draws() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let xs: Vec<f64> = (0..100_000)
        .map(|_| StandardNormal.sample(&mut rng))
        .collect();
    let s = summarize(&xs).unwrap();
    assert!(s.mean.abs() < 0.02 && (s.std - 1.0).abs() < 0.02, "{s:?}");
    assert!((s.p95 - 1.645).abs() < 0.03);
}

#[test]
fn mode_i_converges_with_trials() {
    let reg = Registry::default();
    let spec = |n| SweepSpec::new("shuttle_mode_i", vec![], n, 1000).with_fixed("d_um", 0.5);
    let a = run_sweep(&spec(500), &reg, None).unwrap().points[0]
        .summary
        .unwrap();
    let b = run_sweep(&spec(5000), &reg, None).unwrap().points[0]
        .summary
        .unwrap();
    let se = (a.std_err().powi(2) + b.std_err().powi(2)).sqrt();
    assert!(
        (a.mean - b.mean).abs() < 3.0 * se,
        "{} vs {} (se {se:e})",
        a.mean,
        b.mean
    );
}

#[test]
fn csv_is_byte_identical_across_runs_and_workers() {
    let reg = Registry::default();
    let spec = SweepSpec::new(
        "shuttle_mode_ii",
        vec![Axis::new("d_um", vec![0.2, 0.4, 0.8])],
        16,
        77,
    );
    let render = |w| {
        let r = run_sweep(&spec, &reg, Some(w)).unwrap();
        let mut buf = Vec::new();
        write_csv(&r, &mut buf).unwrap();
        buf
    };
    let one = render(1);
    assert_eq!(one, render(1));
    assert_eq!(one, render(3));
}

#[test]
fn unknown_parameter_is_rejected() {
    let spec = SweepSpec::new("exchange", vec![], 1, 0).with_fixed("J", 3.0);
    assert!(run_sweep(&spec, &Registry::default(), None).is_err());
}
