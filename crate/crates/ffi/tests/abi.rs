// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use spinhom_ffi::*;

fn last_error() -> String {
    let p = spinhom_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn landscape_handle_lifecycle() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(
            spinhom_landscape_new(1e-3, 200e-9, 4, false, &mut h),
            SpinhomStatus::Ok
        );
        let n = spinhom_landscape_len(h);
        assert_eq!(n, 201);
        let mut buf = vec![0.0; n];
        assert_eq!(spinhom_landscape_samples(h, buf.as_mut_ptr(), n), n);
        let mut g = 0.0;
        assert_eq!(
            spinhom_landscape_dot_average(h, 100e-9, &mut g),
            SpinhomStatus::Ok
        );
        assert!((g - 2.0).abs() < 0.02);
        spinhom_landscape_free(h);
        spinhom_landscape_free(ptr::null_mut());
    }
}

#[test]
fn errors_carry_codes_and_messages() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(
            spinhom_landscape_new(-1.0, 200e-9, 0, false, &mut h),
            SpinhomStatus::InvalidArgument
        );
        assert!(h.is_null());
        assert!(!last_error().is_empty());
        assert_eq!(
            spinhom_tunnel_infidelity(1.0, 1.0, 1, ptr::null_mut()),
            SpinhomStatus::NullPointer
        );
        assert!(last_error().contains("out"));
    }
}

#[test]
fn gate_sims_match_core() {
    let rabi = 2.0 * std::f64::consts::PI * 5e6;
    let mut inf = 0.0;
    unsafe {
        assert_eq!(
            spinhom_exchange_infidelity(100.0, 1.0, rabi, &mut inf),
            SpinhomStatus::Ok
        );
    }
    let cfg = spinhom::protocols::ExchangeConfig::from_ratios(100.0, 1.0, rabi).unwrap();
    assert_eq!(inf, spinhom::protocols::exchange_gate_sim(&cfg).unwrap().1);

    let mut e = SpinhomEstimate::default();
    unsafe {
        assert_eq!(
            spinhom_estimate(2e-3, 0.1, rabi, 20e-9, 2e-3, 2.0, &mut e),
            SpinhomStatus::Ok
        );
    }
    assert!((e.d_min_m * 1e6 - 12.5).abs() < 0.1);
}

#[test]
fn shuttle_through_handle() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(
            spinhom_landscape_new(0.0, 1.2e-6, 1, false, &mut h),
            SpinhomStatus::Ok
        );
        let mut inf = 1.0;
        let st = spinhom_shuttle_infidelity(
            h,
            1e-6,
            10.0,
            0.6e-6,
            2.0 * std::f64::consts::PI * 5e6,
            0.1,
            SpinhomDriveMode::DeviceMean,
            &mut inf,
        );
        assert_eq!(st, SpinhomStatus::Ok, "{}", last_error());
        assert!(inf < 1e-8);
        spinhom_landscape_free(h);
    }
}

#[test]
fn sweep_roundtrip() {
    let spec = CString::new(
        r#"{"simulator": "exchange", "axes": [{"name": "omega12_over_omega", "values": [1, 2]}],
            "fixed": {"J_over_omega": 100}, "trials_per_point": 1, "base_seed": 0}"#,
    )
    .unwrap();
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(
            spinhom_sweep_run(spec.as_ptr(), 1, &mut h),
            SpinhomStatus::Ok,
            "{}",
            last_error()
        );
        assert_eq!(spinhom_sweep_n_points(h), 2);
        let mut s = SpinhomPointSummary::default();
        assert_eq!(spinhom_sweep_point(h, 1, &mut s), SpinhomStatus::Ok);
        assert_eq!(s.n, 1);
        assert!(s.mean > 0.0);
        assert_eq!(spinhom_sweep_point(h, 2, &mut s), SpinhomStatus::Range);
        let mut js = ptr::null_mut();
        assert_eq!(spinhom_sweep_to_json(h, &mut js), SpinhomStatus::Ok);
        let text = CStr::from_ptr(js).to_str().unwrap().to_owned();
        spinhom_string_free(js);
        assert!(text.contains("\"points\""));
        spinhom_sweep_free(h);

        let bad = CString::new("{\"simulator\": 3}").unwrap();
        assert_eq!(
            spinhom_sweep_run(bad.as_ptr(), 1, &mut h),
            SpinhomStatus::Config
        );
    }
}

#[test]
fn header_is_valid_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/spinhom.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in [
        "spinhom_sweep_run",
        "SpinhomStatus",
        "SPINHOM_STATUS_PLAN_CONFLICT",
        "typedef struct SpinhomLandscape",
    ] {
        assert!(text.contains(name), "{name} missing from header");
    }
    let Ok(out) = Command::new("cc")
        .args(["-fsyntax-only", "-std=c99", "-Wall", "-Werror", "-x", "c"])
        .arg(&header)
        .output()
    else {
        return;
    };
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}
