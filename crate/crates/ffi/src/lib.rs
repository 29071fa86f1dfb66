// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! C ABI over the spinhom toolkit.
//!
//! Every fallible call returns a [`SpinhomStatus`] and writes its result
//! through an out-pointer. On failure the message is available from
//! [`spinhom_last_error`] on the same thread. Handles are opaque and must be
//! released with the matching `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use spinhom::landscape::{
    sample_ou, sample_ou_periodic, GFactorLandscape, OUParams, ShuttleTrajectory,
};
use spinhom::montecarlo::{run_sweep, to_json, Registry, SweepResult, SweepSpec};
use spinhom::protocols::{
    estimate_parameters, exchange_gate_sim, shuttled_x_gate_sim, tunnel_gate_sim, DriveMode,
    ExchangeConfig, TunnelConfig,
};
use spinhom::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpinhomStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Model = 3,
    Range = 4,
    PlanConflict = 5,
    Config = 6,
    Io = 7,
    Panic = 8,
}

impl From<&Error> for SpinhomStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::InvalidArgument(_) => SpinhomStatus::InvalidArgument,
            Error::Model(_) => SpinhomStatus::Model,
            Error::Range(_) => SpinhomStatus::Range,
            Error::PlanConflict(_) => SpinhomStatus::PlanConflict,
            Error::Config { .. } => SpinhomStatus::Config,
            Error::Io(_) => SpinhomStatus::Io,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), (SpinhomStatus, String)>) -> SpinhomStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SpinhomStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            SpinhomStatus::Panic
        }
    }
}

fn core<T>(r: spinhom::Result<T>) -> Result<T, (SpinhomStatus, String)> {
    r.map_err(|e| (SpinhomStatus::from(&e), e.to_string()))
}

fn non_null<T>(p: *const T, name: &str) -> Result<(), (SpinhomStatus, String)> {
    if p.is_null() {
        Err((SpinhomStatus::NullPointer, format!("`{name}` is null")))
    } else {
        Ok(())
    }
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn spinhom_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Static, NUL-terminated version string.
#[no_mangle]
pub extern "C" fn spinhom_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn spinhom_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Opaque g-factor landscape.
pub struct SpinhomLandscape(GFactorLandscape);

/// Samples an Ornstein-Uhlenbeck landscape (`g0 = 2`, λ = 20 nm, 1 nm grid)
/// of `length_m` metres.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn spinhom_landscape_new(
    delta_g_rel: f64,
    length_m: f64,
    seed: u64,
    periodic: bool,
    out: *mut *mut SpinhomLandscape,
) -> SpinhomStatus {
    guard(|| {
        non_null(out, "out")?;
        let p = OUParams::new(delta_g_rel, length_m, seed);
        let l = core(if periodic {
            sample_ou_periodic(&p)
        } else {
            sample_ou(&p)
        })?;
        *out = Box::into_raw(Box::new(SpinhomLandscape(l)));
        Ok(())
    })
}

/// # Safety
/// `h` must be null or a handle from [`spinhom_landscape_new`].
#[no_mangle]
pub unsafe extern "C" fn spinhom_landscape_free(h: *mut SpinhomLandscape) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Number of grid samples.
///
/// # Safety
/// `h` must be a live landscape handle.
#[no_mangle]
pub unsafe extern "C" fn spinhom_landscape_len(h: *const SpinhomLandscape) -> usize {
    h.as_ref().map_or(0, |l| l.0.samples().len())
}

/// Copies up to `cap` raw samples into `buf` and returns how many were written.
///
/// # Safety
/// `h` must be a live handle and `buf` must hold `cap` doubles.
#[no_mangle]
pub unsafe extern "C" fn spinhom_landscape_samples(
    h: *const SpinhomLandscape,
    buf: *mut f64,
    cap: usize,
) -> usize {
    let (Some(l), false) = (h.as_ref(), buf.is_null()) else {
        return 0;
    };
    let s = l.0.samples();
    let n = s.len().min(cap);
    ptr::copy_nonoverlapping(s.as_ptr(), buf, n);
    n
}

/// Dot-averaged g at position `x_m`.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn spinhom_landscape_dot_average(
    h: *const SpinhomLandscape,
    x_m: f64,
    out: *mut f64,
) -> SpinhomStatus {
    guard(|| {
        non_null(h, "landscape")?;
        non_null(out, "out")?;
        *out = core((*h).0.dot_average(x_m))?;
        Ok(())
    })
}

/// Exchange X⊗X infidelity for `J/Ω` (rounded to an even integer), `ω12/Ω`
/// and Ω in rad/s.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn spinhom_exchange_infidelity(
    j_over_omega: f64,
    omega12_over_omega: f64,
    rabi: f64,
    out: *mut f64,
) -> SpinhomStatus {
    guard(|| {
        non_null(out, "out")?;
        let cfg = core(ExchangeConfig::from_ratios(
            j_over_omega,
            omega12_over_omega,
            rabi,
        ))?;
        *out = core(exchange_gate_sim(&cfg))?.1;
        Ok(())
    })
}

/// Tunnel-coupled X infidelity with `t_c = 2 p Ω`; frequencies in rad/s.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn spinhom_tunnel_infidelity(
    omega12: f64,
    rabi: f64,
    p: u32,
    out: *mut f64,
) -> SpinhomStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = core(tunnel_gate_sim(&TunnelConfig::synchronised(
            omega12, rabi, p,
        )))?
        .infidelity;
        Ok(())
    })
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpinhomDriveMode {
    /// Carrier at the path-averaged splitting.
    PathMean = 0,
    /// Carrier at the device-average splitting.
    DeviceMean = 1,
}

/// X infidelity of a spin shuttled back and forth over `d_m` at `v_mps`,
/// centred at `centre_m` on the landscape.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn spinhom_shuttle_infidelity(
    h: *const SpinhomLandscape,
    d_m: f64,
    v_mps: f64,
    centre_m: f64,
    rabi: f64,
    b0_tesla: f64,
    mode: SpinhomDriveMode,
    out: *mut f64,
) -> SpinhomStatus {
    guard(|| {
        non_null(h, "landscape")?;
        non_null(out, "out")?;
        let traj = core(ShuttleTrajectory::triangle(d_m, v_mps, centre_m))?;
        let mode = match mode {
            SpinhomDriveMode::PathMean => DriveMode::I,
            SpinhomDriveMode::DeviceMean => DriveMode::II,
        };
        *out = core(shuttled_x_gate_sim(&(*h).0, &traj, rabi, b0_tesla, mode))?;
        Ok(())
    })
}

/// Closed-form design point; SI units, frequencies in rad/s.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct SpinhomEstimate {
    pub d_min_m: f64,
    pub v_min_mps: f64,
    pub g_min_b0: f64,
    pub sigma_at_d: f64,
    pub i1: f64,
    pub i2: f64,
}

/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn spinhom_estimate(
    delta_g: f64,
    b0_tesla: f64,
    rabi: f64,
    lambda_m: f64,
    target_infidelity: f64,
    quantile_factor: f64,
    out: *mut SpinhomEstimate,
) -> SpinhomStatus {
    guard(|| {
        non_null(out, "out")?;
        let e = core(estimate_parameters(
            delta_g,
            b0_tesla,
            rabi,
            lambda_m,
            target_infidelity,
            quantile_factor,
        ))?;
        *out = SpinhomEstimate {
            d_min_m: e.d_min,
            v_min_mps: e.v_min,
            g_min_b0: e.g_min_b0,
            sigma_at_d: e.sigma_at_d,
            i1: e.i1,
            i2: e.i2,
        };
        Ok(())
    })
}

/// Opaque sweep result.
pub struct SpinhomSweep(SweepResult);

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct SpinhomPointSummary {
    /// Successful trials.
    pub n: usize,
    pub failures: usize,
    pub mean: f64,
    pub std: f64,
    pub p50: f64,
    pub p95: f64,
}

/// Runs a sweep given as JSON (`simulator`, `axes`, `fixed`,
/// `trials_per_point`, `base_seed`). `workers = 0` uses all cores.
///
/// # Safety
/// `spec_json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn spinhom_sweep_run(
    spec_json: *const c_char,
    workers: usize,
    out: *mut *mut SpinhomSweep,
) -> SpinhomStatus {
    guard(|| {
        non_null(spec_json, "spec_json")?;
        non_null(out, "out")?;
        let text = CStr::from_ptr(spec_json).to_str().map_err(|e| {
            (
                SpinhomStatus::InvalidArgument,
                format!("spec is not UTF-8: {e}"),
            )
        })?;
        let spec: SweepSpec = serde_json::from_str(text).map_err(|e| {
            (
                SpinhomStatus::Config,
                format!("cannot parse sweep spec: {e}"),
            )
        })?;
        let r = core(run_sweep(
            &spec,
            &Registry::default(),
            (workers > 0).then_some(workers),
        ))?;
        *out = Box::into_raw(Box::new(SpinhomSweep(r)));
        Ok(())
    })
}

/// # Safety
/// `h` must be null or a handle from [`spinhom_sweep_run`].
#[no_mangle]
pub unsafe extern "C" fn spinhom_sweep_free(h: *mut SpinhomSweep) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live sweep handle.
#[no_mangle]
pub unsafe extern "C" fn spinhom_sweep_n_points(h: *const SpinhomSweep) -> usize {
    h.as_ref().map_or(0, |s| s.0.points.len())
}

/// Statistics of grid point `index`. A point where every trial failed
/// reports `n = 0` and NaN statistics.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn spinhom_sweep_point(
    h: *const SpinhomSweep,
    index: usize,
    out: *mut SpinhomPointSummary,
) -> SpinhomStatus {
    guard(|| {
        non_null(h, "sweep")?;
        non_null(out, "out")?;
        let points = &(*h).0.points;
        let p = points.get(index).ok_or_else(|| {
            (
                SpinhomStatus::Range,
                format!("point {index} of {}", points.len()),
            )
        })?;
        *out = match p.summary {
            Some(s) => SpinhomPointSummary {
                n: s.n,
                failures: p.failures,
                mean: s.mean,
                std: s.std,
                p50: s.p50,
                p95: s.p95,
            },
            None => SpinhomPointSummary {
                n: 0,
                failures: p.failures,
                mean: f64::NAN,
                std: f64::NAN,
                p50: f64::NAN,
                p95: f64::NAN,
            },
        };
        Ok(())
    })
}

/// Full result as JSON; free with [`spinhom_string_free`].
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn spinhom_sweep_to_json(
    h: *const SpinhomSweep,
    out: *mut *mut c_char,
) -> SpinhomStatus {
    guard(|| {
        non_null(h, "sweep")?;
        non_null(out, "out")?;
        let text = to_json(&(*h).0).to_string();
        *out = CString::new(text)
            .map_err(|e| (SpinhomStatus::Io, e.to_string()))?
            .into_raw();
        Ok(())
    })
}
