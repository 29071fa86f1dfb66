// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! Ornstein–Uhlenbeck g-factor landscapes and Gaussian dot averaging.

use std::io::{Read, Write};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::units::NM;

pub const DEFAULT_G0: f64 = 2.0;
pub const DEFAULT_LAMBDA: f64 = 20.0 * NM;
pub const DEFAULT_DX: f64 = 1.0 * NM;
pub const DEFAULT_DOT_SIGMA: f64 = 7.0 * NM;

/// Half-width of the dot-averaging window in units of the dot width.
pub const WINDOW_SIGMAS: f64 = 5.0;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OUParams {
    pub g0: f64,
    pub delta_g: f64,
    /// Correlation length, m.
    pub lambda: f64,
    /// Grid spacing, m.
    pub dx: f64,
    /// Landscape extent, m.
    pub length: f64,
    pub seed: u64,
}

impl OUParams {
    /// Defaults (`g0 = 2`, `lambda = 20 nm`, `dx = 1 nm`) with a relative
    /// spread `delta_g_rel = delta_g / g0`.
    pub fn new(delta_g_rel: f64, length: f64, seed: u64) -> Self {
        OUParams {
            g0: DEFAULT_G0,
            delta_g: delta_g_rel * DEFAULT_G0,
            lambda: DEFAULT_LAMBDA,
            dx: DEFAULT_DX,
            length,
            seed,
        }
    }

    pub fn with_length(mut self, length: f64) -> Self {
        self.length = length;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !self.g0.is_finite() {
            return Err(Error::arg("g0 must be finite"));
        }
        if !(self.delta_g >= 0.0 && self.delta_g.is_finite()) {
            return Err(Error::arg(format!(
                "delta_g must be >= 0, got {}",
                self.delta_g
            )));
        }
        if !(self.lambda > 0.0 && self.lambda.is_finite()) {
            return Err(Error::arg(format!(
                "lambda must be positive, got {}",
                self.lambda
            )));
        }
        if !(self.dx > 0.0 && self.dx <= self.lambda / 10.0 * (1.0 + 1e-12)) {
            return Err(Error::arg(format!(
                "dx must lie in (0, lambda/10], got dx = {} with lambda = {}",
                self.dx, self.lambda
            )));
        }
        if !(self.length > 0.0 && self.length.is_finite()) {
            return Err(Error::arg(format!(
                "length must be positive, got {}",
                self.length
            )));
        }
        Ok(())
    }
}

/// A sampled intrinsic g-factor profile and its dot-averaged version.
///
/// Open landscapes span `[0, (n-1) dx]`. Periodic landscapes hold `n`
/// samples covering a loop of circumference `n dx` and wrap at the seam.
#[derive(Clone, Debug, PartialEq)]
pub struct GFactorLandscape {
    params: OUParams,
    samples: Vec<f64>,
    dot_sigma: f64,
    periodic: bool,
    smoothed: Vec<f64>,
}

/// Draws an open OU landscape with `floor(length/dx) + 1` samples.
pub fn sample_ou(params: &OUParams) -> Result<GFactorLandscape> {
    params.validate()?;
    let n = (params.length / params.dx + 1e-9).floor() as usize + 1;
    let samples = ou_samples(params, n);
    Ok(GFactorLandscape::build(
        *params,
        samples,
        DEFAULT_DOT_SIGMA,
        false,
    ))
}

/// Draws a loop landscape of circumference `length` with `round(length/dx)`
/// samples.
pub fn sample_ou_periodic(params: &OUParams) -> Result<GFactorLandscape> {
    params.validate()?;
    let n = (params.length / params.dx).round().max(1.0) as usize;
    let samples = ou_samples(params, n);
    let mut p = *params;
    p.length = n as f64 * p.dx;
    Ok(GFactorLandscape::build(p, samples, DEFAULT_DOT_SIGMA, true))
}

/// Euler–Maruyama with a stationary initial draw.
fn ou_samples(p: &OUParams, n: usize) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let a = p.dx / p.lambda;
    let kick = (2.0 * a).sqrt() * p.delta_g;
    let mut out = Vec::with_capacity(n);
    let z: f64 = StandardNormal.sample(&mut rng);
    let mut g = p.g0 + p.delta_g * z;
    out.push(g);
    for _ in 1..n {
        let z: f64 = StandardNormal.sample(&mut rng);
        g += a * (p.g0 - g) + kick * z;
        out.push(g);
    }
    out
}

impl GFactorLandscape {
    fn build(params: OUParams, samples: Vec<f64>, dot_sigma: f64, periodic: bool) -> Self {
        let smoothed = smooth(&samples, params.dx, dot_sigma, periodic);
        GFactorLandscape {
            params,
            samples,
            dot_sigma,
            periodic,
            smoothed,
        }
    }

    /// Wraps an explicit profile sampled at spacing `dx`.
    pub fn from_profile(g0: f64, dx: f64, samples: Vec<f64>, periodic: bool) -> Result<Self> {
        if samples.is_empty() || samples.iter().any(|g| !g.is_finite()) {
            return Err(Error::arg("profile must be non-empty and finite"));
        }
        if !(dx > 0.0) {
            return Err(Error::arg("dx must be positive"));
        }
        let n = samples.len() as f64;
        let length = if periodic {
            n * dx
        } else {
            (n - 1.0).max(0.0) * dx
        };
        let params = OUParams {
            g0,
            delta_g: 0.0,
            lambda: DEFAULT_LAMBDA.max(10.0 * dx),
            dx,
            length,
            seed: 0,
        };
        Ok(Self::build(params, samples, DEFAULT_DOT_SIGMA, periodic))
    }

    /// Replaces the dot width (0 disables averaging).
    pub fn with_dot_sigma(self, dot_sigma: f64) -> Result<Self> {
        if !(dot_sigma >= 0.0 && dot_sigma.is_finite()) {
            return Err(Error::arg("dot_sigma must be >= 0"));
        }
        Ok(Self::build(
            self.params,
            self.samples,
            dot_sigma,
            self.periodic,
        ))
    }

    pub fn params(&self) -> &OUParams {
        &self.params
    }

    pub fn g0(&self) -> f64 {
        self.params.g0
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    /// Dot-averaged g at each grid node.
    pub fn smoothed(&self) -> &[f64] {
        &self.smoothed
    }

    pub fn dot_sigma(&self) -> f64 {
        self.dot_sigma
    }

    pub fn is_periodic(&self) -> bool {
        self.periodic
    }

    pub fn dx(&self) -> f64 {
        self.params.dx
    }

    /// Extent of the addressable coordinate range.
    pub fn extent(&self) -> f64 {
        if self.periodic {
            self.samples.len() as f64 * self.params.dx
        } else {
            (self.samples.len() - 1) as f64 * self.params.dx
        }
    }

    /// Gaussian-weighted g around `x_c` (m), linearly interpolated between
    /// node averages.
    pub fn dot_average(&self, x_c: f64) -> Result<f64> {
        let n = self.smoothed.len();
        if n == 1 {
            return Ok(self.smoothed[0]);
        }
        let dx = self.params.dx;
        let ext = self.extent();
        let x = if self.periodic {
            if !x_c.is_finite() {
                return Err(Error::Range(format!("position {x_c} not finite")));
            }
            x_c.rem_euclid(ext)
        } else {
            let slack = 1e-9 * dx;
            if !(x_c >= -slack && x_c <= ext + slack) {
                return Err(Error::Range(format!(
                    "position {x_c:e} m outside landscape [0, {ext:e}] m"
                )));
            }
            x_c.clamp(0.0, ext)
        };
        let u = x / dx;
        let k = (u.floor() as usize).min(if self.periodic { n - 1 } else { n - 2 });
        let f = u - k as f64;
        let k1 = if k + 1 == n { 0 } else { k + 1 };
        Ok(self.smoothed[k] * (1.0 - f) + self.smoothed[k1] * f)
    }

    /// Writes `x_meters,g_int` rows.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut wr = csv::Writer::from_writer(w);
        wr.write_record(["x_meters", "g_int"]).map_err(csv_err)?;
        for (k, g) in self.samples.iter().enumerate() {
            wr.write_record([(k as f64 * self.params.dx).to_string(), g.to_string()])
                .map_err(csv_err)?;
        }
        wr.flush()?;
        Ok(())
    }

    /// Reads a uniform-grid profile written by [`Self::write_csv`].
    pub fn read_csv<R: Read>(r: R, g0: f64, periodic: bool) -> Result<Self> {
        let mut rd = csv::Reader::from_reader(r);
        let mut xs = Vec::new();
        let mut gs = Vec::new();
        for rec in rd.records() {
            let rec = rec.map_err(csv_err)?;
            let parse = |i: usize| -> Result<f64> {
                rec.get(i)
                    .ok_or_else(|| Error::arg("short landscape row"))?
                    .trim()
                    .parse::<f64>()
                    .map_err(|e| Error::arg(format!("bad landscape value: {e}")))
            };
            xs.push(parse(0)?);
            gs.push(parse(1)?);
        }
        if xs.len() < 2 {
            return Err(Error::arg("landscape file needs at least two rows"));
        }
        let dx = xs[1] - xs[0];
        for w in xs.windows(2) {
            if ((w[1] - w[0]) - dx).abs() > 1e-6 * dx {
                return Err(Error::arg("landscape grid is not uniform"));
            }
        }
        Self::from_profile(g0, dx, gs, periodic)
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

/// Node-wise truncated, renormalised Gaussian average.
fn smooth(samples: &[f64], dx: f64, sigma: f64, periodic: bool) -> Vec<f64> {
    let n = samples.len();
    if sigma == 0.0 || n == 1 {
        return samples.to_vec();
    }
    let half = ((WINDOW_SIGMAS * sigma / dx) + 1e-9).floor() as isize;
    let weights: Vec<f64> = (-half..=half)
        .map(|j| {
            let x = j as f64 * dx;
            (-(x * x) / (2.0 * sigma * sigma)).exp()
        })
        .collect();
    let ni = n as isize;
    (0..ni)
        .map(|k| {
            let mut num = 0.0;
            let mut den = 0.0;
            for (w, j) in weights.iter().zip(-half..=half) {
                let idx = k + j;
                let idx = if periodic {
                    if (0..ni).contains(&idx) {
                        idx
                    } else if idx < 0 && idx + ni >= 0 {
                        idx + ni
                    } else if idx >= ni && idx - ni < ni {
                        idx - ni
                    } else {
                        idx.rem_euclid(ni)
                    }
                } else if idx < 0 || idx >= ni {
                    continue;
                } else {
                    idx
                };
                num += w * samples[idx as usize];
                den += w;
            }
            num / den
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn noiseless_landscape_is_flat() {
        let p = OUParams::new(0.0, 500.0 * NM, 3);
        let l = sample_ou(&p).unwrap();
        assert_eq!(l.samples().len(), 501);
        assert!(l.samples().iter().all(|&g| g == 2.0));
        assert_eq!(l.dot_average(123.4 * NM).unwrap(), 2.0);
    }

    #[test]
    fn rejects_coarse_grid() {
        let mut p = OUParams::new(1e-3, 1e-6, 0);
        p.dx = 3.0 * NM;
        assert!(sample_ou(&p).is_err());
        p.dx = 1.0 * NM;
        p.length = 0.0;
        assert!(sample_ou(&p).is_err());
    }

    #[test]
    fn linear_profile_averages_to_centre() {
        let dx = NM;
        let a = 1e6;
        let prof: Vec<f64> = (0..400).map(|k| a * k as f64 * dx).collect();
        let l = GFactorLandscape::from_profile(0.0, dx, prof, false).unwrap();
        for x_c in [100.0 * NM, 200.37 * NM, 299.9 * NM] {
            let g = l.dot_average(x_c).unwrap();
            assert!((g - a * x_c).abs() <= 1e-9 * a * x_c, "{g} vs {}", a * x_c);
        }
    }

    #[test]
    fn out_of_grid_is_range_error() {
        let l = sample_ou(&OUParams::new(1e-3, 100.0 * NM, 1)).unwrap();
        assert!(matches!(l.dot_average(-NM), Err(Error::Range(_))));
        assert!(matches!(l.dot_average(101.0 * NM), Err(Error::Range(_))));
    }

    #[test]
    fn periodic_wraps_at_seam() {
        let p = OUParams::new(1e-3, 200.0 * NM, 9);
        let l = sample_ou_periodic(&p).unwrap();
        assert_eq!(l.samples().len(), 200);
        let a = l.dot_average(10.0 * NM).unwrap();
        let b = l.dot_average(210.0 * NM).unwrap();
        assert!((a - b).abs() < 1e-15);
    }

    #[test]
    fn csv_round_trip() {
        let l = sample_ou(&OUParams::new(1e-3, 50.0 * NM, 4)).unwrap();
        let mut buf = Vec::new();
        l.write_csv(&mut buf).unwrap();
        let back = GFactorLandscape::read_csv(&buf[..], 2.0, false).unwrap();
        assert_eq!(back.samples(), l.samples());
    }
}
