// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub n: usize,
    pub mean: f64,
    /// Unbiased; zero for a single sample.
    pub std: f64,
    pub p50: f64,
    pub p95: f64,
}

impl Summary {
    pub fn std_err(&self) -> f64 {
        self.std / (self.n as f64).sqrt()
    }
}

/// Nearest-rank percentile of sorted data: element `ceil(q n / 100)`.
pub fn nearest_rank(sorted: &[f64], q: f64) -> f64 {
    let n = sorted.len();
    let rank = ((q / 100.0) * n as f64).ceil() as usize;
    sorted[rank.clamp(1, n) - 1]
}

pub fn summarize(samples: &[f64]) -> Result<Summary> {
    if samples.is_empty() {
        return Err(Error::arg("cannot summarise an empty sample"));
    }
    let n = samples.len();
    let mean = samples.iter().sum::<f64>() / n as f64;
    let std = if n > 1 {
        (samples.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1) as f64).sqrt()
    } else {
        0.0
    };
    let mut sorted = samples.to_vec();
    sorted.sort_by(f64::total_cmp);
    Ok(Summary {
        n,
        mean,
        std,
        p50: nearest_rank(&sorted, 50.0),
        p95: nearest_rank(&sorted, 95.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_sample() {
        let s = summarize(&[0.5]).unwrap();
        assert_eq!((s.mean, s.std, s.p50, s.p95), (0.5, 0.0, 0.5, 0.5));
    }

    #[test]
    fn nearest_rank_on_one_to_hundred() {
        let v: Vec<f64> = (1..=100).map(f64::from).collect();
        let s = summarize(&v).unwrap();
        assert_eq!(s.p95, 95.0);
        assert_eq!(s.p50, 50.0);
    }

    #[test]
    fn empty_is_an_error() {
        assert!(summarize(&[]).is_err());
    }
}
