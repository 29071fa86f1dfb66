// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! Versioned CSV and JSON persistence of sweep results.

use std::io::Write;

use super::sweep::SweepResult;
use crate::error::{Error, Result};

pub const CSV_SCHEMA: &str = "# spinhom-sweep-csv v1";
pub const JSON_SCHEMA: &str = "spinhom-sweep-json v1";

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

/// One row per grid point: `axes..., n, mean, std, p50, p95, failures`,
/// after a schema comment line. Flagged points leave the statistics empty.
pub fn write_csv<W: Write>(r: &SweepResult, mut w: W) -> Result<()> {
    writeln!(w, "{CSV_SCHEMA}")?;
    let mut out = csv::Writer::from_writer(w);
    let mut header: Vec<String> = r.axis_names().iter().map(|s| s.to_string()).collect();
    header.extend(["n", "mean", "std", "p50", "p95", "failures"].map(String::from));
    out.write_record(&header).map_err(csv_err)?;
    for p in &r.points {
        let mut row: Vec<String> = p.values.iter().map(|v| v.to_string()).collect();
        row.push(p.n().to_string());
        match p.summary {
            Some(s) => row.extend([s.mean, s.std, s.p50, s.p95].map(|x| x.to_string())),
            None => row.extend(std::iter::repeat_n(String::new(), 4)),
        }
        row.push(p.failures.to_string());
        out.write_record(&row).map_err(csv_err)?;
    }
    out.flush()?;
    Ok(())
}

pub fn to_json(r: &SweepResult) -> serde_json::Value {
    serde_json::json!({
        "schema": JSON_SCHEMA,
        "result": r,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::montecarlo::{run_sweep, Axis, Registry, SweepSpec};

    #[test]
    fn csv_echoes_inputs() {
        let spec = SweepSpec::new(
            "exchange",
            vec![Axis::new("omega12_over_omega", vec![0.1, 1.0 / 3.0])],
            1,
            0,
        );
        let r = run_sweep(&spec, &Registry::default(), Some(1)).unwrap();
        let mut buf = Vec::new();
        write_csv(&r, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some(CSV_SCHEMA));
        assert_eq!(
            lines.next(),
            Some("omega12_over_omega,n,mean,std,p50,p95,failures")
        );
        let first: f64 = lines
            .nth(1)
            .unwrap()
            .split(',')
            .next()
            .unwrap()
            .parse()
            .unwrap();
        assert_eq!(first, 1.0 / 3.0);
    }
}
