// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! Command-line front end.

pub mod config;
pub mod run;

use std::path::PathBuf;

use clap::Parser;
use serde_json::json;

pub use config::{Command, ParamValue, RunConfig};
pub use run::{run, Manifest};

use crate::error::Error;

pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_RUNTIME: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "spinhom",
    version,
    about = "Frequency homogenisation simulations for globally driven spin qubits"
)]
pub struct Args {
    /// One of: demo-exchange, sweep-exchange, sweep-tunnel, sweep-shuttle,
    /// sweep-crot, arch-2xn, arch-loop, estimate-params, schmidt, gtensor.
    #[arg(value_parser = |s: &str| s.parse::<Command>().map_err(|e| e.to_string()))]
    pub command: Command,
    /// JSON config with unit-suffixed keys.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, env = "SPINHOM_WORKERS")]
    pub workers: Option<usize>,
}

fn load(args: &Args) -> Result<RunConfig, Error> {
    let text = match &args.config {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| Error::config("--config", format!("cannot read {}: {e}", p.display())))?,
        None => "{}".into(),
    };
    let mut cfg = RunConfig::parse(&text, Some(args.command))?;
    if let Some(t) = args.trials {
        if t == 0 {
            return Err(Error::config("--trials", "must be at least 1"));
        }
        cfg.trials = t;
    }
    if let Some(s) = args.seed {
        cfg.seed = s;
    }
    if let Some(w) = args.workers {
        if w == 0 {
            return Err(Error::config("--workers", "must be at least 1"));
        }
        cfg.workers = Some(w);
    }
    Ok(cfg)
}

fn report(e: &Error) -> i32 {
    let (code, kind) = match e {
        Error::Config { .. } => (EXIT_CONFIG, "config"),
        _ => (EXIT_RUNTIME, "runtime"),
    };
    let mut rec = json!({"error": {"kind": kind, "message": e.to_string()}});
    if let Error::Config { path, .. } = e {
        rec["error"]["path"] = json!(path);
    }
    eprintln!("{rec}");
    code
}

/// Runs the tool and returns its exit status.
pub fn main_with(args: Args) -> i32 {
    let cfg = match load(&args) {
        Ok(c) => c,
        Err(e) => return report(&e),
    };
    let out = args
        .out
        .clone()
        .or_else(|| cfg.out.as_ref().map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("spinhom-out"));
    match run(&cfg, &out) {
        Ok(m) => {
            log::info!(
                "{} finished in {:.2} s, outputs in {}",
                cfg.command,
                m.duration_s,
                out.display()
            );
            0
        }
        Err(e) => report(&e),
    }
}
