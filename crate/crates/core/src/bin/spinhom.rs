// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

use clap::Parser;

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    std::process::exit(spinhom::cli::main_with(spinhom::cli::Args::parse()));
}
