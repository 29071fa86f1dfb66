// Copyright 2026 The spinhom Authors
// SPDX-License-Identifier: Apache-2.0

//! JSON run configs. Dimensional keys carry their unit as a suffix
//! (`_MHz`, `_tesla`, `_um`, `_nm`, `_mT`, `_mps`); values stay in those
//! units until a simulator converts them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Command {
    DemoExchange,
    SweepExchange,
    SweepTunnel,
    SweepShuttle,
    SweepCrot,
    Arch2xn,
    ArchLoop,
    EstimateParams,
    Schmidt,
    Gtensor,
}

impl Command {
    pub const ALL: [Command; 10] = [
        Command::DemoExchange,
        Command::SweepExchange,
        Command::SweepTunnel,
        Command::SweepShuttle,
        Command::SweepCrot,
        Command::Arch2xn,
        Command::ArchLoop,
        Command::EstimateParams,
        Command::Schmidt,
        Command::Gtensor,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::DemoExchange => "demo-exchange",
            Command::SweepExchange => "sweep-exchange",
            Command::SweepTunnel => "sweep-tunnel",
            Command::SweepShuttle => "sweep-shuttle",
            Command::SweepCrot => "sweep-crot",
            Command::Arch2xn => "arch-2xn",
            Command::ArchLoop => "arch-loop",
            Command::EstimateParams => "estimate-params",
            Command::Schmidt => "schmidt",
            Command::Gtensor => "gtensor",
        }
    }

    /// Commands whose simulators draw random landscapes.
    pub fn is_stochastic(self) -> bool {
        matches!(
            self,
            Command::SweepShuttle | Command::SweepCrot | Command::Arch2xn | Command::ArchLoop
        )
    }

    pub fn keys(self) -> &'static [KeySpec] {
        match self {
            Command::DemoExchange => DEMO_KEYS,
            Command::SweepExchange => EXCHANGE_KEYS,
            Command::SweepTunnel => TUNNEL_KEYS,
            Command::SweepShuttle => SHUTTLE_KEYS,
            Command::SweepCrot => CROT_KEYS,
            Command::Arch2xn => ARCH_2XN_KEYS,
            Command::ArchLoop => ARCH_LOOP_KEYS,
            Command::EstimateParams => ESTIMATE_KEYS,
            Command::Schmidt => SCHMIDT_KEYS,
            Command::Gtensor => GTENSOR_KEYS,
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::config("command", format!("unknown command `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Range {
    Positive,
    NonNegative,
    /// Open unit interval.
    Unit,
    /// Integer >= 1.
    Count,
    /// Integer >= 0.
    NonNegativeCount,
    Any,
}

impl Range {
    fn check(self, v: f64) -> std::result::Result<(), &'static str> {
        let ok = v.is_finite()
            && match self {
                Range::Positive => v > 0.0,
                Range::NonNegative => v >= 0.0,
                Range::Unit => v > 0.0 && v < 1.0,
                Range::Count => v >= 1.0 && v.fract() == 0.0,
                Range::NonNegativeCount => v >= 0.0 && v.fract() == 0.0,
                Range::Any => true,
            };
        if ok {
            return Ok(());
        }
        Err(match self {
            Range::Positive => "must be positive",
            Range::NonNegative => "must be non-negative",
            Range::Unit => "must lie strictly between 0 and 1",
            Range::Count => "must be an integer >= 1",
            Range::NonNegativeCount => "must be an integer >= 0",
            Range::Any => "must be finite",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Kind {
    /// Number, or a list of numbers to sweep.
    Number {
        default: f64,
        range: Range,
        sweepable: bool,
    },
    /// One of a fixed set of words.
    Choice {
        default: &'static str,
        options: &'static [&'static str],
    },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KeySpec {
    pub name: &'static str,
    pub kind: Kind,
}

const fn num(name: &'static str, default: f64, range: Range) -> KeySpec {
    KeySpec {
        name,
        kind: Kind::Number {
            default,
            range,
            sweepable: true,
        },
    }
}

const fn scalar(name: &'static str, default: f64, range: Range) -> KeySpec {
    KeySpec {
        name,
        kind: Kind::Number {
            default,
            range,
            sweepable: false,
        },
    }
}

const fn choice(
    name: &'static str,
    default: &'static str,
    options: &'static [&'static str],
) -> KeySpec {
    KeySpec {
        name,
        kind: Kind::Choice { default, options },
    }
}

use Range::*;

const DEMO_KEYS: &[KeySpec] = &[
    scalar("omega_MHz", 5.0, Positive),
    scalar("J_over_omega", 20.0, Positive),
    scalar("omega12_over_omega", 1.0, Any),
    scalar("n_steps", 10_000.0, Count),
];
const EXCHANGE_KEYS: &[KeySpec] = &[
    num("J_over_omega", 100.0, Positive),
    num("omega12_over_omega", 1.0, Any),
    num("omega_MHz", 5.0, Positive),
];
const TUNNEL_KEYS: &[KeySpec] = &[
    num("tc_over_omega", 100.0, Positive),
    num("omega12_over_omega", 1.0, Any),
    num("omega_MHz", 5.0, Positive),
];
const SHUTTLE_KEYS: &[KeySpec] = &[
    num("d_um", 1.0, Positive),
    num("v_mps", 10.0, Positive),
    num("omega_MHz", 5.0, Positive),
    num("delta_g_rel", 1e-3, NonNegative),
    num("B0_tesla", 0.1, Positive),
    choice("mode", "both", &["I", "II", "both"]),
];
const CROT_KEYS: &[KeySpec] = &[
    num("d_um", 1.0, Positive),
    num("v_mps", 50.0, Positive),
    num("omega_MHz", 5.0, Positive),
    num("delta_g_rel", 1e-3, NonNegative),
    num("B0_tesla", 0.1, Positive),
    num("G_B0_MHz", 1000.0, Positive),
    num("J0_MHz", 50.0, NonNegative),
];
const ARCH_2XN_KEYS: &[KeySpec] = &[
    num("n_t", 8.0, Count),
    num("d_um", 3.0, Positive),
    num("v_mps", 10.0, Positive),
    num("omega_MHz", 5.0, Positive),
    num("delta_g_rel", 1e-3, NonNegative),
    num("B0_tesla", 0.1, Positive),
    num("G_B0_MHz", 300.0, Positive),
    num("binning_delta_g_rel", 1e-2, Positive),
    num("binning_B0_tesla", 1.0, Positive),
    choice("plan", "shuttle", &["shuttle", "binning", "both"]),
];
const ARCH_LOOP_KEYS: &[KeySpec] = &[
    num("loops", 9.0, Count),
    num("qubits_per_loop", 2.0, Count),
    num("d_um", 20.0, Positive),
    num("v_mps", 50.0, Positive),
    num("omega_MHz", 5.0, Positive),
    num("delta_g_rel", 1e-3, NonNegative),
    num("B0_tesla", 0.1, Positive),
];
const ESTIMATE_KEYS: &[KeySpec] = &[
    scalar("delta_g_rel", 1e-3, Positive),
    scalar("B0_tesla", 0.1, Positive),
    scalar("omega_MHz", 5.0, Positive),
    scalar("lambda_nm", 20.0, Positive),
    scalar("target_infidelity", 2e-3, Unit),
    scalar("quantile_factor", 2.0, Positive),
];
const SCHMIDT_KEYS: &[KeySpec] = &[choice("gate", "cnot", &["cnot", "swap", "xx", "identity"])];
const GTENSOR_KEYS: &[KeySpec] = &[
    scalar("g0", 1.994, Any),
    scalar("alpha", -1e-3, Any),
    scalar("beta", 1e-2, Any),
    scalar("g13", 1e-3, Any),
    scalar("g23", 1e-3, Any),
    scalar("g33", 2.002, Any),
    scalar("B1_mT", 1.0, Positive),
];

#[derive(Clone, Debug, PartialEq)]
pub enum ParamValue {
    Number(f64),
    List(Vec<f64>),
    Text(String),
}

impl ParamValue {
    fn to_json(&self) -> Value {
        match self {
            ParamValue::Number(x) => json!(x),
            ParamValue::List(v) => json!(v),
            ParamValue::Text(s) => json!(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    /// Every key of the command, defaults filled in, in config units.
    pub params: BTreeMap<String, ParamValue>,
    pub trials: usize,
    pub seed: u64,
    pub workers: Option<usize>,
    pub out: Option<String>,
}

/// Suffix-to-SI factors; frequencies become rad/s.
const UNITS: &[(&str, f64)] = &[
    ("_MHz", 2.0 * std::f64::consts::PI * 1e6),
    ("_tesla", 1.0),
    ("_mT", 1e-3),
    ("_um", 1e-6),
    ("_nm", 1e-9),
    ("_mps", 1.0),
];

/// SI factor for a key's unit suffix (1 for dimensionless keys).
pub fn unit_factor(key: &str) -> f64 {
    UNITS
        .iter()
        .find(|(s, _)| key.ends_with(s))
        .map_or(1.0, |(_, f)| *f)
}

fn unknown_key(command: Command, key: &str) -> Error {
    let stem = format!("{key}_");
    if let Some(k) = command.keys().iter().find(|k| k.name.starts_with(&stem)) {
        return Error::config(
            key,
            format!("missing unit suffix on `{key}`; expected `{}`", k.name),
        );
    }
    Error::config(key, format!("unknown key `{key}` for `{command}`"))
}

fn as_number(key: &str, v: &Value) -> Result<f64> {
    v.as_f64()
        .ok_or_else(|| Error::config(key, "expected a number"))
}

fn as_count(key: &str, v: &Value) -> Result<u64> {
    v.as_u64()
        .ok_or_else(|| Error::config(key, "expected a non-negative integer"))
}

impl RunConfig {
    /// Defaults for `command`.
    pub fn defaults(command: Command) -> Self {
        let params = command
            .keys()
            .iter()
            .map(|k| {
                let v = match k.kind {
                    Kind::Number { default, .. } => ParamValue::Number(default),
                    Kind::Choice { default, .. } => ParamValue::Text(default.to_string()),
                };
                (k.name.to_string(), v)
            })
            .collect();
        RunConfig {
            command,
            params,
            trials: if command.is_stochastic() { 200 } else { 1 },
            seed: 0,
            workers: None,
            out: None,
        }
    }

    /// Parses a JSON document. `command` may be omitted when `expected` is
    /// given; if both are present they must agree.
    pub fn parse(text: &str, expected: Option<Command>) -> Result<Self> {
        let doc: Value = serde_json::from_str(text)
            .map_err(|e| Error::config("$", format!("invalid JSON: {e}")))?;
        let obj = doc
            .as_object()
            .ok_or_else(|| Error::config("$", "config must be a JSON object"))?;
        Self::from_map(obj, expected)
    }

    fn from_map(obj: &Map<String, Value>, expected: Option<Command>) -> Result<Self> {
        let command = match (obj.get("command"), expected) {
            (Some(v), exp) => {
                let c: Command = v
                    .as_str()
                    .ok_or_else(|| Error::config("command", "expected a string"))?
                    .parse()?;
                if let Some(e) = exp.filter(|e| *e != c) {
                    return Err(Error::config(
                        "command",
                        format!("config is for `{c}` but `{e}` was requested"),
                    ));
                }
                c
            }
            (None, Some(e)) => e,
            (None, None) => return Err(Error::config("command", "missing command")),
        };
        let mut cfg = Self::defaults(command);
        for (key, v) in obj {
            match key.as_str() {
                "command" => {}
                "trials" => {
                    cfg.trials = as_count(key, v)? as usize;
                    if cfg.trials == 0 {
                        return Err(Error::config(key, "must be at least 1"));
                    }
                }
                "seed" => cfg.seed = as_count(key, v)?,
                "workers" => {
                    let w = as_count(key, v)? as usize;
                    if w == 0 {
                        return Err(Error::config(key, "must be at least 1"));
                    }
                    cfg.workers = Some(w);
                }
                "out" => {
                    cfg.out = Some(
                        v.as_str()
                            .ok_or_else(|| Error::config(key, "expected a string"))?
                            .into(),
                    )
                }
                _ => {
                    let spec = command
                        .keys()
                        .iter()
                        .find(|k| k.name == key)
                        .ok_or_else(|| unknown_key(command, key))?;
                    cfg.params.insert(key.clone(), parse_value(spec, v)?);
                }
            }
        }
        Ok(cfg)
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("command".into(), json!(self.command.name()));
        for (k, v) in &self.params {
            m.insert(k.clone(), v.to_json());
        }
        m.insert("trials".into(), json!(self.trials));
        m.insert("seed".into(), json!(self.seed));
        if let Some(w) = self.workers {
            m.insert("workers".into(), json!(w));
        }
        if let Some(o) = &self.out {
            m.insert("out".into(), json!(o));
        }
        Value::Object(m)
    }

    /// Scalar value in config units.
    pub fn number(&self, key: &str) -> Result<f64> {
        match self.params.get(key) {
            Some(ParamValue::Number(x)) => Ok(*x),
            Some(ParamValue::List(_)) => Err(Error::config(key, "expected a single value here")),
            _ => Err(Error::config(key, "not a numeric key")),
        }
    }

    /// Scalar value converted to SI (frequencies in rad/s).
    pub fn si(&self, key: &str) -> Result<f64> {
        Ok(self.number(key)? * unit_factor(key))
    }

    pub fn text(&self, key: &str) -> Result<&str> {
        match self.params.get(key) {
            Some(ParamValue::Text(s)) => Ok(s),
            _ => Err(Error::config(key, "not a text key")),
        }
    }

    /// Values of a numeric key as a list (one element for scalars).
    pub fn values(&self, key: &str) -> Result<Vec<f64>> {
        match self.params.get(key) {
            Some(ParamValue::Number(x)) => Ok(vec![*x]),
            Some(ParamValue::List(v)) => Ok(v.clone()),
            _ => Err(Error::config(key, "not a numeric key")),
        }
    }
}

fn parse_value(spec: &KeySpec, v: &Value) -> Result<ParamValue> {
    let key = spec.name;
    match spec.kind {
        Kind::Choice { options, .. } => {
            let s = v
                .as_str()
                .ok_or_else(|| Error::config(key, "expected a string"))?;
            if !options.contains(&s) {
                return Err(Error::config(
                    key,
                    format!("`{s}` is not one of {options:?}"),
                ));
            }
            Ok(ParamValue::Text(s.into()))
        }
        Kind::Number {
            range, sweepable, ..
        } => {
            let check = |x: f64, path: String| range.check(x).map_err(|m| Error::config(path, m));
            match v {
                Value::Array(items) => {
                    if !sweepable {
                        return Err(Error::config(key, "cannot be swept"));
                    }
                    if items.is_empty() {
                        return Err(Error::config(key, "sweep list is empty"));
                    }
                    let mut out = Vec::with_capacity(items.len());
                    for (i, item) in items.iter().enumerate() {
                        let path = format!("{key}[{i}]");
                        let x = as_number(&path, item)?;
                        check(x, path)?;
                        out.push(x);
                    }
                    Ok(ParamValue::List(out))
                }
                _ => {
                    let x = as_number(key, v)?;
                    check(x, key.into())?;
                    Ok(ParamValue::Number(x))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = r#"{"command":"arch-2xn","B0_tesla":0.1,"delta_g_rel":1e-3,"G_B0_MHz":300,
        "v_mps":10,"d_um":3,"omega_MHz":5,"n_t":[2,4,8,16],"trials":500,"seed":7}"#;

    #[test]
    fn parses_documented_example() {
        let c = RunConfig::parse(EXAMPLE, None).unwrap();
        assert_eq!(c.command, Command::Arch2xn);
        assert_eq!(c.values("n_t").unwrap(), vec![2.0, 4.0, 8.0, 16.0]);
        assert_eq!(c.trials, 500);
        assert!((c.si("omega_MHz").unwrap() - crate::units::mhz(5.0)).abs() < 1e-6);
        assert!((c.si("d_um").unwrap() - 3e-6).abs() < 1e-18);
    }

    #[test]
    fn round_trips() {
        let c = RunConfig::parse(EXAMPLE, None).unwrap();
        let again = RunConfig::parse(&c.to_json().to_string(), None).unwrap();
        assert_eq!(c, again);
    }

    #[test]
    fn missing_unit_names_the_key() {
        let e = RunConfig::parse(r#"{"command":"arch-2xn","B0":0.1}"#, None).unwrap_err();
        match e {
            Error::Config { path, message } => {
                assert_eq!(path, "B0");
                assert!(message.contains("B0_tesla"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_unknown_and_out_of_range() {
        assert!(RunConfig::parse(r#"{"command":"gtensor","colour":1}"#, None).is_err());
        let e = RunConfig::parse(r#"{"command":"arch-2xn","n_t":[2,0]}"#, None).unwrap_err();
        assert!(
            matches!(e, Error::Config { ref path, .. } if path == "n_t[1]"),
            "{e:?}"
        );
        assert!(RunConfig::parse(r#"{"command":"schmidt","gate":"toffoli"}"#, None).is_err());
        assert!(RunConfig::parse(r#"{"command":"schmidt"}"#, Some(Command::Gtensor)).is_err());
    }

    #[test]
    fn command_may_come_from_the_caller() {
        let c = RunConfig::parse("{}", Some(Command::Gtensor)).unwrap();
        assert_eq!(c.number("B1_mT").unwrap(), 1.0);
    }
}
