// SPDX-License-Identifier: MIT OR Apache-2.0

//! JSON instance and path files.
//!
//! Instance: `{"y": [...], "alpha": [...]}` with entries as JSON numbers or
//! strings (`"p/q"` or decimal). Path: `{"events": [...], "segments": [...]}`
//! where `segments[k][i] = [intercept, slope]` of dual point `i + 1` on
//! interval `k`.

use std::fs;
use std::io::Write;
use std::path::Path;

use fusedpath::{DualInstance, EventKind, Instance, Linear, PathEvent, Scalar, Sign, SolutionPath};
use serde_json::{json, Map, Number, Value};

use crate::CliError;

pub fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Whether any instance entry is written as a string.
pub fn has_text_entries(doc: &Value) -> bool {
    ["y", "alpha"].iter().any(|key| {
        doc.get(key)
            .and_then(Value::as_array)
            .is_some_and(|v| v.iter().any(Value::is_string))
    })
}

pub fn scalar_from_json<S: Scalar>(v: &Value) -> Result<S, CliError> {
    let parsed = match v {
        // Numbers are read from their decimal text, so `0.1` is exactly 1/10
        // on the rational backend.
        Value::Number(n) => S::parse_text(&n.to_string()),
        Value::String(s) => S::parse_text(s.trim()),
        other => return Err(CliError::Input(format!("expected a number, got {other}"))),
    };
    parsed.map_err(|e| CliError::Input(e.to_string()))
}

pub fn scalar_to_json<S: Scalar>(v: &S) -> Value {
    if S::EXACT {
        return Value::String(v.to_text());
    }
    let f = v.to_f64();
    if f.fract() == 0.0 && f.abs() < 9.0e15 {
        Value::Number(Number::from(f as i64))
    } else {
        Number::from_f64(f).map_or(Value::Null, Value::Number)
    }
}

fn vector_from_json<S: Scalar>(doc: &Value, key: &str) -> Result<Vec<S>, CliError> {
    doc.get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Input(format!("missing array \"{key}\"")))?
        .iter()
        .map(scalar_from_json)
        .collect()
}

pub fn vector_to_json<S: Scalar>(values: &[S]) -> Value {
    Value::Array(values.iter().map(scalar_to_json).collect())
}

pub fn instance_from_json<S: Scalar>(doc: &Value) -> Result<Instance<S>, CliError> {
    let y = vector_from_json(doc, "y")?;
    let alpha = vector_from_json(doc, "alpha")?;
    Ok(Instance::new(y, alpha)?)
}

pub fn instance_to_json<S: Scalar>(inst: &Instance<S>) -> Value {
    let mut map = Map::new();
    map.insert("y".into(), vector_to_json(inst.y()));
    map.insert("alpha".into(), vector_to_json(inst.alpha()));
    Value::Object(map)
}

pub fn path_to_json<S: Scalar>(path: &SolutionPath<S>) -> Value {
    let events: Vec<Value> = path
        .events()
        .iter()
        .map(|e| {
            json!({
                "gamma": scalar_to_json(&e.gamma),
                "index": e.index,
                "kind": e.kind.label(),
                "sign": e.sign.as_i8(),
            })
        })
        .collect();
    let segments: Vec<Value> = (0..path.interval_count())
        .map(|k| {
            Value::Array(
                path.table(k)
                    .iter()
                    .map(|c| json!([scalar_to_json(&c.intercept), scalar_to_json(&c.slope)]))
                    .collect(),
            )
        })
        .collect();
    json!({ "events": events, "segments": segments })
}

pub fn path_from_json<S: Scalar>(dual: DualInstance<S>, doc: &Value) -> Result<SolutionPath<S>, CliError> {
    let bad = |what: &str| CliError::Input(format!("path file: {what}"));
    let events = doc
        .get("events")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"events\""))?
        .iter()
        .map(|e| {
            let gamma = scalar_from_json(e.get("gamma").ok_or_else(|| bad("event without gamma"))?)?;
            let index = e.get("index").and_then(Value::as_u64).ok_or_else(|| bad("event without index"))? as usize;
            let kind = e
                .get("kind")
                .and_then(Value::as_str)
                .and_then(EventKind::from_label)
                .ok_or_else(|| bad("event kind must be fuse or unfuse"))?;
            let sign = e
                .get("sign")
                .and_then(Value::as_i64)
                .and_then(|s| Sign::from_i8(s as i8))
                .ok_or_else(|| bad("event sign must be 1 or -1"))?;
            Ok(PathEvent { gamma, index, kind, sign })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let tables = doc
        .get("segments")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"segments\""))?
        .iter()
        .map(|table| {
            table
                .as_array()
                .ok_or_else(|| bad("segment table must be an array"))?
                .iter()
                .map(|pair| match pair.as_array().map(Vec::as_slice) {
                    Some([a, b]) => Ok(Linear::new(scalar_from_json(a)?, scalar_from_json(b)?)),
                    _ => Err(bad("coefficients must be [intercept, slope] pairs")),
                })
                .collect::<Result<Vec<_>, CliError>>()
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(SolutionPath::from_tables(dual, events, tables)?)
}

/// Writes `text` to `output`, or to standard output when absent.
pub fn emit(output: Option<&Path>, text: &str) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::Failure(format!("cannot write output: {e}")))
        }
    }
}

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}
