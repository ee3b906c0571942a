//! JSON emission helpers: exact rationals stay strings; `--float` adds
//! sibling `*_float` fields with approximate decimals for human reading.

use std::path::Path;

use csp2_core::Rational;
use serde_json::{Map, Value};

/// Tries to read a JSON value as an exact rational scalar or a nested array
/// of them, returning the float mirror.
fn float_mirror(value: &Value) -> Option<Value> {
    match value {
        Value::String(s) => {
            let r: Rational = s.parse().ok()?;
            Some(Value::from(r.to_f64()))
        }
        Value::Array(items) => {
            let mirrored: Option<Vec<Value>> = items.iter().map(float_mirror).collect();
            mirrored.map(Value::Array)
        }
        _ => None,
    }
}

/// Recursively inserts `<key>_float` next to every rational-valued field.
pub fn add_float_fields(value: &mut Value) {
    match value {
        Value::Object(map) => {
            let mut additions: Vec<(String, Value)> = Vec::new();
            for (key, v) in map.iter_mut() {
                if let Some(mirror) = float_mirror(v) {
                    additions.push((format!("{key}_float"), mirror));
                } else {
                    add_float_fields(v);
                }
            }
            for (key, v) in additions {
                map.insert(key, v);
            }
        }
        Value::Array(items) => {
            for item in items {
                add_float_fields(item);
            }
        }
        _ => {}
    }
}

/// Sorted-key object from serializable data, so output is deterministic.
pub fn record<T: serde::Serialize>(data: &T) -> Value {
    serde_json::to_value(data).expect("serializable record")
}

pub fn obj(fields: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    for (k, v) in fields {
        map.insert(k.to_owned(), v);
    }
    Value::Object(map)
}

pub fn write_or_print(text: &str, out: Option<&Path>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, format!("{text}\n")),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}
