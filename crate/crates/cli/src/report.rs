//! Deterministic JSON output. `serde_json` maps are ordered by key, so the
//! text only depends on the values; large integers become decimal strings
//! flagged by a `<key>_bigint` sibling.

use num_bigint::BigInt;
use serde_json::{Map, Number, Value};

const SAFE: i64 = 1 << 53;

fn small(v: &BigInt) -> Option<i64> {
    i64::try_from(v).ok().filter(|x| x.abs() < SAFE)
}

/// `(value, is_big)`.
fn int_value(v: &BigInt) -> (Value, bool) {
    match small(v) {
        Some(x) => (Value::from(x), false),
        None => (Value::String(v.to_string()), true),
    }
}

pub fn put_int(map: &mut Map<String, Value>, key: &str, v: impl Into<BigInt>) {
    let (value, big) = int_value(&v.into());
    map.insert(key.to_owned(), value);
    if big {
        map.insert(format!("{key}_bigint"), Value::Bool(true));
    }
}

pub fn put_int_list<I, T>(map: &mut Map<String, Value>, key: &str, items: I)
where
    I: IntoIterator<Item = T>,
    T: Into<BigInt>,
{
    let mut any_big = false;
    let list = items
        .into_iter()
        .map(|x| {
            let (value, big) = int_value(&x.into());
            any_big |= big;
            value
        })
        .collect();
    map.insert(key.to_owned(), Value::Array(list));
    if any_big {
        map.insert(format!("{key}_bigint"), Value::Bool(true));
    }
}

fn number_is_big(n: &Number) -> bool {
    match (n.as_i64(), n.as_u64()) {
        (Some(x), _) => x.abs() >= SAFE,
        (None, Some(_)) => true,
        // Floats never come from this program but may appear in an echoed
        // job file; they are left alone.
        (None, None) => false,
    }
}

fn stringify(v: &mut Value) -> bool {
    match v {
        Value::Number(n) if number_is_big(n) => {
            *v = Value::String(n.to_string());
            true
        }
        Value::Array(items) => items.iter_mut().fold(false, |acc, x| stringify(x) | acc),
        _ => false,
    }
}

/// Applies the large-integer rule to every number reachable from `v`.
pub fn canonicalize(v: &mut Value) {
    match v {
        Value::Object(map) => {
            let mut flags = Vec::new();
            for (key, value) in map.iter_mut() {
                if value.is_object() {
                    canonicalize(value);
                } else if let Value::Array(items) = value {
                    items.iter_mut().filter(|x| x.is_object()).for_each(canonicalize);
                    if stringify(value) {
                        flags.push(format!("{key}_bigint"));
                    }
                } else if stringify(value) {
                    flags.push(format!("{key}_bigint"));
                }
            }
            for f in flags {
                map.insert(f, Value::Bool(true));
            }
        }
        Value::Array(items) => items.iter_mut().for_each(canonicalize),
        _ => {}
    }
}

/// The report as printed: pretty JSON with a trailing newline.
pub fn render(report: &Value) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("JSON values always serialize");
    text.push('\n');
    text
}

/// Two-column plain-text view of `results`, for standard error.
pub fn table(mode: &str, results: &Value, anomalies: &[String]) -> String {
    fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
        match v {
            Value::Object(map) => {
                for (k, x) in map {
                    let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                    flatten(&key, x, rows);
                }
            }
            Value::Array(items) if items.iter().any(|x| x.is_object()) => {
                for (i, x) in items.iter().enumerate() {
                    flatten(&format!("{prefix}[{i}]"), x, rows);
                }
            }
            other => rows.push((prefix.to_owned(), other.to_string())),
        }
    }
    let mut rows = Vec::new();
    flatten("", results, &mut rows);
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0).max(4);
    let mut out = format!("gsvkit {mode}\n");
    for (k, v) in rows {
        out.push_str(&format!("  {k:<width$}  {v}\n"));
    }
    if anomalies.is_empty() {
        out.push_str("  no anomalies\n");
    } else {
        for a in anomalies {
            out.push_str(&format!("  ANOMALY  {a}\n"));
        }
    }
    out
}
