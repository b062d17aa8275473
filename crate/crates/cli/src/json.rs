//! Exact JSON encoding: integers as JSON numbers (strings past 64 bits),
//! rationals always as `"p/q"` or `"n"` strings.

use higgs_core::exact::format_rational;
use higgs_core::{ChowClass, NSVector, QNSVector, Rational, YClass};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

pub fn int(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(n.to_string()),
    }
}

pub fn rat(x: &Rational) -> Value {
    Value::String(format_rational(x))
}

pub fn vector(v: &NSVector) -> Value {
    Value::Array(v.coords().iter().map(int).collect())
}

pub fn qvector(v: &QNSVector) -> Value {
    Value::Array(v.coords().iter().map(rat).collect())
}

pub fn chow(c: &ChowClass) -> Value {
    json!({ "deg0": rat(&c.deg0), "deg1": qvector(&c.deg1), "deg2": rat(&c.deg2) })
}

pub fn yclass(y: &YClass) -> Value {
    json!({ "alpha": chow(y.alpha()), "beta": chow(y.beta()) })
}

/// One `path<TAB>value` line per leaf.
pub fn table(value: &Value) -> String {
    fn walk(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
        match v {
            Value::Object(map) => {
                for (k, child) in map {
                    let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                    walk(&p, child, out);
                }
            }
            Value::Array(items) if items.iter().any(|i| i.is_object() || i.is_array()) => {
                for (i, child) in items.iter().enumerate() {
                    walk(&format!("{prefix}[{i}]"), child, out);
                }
            }
            Value::Array(items) => {
                let parts: Vec<String> = items.iter().map(scalar).collect();
                out.push((prefix.to_string(), format!("[{}]", parts.join(", "))));
            }
            _ => out.push((prefix.to_string(), scalar(v))),
        }
    }
    fn scalar(v: &Value) -> String {
        match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        }
    }
    let mut rows = Vec::new();
    walk("", value, &mut rows);
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
}
