//! Output encoding: JSON with rounded floats, plain CSV, graph formats.

use std::io::Write;

use serde::Serialize;
use serde_json::{Map, Number, Value};

/// Significant digits for every floating-point value written.
pub const SIG_DIGITS: usize = 12;

pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", SIG_DIGITS - 1, x).parse().unwrap_or(x)
}

/// Float as CSV text: 12 significant digits, shortest form, exponent
/// notation outside `[1e-4, 1e15)`; empty for NaN.
pub fn fmt_f(x: f64) -> String {
    let r = round_sig(x);
    if x.is_nan() {
        String::new()
    } else if r != 0.0 && r.is_finite() && !(1e-4..1e15).contains(&r.abs()) {
        format!("{r:e}")
    } else {
        r.to_string()
    }
}

pub fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_f).unwrap_or_default()
}

fn round_value(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => n
            .as_f64()
            .and_then(|x| Number::from_f64(round_sig(x)))
            .map_or(Value::Null, Value::Number),
        Value::Array(items) => Value::Array(items.into_iter().map(round_value).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, round_value(v))).collect()),
        other => other,
    }
}

/// Writes `value` as one line of JSON. Objects gain `elapsedMs` unless `stable`.
pub fn json<T: Serialize>(out: &mut dyn Write, value: &T, stable: bool, elapsed_ms: u128) -> std::io::Result<()> {
    let mut v = round_value(serde_json::to_value(value).map_err(std::io::Error::other)?);
    if !stable {
        if let Value::Object(map) = &mut v {
            map.insert("elapsedMs".into(), Value::from(elapsed_ms as u64));
        }
    }
    serde_json::to_writer(&mut *out, &v).map_err(std::io::Error::other)?;
    writeln!(out)
}

pub fn object(pairs: Vec<(&str, Value)>) -> Value {
    Value::Object(pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect::<Map<_, _>>())
}

pub struct Csv<'a> {
    out: &'a mut dyn Write,
}

impl<'a> Csv<'a> {
    pub fn new(out: &'a mut dyn Write, header: &str) -> std::io::Result<Self> {
        writeln!(out, "{header}")?;
        Ok(Csv { out })
    }

    pub fn row(&mut self, fields: &[String]) -> std::io::Result<()> {
        writeln!(self.out, "{}", fields.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_digits() {
        assert_eq!(fmt_f(std::f64::consts::PI), "3.14159265359");
        assert_eq!(fmt_f(10f64.sqrt()), "3.16227766017");
        assert_eq!(fmt_f(4.440892098500626e-16), "4.4408920985e-16");
        assert_eq!(fmt_f(-1.0), "-1");
        assert_eq!(fmt_f(0.0), "0");
        assert_eq!(fmt_f(f64::NAN), "");
        assert_eq!(fmt_f(123456.0), "123456");
    }

    #[test]
    fn json_rounds_nested_floats() {
        let mut buf = Vec::new();
        let v = object(vec![("x", Value::from(vec![1.0f64 / 3.0])), ("n", Value::from(3))]);
        json(&mut buf, &v, true, 0).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "{\"n\":3,\"x\":[0.333333333333]}\n");
    }
}
