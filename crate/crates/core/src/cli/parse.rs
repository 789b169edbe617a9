//! Coefficient and request parsing.

use serde_json::Value;

use crate::complex::{c, Complex};
use crate::error::{Error, Result};

use super::{Method, OutputFormat, SolveRequest};

fn number(s: &str, token: &str) -> Result<f64> {
    let x: f64 = s
        .parse()
        .map_err(|_| Error::ParseError(format!("bad coefficient {token:?}")))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::ParseError(format!(
            "non-finite coefficient {token:?}"
        )))
    }
}

/// Parses one coefficient token: `3`, `-2.5e3`, `4i`, `-i`, `2-11i`, `1e-3+2i`.
pub fn parse_complex(token: &str) -> Result<Complex> {
    let t: String = token.chars().filter(|ch| !ch.is_whitespace()).collect();
    if t.is_empty() {
        return Err(Error::ParseError("empty coefficient".into()));
    }
    let Some(body) = t.strip_suffix('i') else {
        return Ok(c(number(&t, token)?, 0.0));
    };
    // split at the last sign that does not start the token or an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (number(&body[..k], token)?, &body[k..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        s => number(s, token)?,
    };
    Ok(c(re, im))
}

/// Parses a comma-separated coefficient list, highest degree first.
pub fn parse_coeff_list(s: &str) -> Result<Vec<Complex>> {
    s.split(',').map(parse_complex).collect()
}

/// Accepts a JSON number, an `"a+bi"` string, `[re, im]` or `{"re", "im"}`.
pub fn coeff_from_json(v: &Value) -> Result<Complex> {
    let bad = || Error::ParseError(format!("bad coefficient {v}"));
    let num = |x: &Value| x.as_f64().ok_or_else(bad);
    match v {
        Value::Number(_) => Ok(c(num(v)?, 0.0)),
        Value::String(s) => parse_complex(s),
        Value::Array(pair) if pair.len() == 2 => Ok(c(num(&pair[0])?, num(&pair[1])?)),
        Value::Object(map) => {
            let re = map.get("re").map(num).transpose()?.unwrap_or(0.0);
            let im = map.get("im").map(num).transpose()?.unwrap_or(0.0);
            if map.keys().any(|k| k != "re" && k != "im") {
                return Err(bad());
            }
            Ok(c(re, im))
        }
        _ => Err(bad()),
    }
}

/// Parses one batch line into a request; missing fields take `defaults`.
pub fn request_from_json(line: &str, defaults: &SolveRequest) -> Result<SolveRequest> {
    let v: Value =
        serde_json::from_str(line).map_err(|e| Error::ParseError(format!("invalid JSON: {e}")))?;
    let obj = v
        .as_object()
        .ok_or_else(|| Error::ParseError("request must be a JSON object".into()))?;
    for key in obj.keys() {
        if !matches!(
            key.as_str(),
            "coeffs" | "method" | "polish" | "zero_tol" | "output"
        ) {
            return Err(Error::ParseError(format!("unknown field {key:?}")));
        }
    }
    let coeffs = match obj.get("coeffs") {
        Some(Value::Array(items)) => items.iter().map(coeff_from_json).collect::<Result<_>>()?,
        Some(Value::String(s)) => parse_coeff_list(s)?,
        Some(_) => return Err(Error::ParseError("coeffs must be an array".into())),
        None => return Err(Error::ParseError("missing field \"coeffs\"".into())),
    };
    let field = |key: &str| obj.get(key).filter(|v| !v.is_null());
    let method = match field("method") {
        Some(v) => serde_json::from_value::<Method>(v.clone())
            .map_err(|_| Error::ParseError(format!("unknown method {v}")))?,
        None => defaults.method,
    };
    let polish = match field("polish") {
        Some(v) => v
            .as_bool()
            .ok_or_else(|| Error::ParseError("polish must be a boolean".into()))?,
        None => defaults.polish,
    };
    let zero_tol = match field("zero_tol") {
        Some(v) => v
            .as_f64()
            .filter(|t| *t >= 0.0)
            .ok_or_else(|| Error::ParseError("zero_tol must be a non-negative number".into()))?,
        None => defaults.zero_tol,
    };
    let output = match field("output") {
        Some(v) => serde_json::from_value::<OutputFormat>(v.clone())
            .map_err(|_| Error::ParseError(format!("unknown output {v}")))?,
        None => defaults.output,
    };
    Ok(SolveRequest {
        coeffs,
        method,
        polish,
        zero_tol,
        output,
    })
}
