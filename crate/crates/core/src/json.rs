//! JSON forms of matrices and parameter lists.
//!
//! A rational matrix is `{"rows": r, "cols": c, "entries": [[i, j, "p/q"], ...]}`.
//! A matrix over `Q[h]/(h^N)` adds `"trunc": N` and writes each entry as an
//! array of coefficient strings (`h^0` first); a bare string is a constant.

use serde_json::{json, Value};

use crate::error::Error;
use crate::linalg::{format_rational, parse_rational, Rational, SparseMat};
use crate::poly::TruncPoly;
use crate::yb::PolyMatrix;

/// Largest row or column count accepted from JSON.
pub const MAX_JSON_DIM: usize = 1 << 16;
/// Largest truncation order accepted from JSON.
pub const MAX_JSON_ORDER: usize = 64;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn scalar(v: &Value) -> Result<Rational, Error> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => n
            .as_i64()
            .map(|i| Rational::from_integer(i.into()))
            .ok_or_else(|| parse_err(format!("number {n} is not an integer; write fractions as \"p/q\""))),
        _ => Err(parse_err(format!("expected a rational, got {v}"))),
    }
}

/// A constant (`"p/q"`) or a coefficient array (`["a0", "a1", ...]`).
pub fn poly_from_value(v: &Value, order: usize) -> Result<TruncPoly, Error> {
    match v {
        Value::Array(items) => {
            if items.len() > order {
                return Err(parse_err(format!("{} coefficients exceed truncation order {order}", items.len())));
            }
            let coeffs = items.iter().map(scalar).collect::<Result<Vec<_>, _>>()?;
            Ok(TruncPoly::from_coeffs(coeffs, order))
        }
        other => Ok(TruncPoly::constant(scalar(other)?, order)),
    }
}

pub fn poly_to_value(p: &TruncPoly) -> Value {
    Value::from(p.to_strings())
}

fn usize_field(obj: &serde_json::Map<String, Value>, key: &str, max: usize) -> Result<usize, Error> {
    obj.get(key)
        .and_then(Value::as_u64)
        .and_then(|v| usize::try_from(v).ok())
        .filter(|&v| v <= max)
        .ok_or_else(|| parse_err(format!("missing or invalid \"{key}\" (at most {max})")))
}

fn entries(obj: &serde_json::Map<String, Value>) -> Result<Vec<(usize, usize, &Value)>, Error> {
    let list = obj.get("entries").and_then(Value::as_array).ok_or_else(|| parse_err("missing \"entries\" array"))?;
    list.iter()
        .map(|e| match e.as_array().map(Vec::as_slice) {
            Some([r, c, v]) => {
                let idx = |x: &Value| x.as_u64().and_then(|u| usize::try_from(u).ok());
                match (idx(r), idx(c)) {
                    (Some(r), Some(c)) => Ok((r, c, v)),
                    _ => Err(parse_err(format!("bad entry indices in {e}"))),
                }
            }
            _ => Err(parse_err(format!("entry {e} is not [row, col, value]"))),
        })
        .collect()
}

/// Parses a matrix over `Q[h]/(h^N)`. `N` comes from `"trunc"` when present,
/// else from `default_order`.
pub fn poly_matrix_from_json(text: &str, default_order: usize) -> Result<PolyMatrix, Error> {
    let v: Value = serde_json::from_str(text).map_err(|e| parse_err(format!("invalid JSON: {e}")))?;
    let obj = v.as_object().ok_or_else(|| parse_err("matrix JSON must be an object"))?;
    let rows = usize_field(obj, "rows", MAX_JSON_DIM)?;
    let cols = usize_field(obj, "cols", MAX_JSON_DIM)?;
    let order = match obj.get("trunc") {
        Some(_) => usize_field(obj, "trunc", MAX_JSON_ORDER)?,
        None => default_order,
    };
    if order == 0 || order > MAX_JSON_ORDER {
        return Err(parse_err(format!("truncation order must be between 1 and {MAX_JSON_ORDER}")));
    }
    let triplets = entries(obj)?
        .into_iter()
        .map(|(r, c, v)| Ok((r, c, poly_from_value(v, order)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    PolyMatrix::from_triplets(rows, cols, order, triplets)
}

pub fn poly_matrix_to_json(m: &PolyMatrix) -> Value {
    let entries: Vec<Value> = m.triplets().into_iter().map(|(r, c, v)| json!([r, c, poly_to_value(v)])).collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "trunc": m.order(), "entries": entries })
}

pub fn rational_matrix_from_json(text: &str) -> Result<SparseMat, Error> {
    let v: Value = serde_json::from_str(text).map_err(|e| parse_err(format!("invalid JSON: {e}")))?;
    let obj = v.as_object().ok_or_else(|| parse_err("matrix JSON must be an object"))?;
    let rows = usize_field(obj, "rows", MAX_JSON_DIM)?;
    let cols = usize_field(obj, "cols", MAX_JSON_DIM)?;
    let triplets = entries(obj)?
        .into_iter()
        .map(|(r, c, v)| Ok((r, c, scalar(v)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    SparseMat::from_triplets(rows, cols, triplets)
}

pub fn rational_matrix_to_json(m: &SparseMat) -> Value {
    let entries: Vec<Value> = m.triplets().map(|(r, c, v)| json!([r, c, format_rational(v)])).collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": entries })
}

/// A JSON array of parameters, each a constant or a coefficient array.
pub fn lambda_from_json(text: &str, order: usize) -> Result<Vec<TruncPoly>, Error> {
    if order == 0 || order > MAX_JSON_ORDER {
        return Err(parse_err(format!("truncation order must be between 1 and {MAX_JSON_ORDER}")));
    }
    let v: Value = serde_json::from_str(text).map_err(|e| parse_err(format!("invalid JSON: {e}")))?;
    let items = v.as_array().ok_or_else(|| parse_err("parameters must be a JSON array"))?;
    items.iter().map(|x| poly_from_value(x, order)).collect()
}
