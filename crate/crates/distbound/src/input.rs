//! Reading point sets and distance lists from JSON.
//!
//! Every failure is reported with a JSON path into the document, e.g.
//! `$.points[2][0][1]`, so a diagnostic fits on one line.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use distbound_core::bounds::BoundInput;
use distbound_core::geometry::{DistanceSet, GeometryError, PointSet};
use distbound_core::number_field::{NfElement, NumberField};
use distbound_core::poly::IntPoly;
use distbound_core::Rational;
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{Map, Value};

const TOP_LEVEL_KEYS: &[&str] = &["field", "dim", "points", "distances", "cardinality", "description"];

/// A malformed or invalid input document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputError {
    /// JSON path of the offending value, rooted at `$`.
    pub path: String,
    pub message: String,
}

impl InputError {
    fn new(path: &str, message: impl Into<String>) -> Self {
        InputError {
            path: path.to_string(),
            message: message.into(),
        }
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

impl std::error::Error for InputError {}

/// Parses an input document.
pub fn parse_input(text: &str) -> Result<BoundInput, InputError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| InputError::new("$", format!("invalid JSON: {e}")))?;
    parse_document(&doc)
}

/// Validates an already parsed document.
pub fn parse_document(doc: &Value) -> Result<BoundInput, InputError> {
    let obj = doc
        .as_object()
        .ok_or_else(|| InputError::new("$", "expected an object"))?;
    for key in obj.keys() {
        if !TOP_LEVEL_KEYS.contains(&key.as_str()) {
            return Err(InputError::new(&format!("$.{key}"), "unknown key"));
        }
    }
    if let Some(desc) = obj.get("description") {
        if !desc.is_string() {
            return Err(InputError::new("$.description", "expected a string"));
        }
    }
    let field = parse_field(required(obj, "$", "field")?)?;
    let dim = parse_count(required(obj, "$", "dim")?, "$.dim")?;
    if dim == 0 {
        return Err(InputError::new("$.dim", "dimension must be positive"));
    }
    let cardinality = obj
        .get("cardinality")
        .map(|v| parse_count(v, "$.cardinality"))
        .transpose()?;

    match (obj.get("points"), obj.get("distances")) {
        (Some(_), Some(_)) => Err(InputError::new("$", "give either \"points\" or \"distances\", not both")),
        (None, None) => Err(InputError::new("$", "missing key \"points\" or \"distances\"")),
        (Some(points), None) => {
            let x = parse_points(&field, dim, points)?;
            if let Some(n) = cardinality {
                if n != x.len() {
                    return Err(InputError::new(
                        "$.cardinality",
                        format!("{n} does not match the {} points given", x.len()),
                    ));
                }
            }
            Ok(BoundInput::Points(x))
        }
        (None, Some(distances)) => {
            let set = parse_distances(&field, distances)?;
            Ok(BoundInput::Distances { set, dim, cardinality })
        }
    }
}

fn required<'a>(obj: &'a Map<String, Value>, path: &str, key: &str) -> Result<&'a Value, InputError> {
    obj.get(key)
        .ok_or_else(|| InputError::new(path, format!("missing key \"{key}\"")))
}

fn parse_count(v: &Value, path: &str) -> Result<usize, InputError> {
    v.as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| InputError::new(path, "expected a nonnegative integer"))
}

fn parse_integer(v: &Value, path: &str) -> Result<BigInt, InputError> {
    match v {
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(BigInt::from_str(&n.to_string()).expect("integer literal")),
        Value::String(s) => BigInt::from_str(s).map_err(|_| InputError::new(path, format!("invalid integer {s:?}"))),
        _ => Err(InputError::new(path, "expected an integer")),
    }
}

/// `"p/q"`, `"p"`, or a JSON integer.
pub fn parse_rational_str(s: &str) -> Option<Rational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).ok()?;
    let den = BigInt::from_str(den).ok()?;
    (!den.is_zero()).then(|| Rational::new(num, den))
}

fn parse_rational(v: &Value, path: &str) -> Result<Rational, InputError> {
    match v {
        Value::String(s) => {
            parse_rational_str(s).ok_or_else(|| InputError::new(path, format!("invalid rational {s:?}")))
        }
        Value::Number(_) => parse_integer(v, path).map(Rational::from_integer),
        _ => Err(InputError::new(path, "expected a rational string such as \"-3/2\"")),
    }
}

fn parse_field(v: &Value) -> Result<Arc<NumberField>, InputError> {
    let obj = v
        .as_object()
        .ok_or_else(|| InputError::new("$.field", "expected an object"))?;
    for key in obj.keys() {
        if key != "min_poly" {
            return Err(InputError::new(&format!("$.field.{key}"), "unknown key"));
        }
    }
    let coeffs = required(obj, "$.field", "min_poly")?
        .as_array()
        .ok_or_else(|| InputError::new("$.field.min_poly", "expected an array of integers, constant term first"))?;
    let coeffs = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| parse_integer(c, &format!("$.field.min_poly[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    NumberField::new(IntPoly::new(coeffs)).map_err(|e| InputError::new("$.field.min_poly", e.to_string()))
}

fn parse_element(field: &Arc<NumberField>, v: &Value, path: &str) -> Result<NfElement, InputError> {
    let arr = v
        .as_array()
        .ok_or_else(|| InputError::new(path, "expected an array of coefficient strings"))?;
    let n = field.degree();
    if arr.len() != n {
        return Err(InputError::new(
            path,
            format!("expected {n} coefficients, got {}", arr.len()),
        ));
    }
    let coeffs = arr
        .iter()
        .enumerate()
        .map(|(i, c)| parse_rational(c, &format!("{path}[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(field.element(coeffs).expect("length checked"))
}

fn parse_points(field: &Arc<NumberField>, dim: usize, v: &Value) -> Result<PointSet, InputError> {
    let arr = v
        .as_array()
        .ok_or_else(|| InputError::new("$.points", "expected an array of points"))?;
    if arr.len() < 2 {
        return Err(InputError::new(
            "$.points",
            format!("need at least two points, got {}", arr.len()),
        ));
    }
    let mut points = Vec::with_capacity(arr.len());
    for (i, pt) in arr.iter().enumerate() {
        let path = format!("$.points[{i}]");
        let coords = pt
            .as_array()
            .ok_or_else(|| InputError::new(&path, "expected an array of coordinates"))?;
        if coords.len() != dim {
            return Err(InputError::new(
                &path,
                format!("expected {dim} coordinates, got {}", coords.len()),
            ));
        }
        let point = coords
            .iter()
            .enumerate()
            .map(|(c, v)| parse_element(field, v, &format!("{path}[{c}]")))
            .collect::<Result<Vec<_>, _>>()?;
        points.push(point);
    }
    PointSet::new(Arc::clone(field), dim, points).map_err(|e| match e {
        GeometryError::DuplicatePoints { first, second } => {
            InputError::new(&format!("$.points[{second}]"), format!("duplicates $.points[{first}]"))
        }
        other => InputError::new("$.points", other.to_string()),
    })
}

fn parse_distances(field: &Arc<NumberField>, v: &Value) -> Result<DistanceSet, InputError> {
    let arr = v
        .as_array()
        .ok_or_else(|| InputError::new("$.distances", "expected an array of field elements"))?;
    let values = arr
        .iter()
        .enumerate()
        .map(|(i, d)| parse_element(field, d, &format!("$.distances[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    DistanceSet::direct(Arc::clone(field), values).map_err(|e| match e {
        GeometryError::ZeroDistance(i) => InputError::new(&format!("$.distances[{i}]"), "squared distance must be nonzero"),
        other => InputError::new("$.distances", other.to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn err(text: &str) -> InputError {
        parse_input(text).unwrap_err()
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational_str("-3/6"), Some(Rational::new((-1).into(), 2.into())));
        assert_eq!(parse_rational_str("7"), Some(Rational::from_integer(7.into())));
        assert_eq!(parse_rational_str("1/0"), None);
        assert_eq!(parse_rational_str("x"), None);
        assert_eq!(parse_rational_str(""), None);
    }

    #[test]
    fn paths_in_diagnostics() {
        let base = r#""field": {"min_poly": [-3, 0, 1]}, "dim": 2"#;
        assert_eq!(
            err(&format!(r#"{{{base}, "points": [[["0","0"],["0","0"]], [["1","0"],["0","1/0"]]]}}"#)).path,
            "$.points[1][1][1]"
        );
        assert_eq!(
            err(&format!(r#"{{{base}, "points": [[["0","0"],["0","0"]], [["1","0"]]]}}"#)).path,
            "$.points[1]"
        );
        assert_eq!(
            err(&format!(r#"{{{base}, "points": [[["0","0"],["0","0"]], [["0","0"],["0","0"]]]}}"#)).path,
            "$.points[1]"
        );
        assert_eq!(
            err(&format!(r#"{{{base}, "distances": [["1","0"], ["0"]]}}"#)).path,
            "$.distances[1]"
        );
        assert_eq!(
            err(&format!(r#"{{{base}, "distances": [["1","0"], ["0","0"]]}}"#)).path,
            "$.distances[1]"
        );
        assert_eq!(
            err(r#"{"field": {"min_poly": [-1, 0, 1]}, "dim": 2, "distances": [["1","0"]]}"#).path,
            "$.field.min_poly"
        );
        assert_eq!(err(&format!(r#"{{{base}, "extra": 1, "distances": []}}"#)).path, "$.extra");
        assert_eq!(err(&format!(r#"{{{base}}}"#)).path, "$");
        assert_eq!(err("[1, 2").path, "$");
        assert_eq!(
            err(r#"{"field": {"min_poly": [-3, 0, 1]}, "dim": 0, "distances": [["1","0"]]}"#).path,
            "$.dim"
        );
    }

    #[test]
    fn accepts_both_shapes() {
        let pts = parse_input(
            r#"{"field": {"min_poly": ["-1", "1"]}, "dim": 1, "points": [[["0"]], [["1/2"]]], "cardinality": 2}"#,
        )
        .unwrap();
        assert!(matches!(pts, BoundInput::Points(ref x) if x.len() == 2));
        let dist = parse_input(
            r#"{"field": {"min_poly": [-5, 0, 1]}, "dim": 2, "cardinality": 5, "distances": [["1","0"], ["3/2","1/2"]]}"#,
        )
        .unwrap();
        assert!(matches!(dist, BoundInput::Distances { dim: 2, cardinality: Some(5), .. }));
    }
}
