//! The `hopf-v1` JSON schema.
//!
//! ```json
//! {"schema": "hopf-v1", "ring": {"kind": "Integers"}, "rank": 2,
//!  "basis": ["1", "g"],
//!  "mul": [[["1","0"],["0","1"]], [["0","1"],["1","0"]]],
//!  "unit": ["1","0"],
//!  "comul": [[["1","0"],["0","0"]], [["0","0"],["0","1"]]],
//!  "counit": ["1","1"],
//!  "antipode": [["1","0"],["0","1"]]}
//! ```
//!
//! `mul[i][j]` holds the coordinates of `e_i e_j`, `comul[i][j][k]` the
//! coefficient of `e_j ⊗ e_k` in `Δ(e_i)`, and `antipode[i]` the
//! coordinates of `S(e_i)`. Scalars are strings (`"3"`, `"-1/2"`); plain
//! JSON integers are accepted on input.

use serde_json::{json, Map, Value};

use super::HopfAlgebraData;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, RingSpec, Scalar};

pub const HOPF_SCHEMA: &str = "hopf-v1";

pub(crate) fn schema_err(path: &str, message: impl Into<String>) -> Error {
    Error::Schema { path: path.to_string(), message: message.into() }
}

pub(crate) fn field<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| schema_err(&format!("{path}.{key}"), "missing field"))
}

pub(crate) fn as_object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| schema_err(path, "expected an object"))
}

pub(crate) fn as_array<'a>(v: &'a Value, len: Option<usize>, path: &str) -> Result<&'a Vec<Value>> {
    let a = v.as_array().ok_or_else(|| schema_err(path, "expected an array"))?;
    if let Some(n) = len {
        if a.len() != n {
            return Err(schema_err(path, format!("expected {n} entries, found {}", a.len())));
        }
    }
    Ok(a)
}

pub(crate) fn as_usize(v: &Value, path: &str) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| schema_err(path, "expected a non-negative integer"))
}

pub(crate) fn parse_ring_value(v: &Value, path: &str) -> Result<RingSpec> {
    match v {
        Value::String(s) => s.parse().map_err(|e: Error| schema_err(path, e.to_string())),
        _ => serde_json::from_value(v.clone()).map_err(|e| schema_err(path, e.to_string())),
    }
}

pub(crate) fn parse_scalar_value(ring: RingSpec, v: &Value, path: &str) -> Result<Scalar> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
        _ => return Err(schema_err(path, "expected an exact scalar string")),
    };
    ring.parse_scalar(&text).map_err(|e| schema_err(path, e.to_string()))
}

pub(crate) fn parse_vector_value(ring: RingSpec, v: &Value, len: Option<usize>, path: &str) -> Result<Vec<Scalar>> {
    as_array(v, len, path)?
        .iter()
        .enumerate()
        .map(|(i, x)| parse_scalar_value(ring, x, &format!("{path}[{i}]")))
        .collect()
}

/// A matrix written as an array of rows.
pub(crate) fn parse_matrix_value(ring: RingSpec, v: &Value, rows: Option<usize>, cols: Option<usize>, path: &str) -> Result<Matrix> {
    let arr = as_array(v, rows, path)?;
    let mut out = Vec::with_capacity(arr.len());
    let mut width = cols;
    for (i, r) in arr.iter().enumerate() {
        let row = parse_vector_value(ring, r, width, &format!("{path}[{i}]"))?;
        width = Some(row.len());
        out.push(row);
    }
    if out.is_empty() {
        return Ok(Matrix::zeros(ring, 0, cols.unwrap_or(0)));
    }
    Matrix::from_rows(ring, out).map_err(|e| schema_err(path, e.to_string()))
}

pub(crate) fn scalar_strings(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

pub(crate) fn matrix_rows_value(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| scalar_strings(m.row(i))).collect())
}

pub fn hopf_to_json(h: &HopfAlgebraData) -> Value {
    let d = h.rank();
    let mul: Vec<Value> = (0..d)
        .map(|i| Value::Array((0..d).map(|j| scalar_strings(&h.mul().column(i * d + j))).collect()))
        .collect();
    let comul: Vec<Value> = (0..d)
        .map(|i| {
            let col = h.comul().column(i);
            Value::Array((0..d).map(|j| scalar_strings(&col[j * d..(j + 1) * d])).collect())
        })
        .collect();
    let antipode: Vec<Value> = (0..d).map(|i| scalar_strings(&h.antipode().column(i))).collect();
    json!({
        "schema": HOPF_SCHEMA,
        "ring": h.ring(),
        "rank": d,
        "basis": h.basis_labels(),
        "mul": mul,
        "unit": scalar_strings(&h.unit().column(0)),
        "comul": comul,
        "counit": scalar_strings(h.counit().row(0)),
        "antipode": antipode,
    })
}

pub fn hopf_from_json(v: &Value) -> Result<HopfAlgebraData> {
    hopf_from_json_at(v, "$")
}

pub(crate) fn hopf_from_json_at(v: &Value, path: &str) -> Result<HopfAlgebraData> {
    let obj = as_object(v, path)?;
    if let Some(s) = obj.get("schema") {
        if s.as_str() != Some(HOPF_SCHEMA) {
            return Err(schema_err(&format!("{path}.schema"), format!("expected {HOPF_SCHEMA:?}")));
        }
    }
    let ring = parse_ring_value(field(obj, "ring", path)?, &format!("{path}.ring"))?;
    let d = as_usize(field(obj, "rank", path)?, &format!("{path}.rank"))?;
    if d == 0 {
        return Err(schema_err(&format!("{path}.rank"), "rank must be positive"));
    }
    let labels = match obj.get("basis") {
        None => super::default_labels(d),
        Some(b) => as_array(b, Some(d), &format!("{path}.basis"))?
            .iter()
            .enumerate()
            .map(|(i, x)| {
                x.as_str().map(str::to_string).ok_or_else(|| schema_err(&format!("{path}.basis[{i}]"), "expected a string"))
            })
            .collect::<Result<Vec<_>>>()?,
    };
    let mut mul = Matrix::zeros(ring, d, d * d);
    let mp = format!("{path}.mul");
    for (i, row) in as_array(field(obj, "mul", path)?, Some(d), &mp)?.iter().enumerate() {
        for (j, entry) in as_array(row, Some(d), &format!("{mp}[{i}]"))?.iter().enumerate() {
            let coords = parse_vector_value(ring, entry, Some(d), &format!("{mp}[{i}][{j}]"))?;
            for (k, c) in coords.into_iter().enumerate() {
                mul.set(k, i * d + j, c);
            }
        }
    }
    let unit = parse_vector_value(ring, field(obj, "unit", path)?, Some(d), &format!("{path}.unit"))?;
    let mut comul = Matrix::zeros(ring, d * d, d);
    let cp = format!("{path}.comul");
    for (i, m) in as_array(field(obj, "comul", path)?, Some(d), &cp)?.iter().enumerate() {
        let block = parse_matrix_value(ring, m, Some(d), Some(d), &format!("{cp}[{i}]"))?;
        for j in 0..d {
            for k in 0..d {
                comul.set(j * d + k, i, block.get(j, k).clone());
            }
        }
    }
    let counit = parse_vector_value(ring, field(obj, "counit", path)?, Some(d), &format!("{path}.counit"))?;
    let s = parse_matrix_value(ring, field(obj, "antipode", path)?, Some(d), Some(d), &format!("{path}.antipode"))?;
    HopfAlgebraData::new(
        ring,
        labels,
        mul,
        Matrix::column_vector(ring, unit),
        comul,
        Matrix::row_vector(ring, counit),
        s.transpose(),
    )
    .map_err(|e| schema_err(path, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const ZC2: &str = r#"{"schema": "hopf-v1", "ring": "Z", "rank": 2, "basis": ["1", "g"],
        "mul": [[["1","0"],["0","1"]], [["0","1"],["1","0"]]], "unit": ["1","0"],
        "comul": [[["1","0"],["0","0"]], [["0","0"],["0","1"]]], "counit": [1, 1],
        "antipode": [["1","0"],["0","1"]]}"#;

    #[test]
    fn parse_and_round_trip() {
        let v: Value = serde_json::from_str(ZC2).unwrap();
        let h = hopf_from_json(&v).unwrap();
        assert!(super::super::verify_hopf(&h).passed());
        let out = serde_json::to_string(&hopf_to_json(&h)).unwrap();
        let again = hopf_from_json(&serde_json::from_str(&out).unwrap()).unwrap();
        assert_eq!(again, h);
        assert_eq!(serde_json::to_string(&hopf_to_json(&again)).unwrap(), out);
    }

    #[test]
    fn schema_error_names_path() {
        let mut v: Value = serde_json::from_str(ZC2).unwrap();
        v["comul"][1][0][1] = json!("x");
        match hopf_from_json(&v) {
            Err(Error::Schema { path, .. }) => assert_eq!(path, "$.comul[1][0][1]"),
            other => panic!("unexpected {other:?}"),
        }
    }
}
