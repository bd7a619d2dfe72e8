//! Comodules as `{"schema": "comodule-v1", "over": <hopf-ref>, "rank": m,
//! "coaction": <rows>}`. A hopf-ref is either a built-in reference such
//! as `"builtin:constant-C2@Z"` or an inline `hopf-v1` object.

use serde_json::{json, Value};

use super::ComoduleData;
use crate::error::Result;
use crate::hopf::json::{as_object, as_usize, field, hopf_from_json_at, matrix_rows_value, parse_matrix_value, schema_err};
use crate::hopf::{hopf_to_json, HopfAlgebraData};
use crate::schemes::{builtin_group, parse_builtin_ref};

pub const COMODULE_SCHEMA: &str = "comodule-v1";

pub fn resolve_hopf_ref(v: &Value, path: &str) -> Result<HopfAlgebraData> {
    match v {
        Value::String(s) => {
            let r = parse_builtin_ref(s).map_err(|e| schema_err(path, e.to_string()))?;
            let g = builtin_group(&r.name, r.ring).map_err(|e| schema_err(path, e.to_string()))?;
            Ok(g.hopf().clone())
        }
        _ => hopf_from_json_at(v, path),
    }
}

/// `over_ref` replaces the inline Hopf algebra by a reference.
pub fn comodule_to_json(v: &ComoduleData, over_ref: Option<&str>) -> Value {
    let over = match over_ref {
        Some(r) => Value::String(r.to_string()),
        None => hopf_to_json(v.over()),
    };
    json!({
        "schema": COMODULE_SCHEMA,
        "over": over,
        "rank": v.rank(),
        "coaction": matrix_rows_value(v.coaction()),
    })
}

pub fn comodule_from_json(v: &Value) -> Result<ComoduleData> {
    let obj = as_object(v, "$")?;
    if let Some(s) = obj.get("schema") {
        if s.as_str() != Some(COMODULE_SCHEMA) {
            return Err(schema_err("$.schema", format!("expected {COMODULE_SCHEMA:?}")));
        }
    }
    let over = resolve_hopf_ref(field(obj, "over", "$")?, "$.over")?;
    let m = as_usize(field(obj, "rank", "$")?, "$.rank")?;
    let coaction = parse_matrix_value(over.ring(), field(obj, "coaction", "$")?, Some(m * over.rank()), Some(m), "$.coaction")?;
    ComoduleData::new(over, coaction).map_err(|e| schema_err("$", e.to_string()))
}
