//! Turning command-line strings into library objects.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hopf::json::{parse_vector_value, schema_err};
use crate::hopf::{hopf_from_json, HopfAlgebraData};
use crate::linalg::{Matrix, RingSpec, Scalar};
use crate::rep::{comodule_from_json, regular_representation, ComoduleData, Side};
use crate::schemes::{builtin_group, parse_builtin_ref, GroupSchemeData, Provenance};

pub(crate) fn load_json(path: &str) -> Result<Value> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

fn is_file(s: &str) -> bool {
    std::path::Path::new(s).is_file()
}

/// A file holding a `hopf-v1` object, or a built-in reference.
pub(crate) fn resolve_hopf(s: &str) -> Result<HopfAlgebraData> {
    if is_file(s) {
        return hopf_from_json(&load_json(s)?);
    }
    Ok(resolve_group(s)?.hopf().clone())
}

pub(crate) fn resolve_group(s: &str) -> Result<GroupSchemeData> {
    if is_file(s) {
        let h = hopf_from_json(&load_json(s)?)?;
        let name = std::path::Path::new(s).file_stem().and_then(|x| x.to_str()).unwrap_or(s).to_string();
        return GroupSchemeData::new(h, name, Provenance { constructor: "file".into(), params: json!({ "path": s }) });
    }
    let r = parse_builtin_ref(s)?;
    builtin_group(&r.name, r.ring)
}

/// `trivial`, `trivial:<m>` or `regular`, over `h`.
fn named_module(kind: &str, h: &HopfAlgebraData) -> Option<Result<ComoduleData>> {
    if kind == "regular" {
        return Some(Ok(regular_representation(h, Side::Left)));
    }
    if kind == "trivial" {
        return Some(Ok(ComoduleData::trivial(h, 1)));
    }
    let m = kind.strip_prefix("trivial:")?;
    Some(match m.parse::<usize>() {
        Ok(m) if m >= 1 => Ok(ComoduleData::trivial(h, m)),
        _ => Err(Error::Parse(format!("bad rank in module {kind:?}"))),
    })
}

/// A module for `g`: a named one (`regular`, `trivial:2`), a named one
/// after base change (`builtin:trivial@Z/4`), or a `comodule-v1` file.
/// File modules must be over `g` or over a base change of it.
pub(crate) fn resolve_module(s: &str, g: &GroupSchemeData) -> Result<ComoduleData> {
    if let Some(m) = named_module(s, g.hopf()) {
        return m;
    }
    if is_file(s) {
        let m = comodule_from_json(&load_json(s)?)?;
        let over = g.base_change(m.ring())?;
        if !crate::rep::same_structure(m.over(), over.hopf()) {
            return Err(Error::Malformed(format!("module {s} is not over {}", g.name)));
        }
        return Ok(m);
    }
    if let Some(body) = s.strip_prefix("builtin:") {
        if let Some((kind, ring)) = body.rsplit_once('@') {
            let gr = g.base_change(ring.parse()?)?;
            if let Some(m) = named_module(kind, gr.hopf()) {
                return m;
            }
        }
    }
    Err(Error::Parse(format!("unknown module {s:?}; expected regular, trivial[:m], builtin:<kind>@<ring> or a file")))
}

fn parse_arg(text: &str, what: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

pub(crate) fn parse_vector(ring: RingSpec, len: usize, text: &str) -> Result<Vec<Scalar>> {
    parse_vector_value(ring, &parse_arg(text, "vector")?, Some(len), "$")
}

/// A JSON array of coordinate vectors, returned as matrix columns.
pub(crate) fn parse_generators(ring: RingSpec, len: usize, text: &str) -> Result<Matrix> {
    let v = parse_arg(text, "generators")?;
    let items = v.as_array().ok_or_else(|| schema_err("$", "expected an array of vectors"))?;
    let cols = items
        .iter()
        .enumerate()
        .map(|(i, x)| parse_vector_value(ring, x, Some(len), &format!("$[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(ring, len, &cols))
}
