//! JSON values and plain-text tables for command output.

use std::fmt::Write;

use serde_json::{json, Value};

use super::Outcome;
use crate::cohomology::CohomologyGroups;
use crate::hopf::HopfAlgebraData;
use crate::integrals::TorsionCertificate;
use crate::linalg::{Matrix, Scalar};

pub(crate) fn scalars_value(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

pub(crate) fn matrix_value(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| scalars_value(m.row(i))).collect())
}

pub(crate) fn columns_value(m: &Matrix) -> Value {
    Value::Array(m.columns().iter().map(|c| scalars_value(c)).collect())
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// One `key  value` line per top-level field.
pub(crate) fn generic_table(v: &Value) -> String {
    let mut t = String::new();
    match v.as_object() {
        Some(obj) => {
            let width = obj.keys().map(String::len).max().unwrap_or(0);
            for (k, x) in obj {
                let _ = writeln!(t, "{k:width$}  {}", compact(x));
            }
        }
        None => {
            let _ = writeln!(t, "{}", compact(v));
        }
    }
    t
}

pub(crate) fn hopf_table(h: &HopfAlgebraData) -> String {
    let mut t = String::new();
    let _ = writeln!(t, "ring      {}", h.ring());
    let _ = writeln!(t, "rank      {}", h.rank());
    let _ = writeln!(t, "basis     {}", h.basis_labels().join(" "));
    let _ = writeln!(t, "counit    {}", compact(&scalars_value(h.counit().row(0))));
    let _ = writeln!(t, "commutative {}  cocommutative {}", h.commutative(), h.cocommutative());
    t
}

pub(crate) fn cohomology(group: &str, module: &str, cg: &CohomologyGroups) -> Outcome {
    let mut degrees = Vec::new();
    let mut t = format!("H^n({group}, {module})\n");
    for n in 0..=cg.top_degree() {
        let p = cg.group(n);
        let reps: Vec<Value> = cg
            .generators(n)
            .iter()
            .map(|c| Value::Array(c.representative.iter().map(|(i, x)| json!([i, x.to_string()])).collect()))
            .collect();
        let orders = scalars_value(&cg.generator_orders(n));
        degrees.push(json!({
            "degree": n,
            "free_rank": p.free_rank,
            "invariant_factors": p.invariant_factors.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
            "generator_orders": orders,
            "representatives": reps,
        }));
        let _ = writeln!(t, "{n:>3}  {p}");
    }
    let value = json!({
        "group": group,
        "module": module,
        "ring": cg.ring(),
        "max_degree": cg.top_degree(),
        "normalized": cg.is_normalized(),
        "degrees": degrees,
    });
    Outcome::ok(value, t)
}

pub(crate) fn torsion_table(cert: &TorsionCertificate) -> String {
    let mut t = format!("{}: n = {} annihilates H^1..H^{}\n", cert.group, cert.n, cert.max_degree);
    for e in &cert.evidence {
        let groups: Vec<String> = e.groups.iter().map(|p| p.to_string()).collect();
        let _ = writeln!(t, "  {:<12} {}", e.module, groups.join(", "));
    }
    t
}
