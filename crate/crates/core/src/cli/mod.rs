//! Command-line front end. [`run`] parses arguments, dispatches to the
//! library and writes JSON (default) or a plain-text table.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when a
//! verification fails; in the last case a failure record is printed.

mod render;
mod resolve;
mod suite;

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cohomology::{algebra_cohomology_ring, cohomology_groups, graded_commutativity_check, DEFAULT_MAX_DEGREE};
use crate::error::{Error, Result};
use crate::hopf::{antipode_properties_check, dual_hopf, hopf_to_json, verify_hopf, VerificationReport};
use crate::integrals::{
    bounded_torsion_certificate, default_torsion_family, dual_coinvariants, frobenius_isomorphism, left_integrals, power_reductivity_witness,
    trace_map,
};
use crate::linalg::{Matrix, RingSpec};
use crate::rep::{comodule_to_json, induce, regular_galgebra, restrict, trivial_galgebra, verify_comodule, COMODULE_SCHEMA};
use crate::schemes::{alpha_pr, constant_group_scheme, group_algebra_scheme, mu_n, product, subgroup_from_ideal, verify_subgroup, GroupTable};

pub use suite::{run_suite, SuiteName};

use render::{columns_value, matrix_value, scalars_value};
use resolve::{load_json, parse_generators, parse_vector, resolve_group, resolve_hopf, resolve_module};

/// Seed for randomized checks when `--seed` is absent.
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "hopfcoh", version, about = "Exact computations with finite flat group schemes")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Seed for randomized checks.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the axioms of a Hopf algebra or comodule (file or built-in).
    Verify { input: String },
    /// Construct a Hopf algebra: constant, group-algebra, mu, alpha,
    /// product, subgroup, or any group reference.
    Build {
        constructor: String,
        /// Group table as a JSON array of index rows.
        #[arg(long)]
        table: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long)]
        ring: Option<String>,
        /// Factors of a product, or the ambient group of a subgroup.
        #[arg(long = "of")]
        of: Vec<String>,
        /// Hopf ideal generators as a JSON array of coordinate vectors.
        #[arg(long)]
        ideal: Option<String>,
        /// Emit the dual Hopf algebra instead.
        #[arg(long)]
        dual: bool,
    },
    /// Hochschild cohomology groups with representatives.
    Cohomology {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "trivial")]
        module: String,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
    },
    /// Cohomology ring of a G-algebra: generators, relations, products.
    Cup {
        #[arg(long)]
        group: String,
        /// `trivial` (the base ring) or `regular` (k[G]).
        #[arg(long, default_value = "trivial")]
        algebra: String,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// Induce a comodule from a subgroup given by a Hopf ideal.
    Induce {
        #[arg(long)]
        group: String,
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value = "trivial")]
        module: String,
    },
    /// Restrict a comodule to a subgroup given by a Hopf ideal.
    Restrict {
        #[arg(long)]
        group: String,
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value = "regular")]
        module: String,
    },
    /// Left integrals of the dual algebra and coinvariants of the dual.
    Integrals {
        #[arg(long)]
        group: String,
    },
    /// Frobenius isomorphism H ≅ H^* and the norm.
    Frobenius {
        #[arg(long)]
        group: String,
    },
    /// Regular trace on k[G] and its identities.
    Trace {
        #[arg(long)]
        group: String,
    },
    /// Certify that rank(k[G]) annihilates H^i for 1 ≤ i ≤ max-degree.
    BoundedTorsion {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        /// Coefficient modules; the default family when absent.
        #[arg(long)]
        module: Vec<String>,
    },
    /// Least symmetric power whose invariants surject onto S^d L.
    PowerReductivity {
        #[arg(long)]
        group: String,
        #[arg(long)]
        module: String,
        /// The map M → L as a JSON coordinate vector.
        #[arg(long)]
        phi: String,
        #[arg(long, default_value_t = 4)]
        dmax: usize,
    },
    /// Run a bundled verification suite.
    Suite {
        #[arg(value_enum)]
        name: SuiteName,
    },
}

/// Result of one command.
struct Outcome {
    value: Value,
    table: String,
    failures: Vec<String>,
}

impl Outcome {
    fn ok(value: Value, table: String) -> Self {
        Outcome { value, table, failures: Vec::new() }
    }

    fn from_report(mut value: Value, report: &VerificationReport) -> Self {
        let failures = report.failures().map(|c| c.name.clone()).collect();
        value["passed"] = json!(report.passed());
        value["checks"] = json!(report.checks);
        Outcome { value, table: report.to_string(), failures }
    }
}

/// Runs the command line `argv` (including the program name).
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let format = cli.format;
    match dispatch(cli) {
        Ok(o) if o.failures.is_empty() => {
            emit(out, format, &o.value, &o.table);
            0
        }
        Ok(o) => {
            let mut record = o.value;
            record["status"] = json!("fail");
            record["failures"] = json!(o.failures);
            emit(out, format, &record, &o.table);
            2
        }
        Err(e @ (Error::TheoremViolation(_) | Error::NotExact(_))) => {
            let record = json!({ "status": "fail", "error": e.to_string() });
            emit(out, format, &record, &format!("FAIL  {e}\n"));
            2
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn emit(out: &mut dyn Write, format: Format, value: &Value, table: &str) {
    let _ = match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(value).expect("serializable")),
        Format::Table => write!(out, "{table}"),
    };
}

fn dispatch(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Verify { input } => verify(&input),
        Command::Build { constructor, table, n, p, r, ring, of, ideal, dual } => {
            let h = build(&constructor, table.as_deref(), n, p, r, ring.as_deref(), &of, ideal.as_deref())?;
            let h = if dual { dual_hopf(&h) } else { h };
            let v = hopf_to_json(&h);
            let table = render::hopf_table(&h);
            Ok(Outcome::ok(v, table))
        }
        Command::Cohomology { group, module, max_degree } => {
            let g = resolve_group(&group)?;
            let m = resolve_module(&module, &g)?;
            let g = g.base_change(m.ring())?;
            let cg = cohomology_groups(&g, &m, max_degree)?;
            Ok(render::cohomology(&g.name, &module, &cg))
        }
        Command::Cup { group, algebra, max_degree } => cup(&group, &algebra, max_degree),
        Command::Induce { group, ideal, module } => {
            let g = resolve_group(&group)?;
            let sub = subgroup_from_ideal(&g, &parse_generators(g.ring(), g.rank(), &ideal)?)?;
            let w = resolve_module(&module, &sub.sub)?;
            let v = induce(&w, &sub)?;
            let value = json!({ "subgroup_rank": sub.sub.rank(), "comodule": comodule_to_json(&v, None) });
            Ok(Outcome::from_report(value, &verify_comodule(&v)))
        }
        Command::Restrict { group, ideal, module } => {
            let g = resolve_group(&group)?;
            let sub = subgroup_from_ideal(&g, &parse_generators(g.ring(), g.rank(), &ideal)?)?;
            let v = resolve_module(&module, &g)?;
            let w = restrict(&v, &sub)?;
            let value = json!({ "subgroup_rank": sub.sub.rank(), "comodule": comodule_to_json(&w, None) });
            Ok(Outcome::from_report(value, &verify_comodule(&w)))
        }
        Command::Integrals { group } => {
            let h = resolve_hopf(&group)?;
            let dual = dual_hopf(&h);
            let ints = left_integrals(dual.algebra())?;
            let coinv = dual_coinvariants(&h)?;
            let value = json!({
                "ring": h.ring(),
                "rank": h.rank(),
                "left_integrals_of_dual": columns_value(&ints),
                "dual_coinvariants": columns_value(&coinv),
                "integrals_of_algebra": columns_value(&left_integrals(h.algebra())?),
            });
            let table = render::generic_table(&value);
            Ok(Outcome::ok(value, table))
        }
        Command::Frobenius { group } => {
            let h = resolve_hopf(&group)?;
            let f = frobenius_isomorphism(&h)?;
            let value = json!({ "psi": scalars_value(&f.psi), "phi": matrix_value(&f.phi), "norm": scalars_value(&f.norm) });
            Ok(Outcome::from_report(value, &f.report))
        }
        Command::Trace { group } => {
            let h = resolve_hopf(&group)?;
            let t = trace_map(&h)?;
            let value = json!({ "trace": scalars_value(t.trace.row(0)) });
            Ok(Outcome::from_report(value, &t.report))
        }
        Command::BoundedTorsion { group, max_degree, module } => {
            let g = resolve_group(&group)?;
            let family = if module.is_empty() {
                default_torsion_family(&g)?
            } else {
                module.iter().map(|s| Ok((s.clone(), resolve_module(s, &g)?))).collect::<Result<Vec<_>>>()?
            };
            let cert = bounded_torsion_certificate(&g, &family, max_degree)?;
            let value = serde_json::to_value(&cert).expect("serializable");
            let table = render::torsion_table(&cert);
            Ok(Outcome::ok(value, table))
        }
        Command::PowerReductivity { group, module, phi, dmax } => {
            let g = resolve_group(&group)?;
            let m = resolve_module(&module, &g)?;
            let phi = Matrix::row_vector(m.ring(), parse_vector(m.ring(), m.rank(), &phi)?);
            let rep = power_reductivity_witness(&m, &phi, dmax)?;
            let value = serde_json::to_value(&rep).expect("serializable");
            let table = render::generic_table(&value);
            Ok(Outcome::ok(value, table))
        }
        Command::Suite { name } => {
            let report = run_suite(name, cli.seed);
            Ok(Outcome::from_report(json!({ "suite": name.as_str(), "seed": cli.seed }), &report))
        }
    }
}

fn verify(input: &str) -> Result<Outcome> {
    let is_comodule = |v: &Value| v.get("schema").and_then(Value::as_str) == Some(COMODULE_SCHEMA);
    if std::path::Path::new(input).exists() {
        let v = load_json(input)?;
        if is_comodule(&v) {
            let m = crate::rep::comodule_from_json(&v)?;
            let value = json!({ "object": "comodule", "ring": m.ring(), "rank": m.rank() });
            return Ok(Outcome::from_report(value, &verify_comodule(&m)));
        }
    }
    let h = resolve_hopf(input)?;
    let mut report = verify_hopf(&h);
    report.extend(antipode_properties_check(&h));
    let value = json!({ "object": "hopf", "ring": h.ring(), "rank": h.rank() });
    Ok(Outcome::from_report(value, &report))
}

#[allow(clippy::too_many_arguments)]
fn build(
    constructor: &str,
    table: Option<&str>,
    n: Option<usize>,
    p: Option<u64>,
    r: u32,
    ring: Option<&str>,
    of: &[String],
    ideal: Option<&str>,
) -> Result<crate::hopf::HopfAlgebraData> {
    let ring_arg = ring;
    let ring = || -> Result<RingSpec> { ring_arg.ok_or_else(|| Error::Parse("--ring is required".into()))?.parse() };
    let table = || -> Result<GroupTable> {
        let t = table.ok_or_else(|| Error::Parse("--table is required".into()))?;
        let rows: Vec<Vec<usize>> = serde_json::from_str(t).map_err(|e| Error::Parse(format!("--table: {e}")))?;
        GroupTable::new(rows)
    };
    let g = match constructor {
        "constant" => constant_group_scheme(&table()?, ring()?)?,
        "group-algebra" => group_algebra_scheme(&table()?, ring()?)?,
        "mu" => mu_n(n.ok_or_else(|| Error::Parse("--n is required".into()))?, ring()?)?,
        "alpha" => alpha_pr(p.ok_or_else(|| Error::Parse("--p is required".into()))?, r, ring()?)?,
        "product" => {
            let [a, b] = of else {
                return Err(Error::Parse("product needs exactly two --of factors".into()));
            };
            product(&resolve_group(a)?, &resolve_group(b)?)?
        }
        "subgroup" => {
            let [a] = of else {
                return Err(Error::Parse("subgroup needs one --of ambient group".into()));
            };
            let g = resolve_group(a)?;
            let gens = parse_generators(g.ring(), g.rank(), ideal.ok_or_else(|| Error::Parse("--ideal is required".into()))?)?;
            let sub = subgroup_from_ideal(&g, &gens)?;
            let report = verify_subgroup(&sub);
            if let Some(c) = report.failures().next() {
                return Err(Error::TheoremViolation(format!("subgroup: {} fails", c.name)));
            }
            sub.sub
        }
        other => {
            let h = resolve_hopf(other)?;
            return match ring_arg {
                Some(r) => crate::hopf::base_change(&h, r.parse()?),
                None => Ok(h),
            };
        }
    };
    Ok(g.hopf().clone())
}

fn cup(group: &str, algebra: &str, max_degree: usize) -> Result<Outcome> {
    let g = resolve_group(group)?;
    let a = match algebra {
        "trivial" => trivial_galgebra(g.hopf()),
        "regular" => regular_galgebra(g.hopf()),
        other => return Err(Error::Parse(format!("unknown algebra {other:?}; expected trivial or regular"))),
    };
    let ring = algebra_cohomology_ring(&g, &a, max_degree)?;
    let mut report = ring.report.clone();
    if ring.cohomology().has_trivial_coefficients() {
        report.extend(graded_commutativity_check(ring.cohomology())?);
    }
    let gens = &ring.generators;
    let mut products = Vec::new();
    for (i, x) in gens.iter().enumerate() {
        for (j, y) in gens.iter().enumerate() {
            if x.degree + y.degree <= max_degree {
                let z = ring.multiply(x, y)?;
                products.push(json!({ "left": i, "right": j, "degree": z.degree, "coordinates": scalars_value(&z.coordinates) }));
            }
        }
    }
    let powers: Vec<Value> = gens
        .iter()
        .enumerate()
        .filter(|(_, x)| x.degree > 0)
        .map(|(i, x)| -> Result<Value> {
            let mut acc = x.clone();
            let mut nonzero = vec![!acc.is_zero()];
            while acc.degree + x.degree <= max_degree {
                acc = ring.multiply(&acc, x)?;
                nonzero.push(!acc.is_zero());
            }
            Ok(json!({ "generator": i, "nonzero": nonzero }))
        })
        .collect::<Result<_>>()?;
    let value = json!({
        "group": g.name,
        "algebra": algebra,
        "degree_cap": max_degree,
        "route": ring.route,
        "groups": ring.groups,
        "generators": gens.iter().map(|x| json!({ "degree": x.degree, "coordinates": scalars_value(&x.coordinates) })).collect::<Vec<_>>(),
        "relations": ring.relations,
        "products": products,
        "powers": powers,
    });
    Ok(Outcome::from_report(value, &report))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("hopfcoh").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn unknown_verb_is_usage_error() {
        let (code, out, err) = call(&["frobnicate"]);
        assert_eq!(code, 1);
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }

    #[test]
    fn help_exits_zero() {
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn verify_builtin() {
        let (code, out, _) = call(&["verify", "builtin:klein@Z"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["passed"], json!(true));
    }

    #[test]
    fn cohomology_of_c2() {
        let (code, out, _) = call(&["cohomology", "--group", "builtin:constant-C2@Z", "--module", "builtin:trivial@Z", "--max-degree", "4"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["degrees"][2]["invariant_factors"], json!(["2"]));
        assert_eq!(v["degrees"][2]["free_rank"], json!(0));
    }

    #[test]
    fn build_round_trips_through_verify() {
        let (code, out, _) = call(&["build", "constant", "--table", "[[0,1],[1,0]]", "--ring", "F3", "--dual"]);
        assert_eq!(code, 0);
        let path = std::env::temp_dir().join(format!("hopfcoh-build-{}.json", std::process::id()));
        std::fs::write(&path, out).unwrap();
        let (code, _, _) = call(&["verify", path.to_str().unwrap()]);
        std::fs::remove_file(&path).unwrap();
        assert_eq!(code, 0);
    }

    #[test]
    fn missing_option_is_usage_error() {
        assert_eq!(call(&["build", "mu", "--ring", "Z"]).0, 1);
    }
}
