use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn hopfcoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfcoh")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn example(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples").join(name).to_string_lossy().into_owned()
}

fn scratch(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("hopfcoh-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

fn c2_with(edit: impl FnOnce(&mut Value)) -> String {
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(example("c2_constant.json")).unwrap()).unwrap();
    edit(&mut v);
    v.to_string()
}

#[test]
fn verify_bundled_example() {
    let out = hopfcoh(&["verify", &example("c2_constant.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn failed_verification_exits_two_with_a_record() {
    let path = scratch("bad_counit.json", &c2_with(|v| v["counit"] = serde_json::json!(["0", "1"])));
    let out = hopfcoh(&["verify", &path]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["status"], "fail");
    assert!(v["failures"].as_array().unwrap().iter().any(|f| f == "left counit"));
}

#[test]
fn malformed_entry_names_its_path() {
    let path = scratch("bad_entry.json", &c2_with(|v| v["mul"][1][0][1] = Value::String("x".into())));
    let out = hopfcoh(&["verify", &path]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("$.mul[1][0][1]"));
}

#[test]
fn invalid_json_is_an_input_error() {
    let path = scratch("broken.json", "{ \"schema\": ");
    assert_eq!(hopfcoh(&["verify", &path]).status.code(), Some(1));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(hopfcoh(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(hopfcoh(&["suite", "nope"]).status.code(), Some(1));
    assert_eq!(hopfcoh(&["cohomology"]).status.code(), Some(1));
    assert_eq!(hopfcoh(&[]).status.code(), Some(1));
    assert_eq!(hopfcoh(&["--help"]).status.code(), Some(0));
}

#[test]
fn cohomology_of_cyclic_two() {
    let args = ["cohomology", "--group", "builtin:constant-C2@Z", "--module", "builtin:trivial@Z", "--max-degree", "4"];
    let out = hopfcoh(&args);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let factors: Vec<&Value> = v["degrees"].as_array().unwrap().iter().map(|d| &d["invariant_factors"]).collect();
    assert_eq!(factors[2], &serde_json::json!(["2"]));
    assert_eq!(factors[4], &serde_json::json!(["2"]));
    assert_eq!(v["degrees"][0]["free_rank"], 1);
    assert_eq!(v["degrees"][1]["free_rank"], 0);
    // byte-for-byte reproducible
    assert_eq!(hopfcoh(&args).stdout, out.stdout);
}

#[test]
fn klein_torsion_certificate() {
    let out = hopfcoh(&["bounded-torsion", "--group", "builtin:klein@Z", "--max-degree", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["n"], "4");
    assert_eq!(v["evidence"].as_array().unwrap().len(), 3);
}

#[test]
fn every_verb_runs() {
    let ideal = "[[0,0,1,0],[0,0,0,1]]";
    let runs: [&[&str]; 11] = [
        &["build", "mu", "--n", "3", "--ring", "Q"],
        &["build", "alpha", "--p", "2", "--r", "2", "--ring", "F2"],
        &["build", "constant", "--table", "[[0,1],[1,0]]", "--ring", "Z"],
        &["cup", "--group", "builtin:alpha2@F2", "--max-degree", "3"],
        &["induce", "--group", "builtin:klein@Z", "--ideal", ideal],
        &["restrict", "--group", "builtin:klein@Z", "--ideal", ideal],
        &["integrals", "--group", "builtin:mu3@Z"],
        &["frobenius", "--group", "builtin:alpha2@F2"],
        &["trace", "--group", "builtin:klein@Z"],
        &["power-reductivity", "--group", "builtin:constant-C2@F2", "--module", "trivial:2", "--phi", "[1,1]"],
        &["verify", "builtin:constant-S3@F2"],
    ];
    for args in runs {
        let out = hopfcoh(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        json(&out);
        let table = hopfcoh(&[args, &["--format", "table"]].concat());
        assert_eq!(table.status.code(), Some(0), "{args:?} as a table");
    }
}

#[test]
fn built_objects_verify() {
    let out = hopfcoh(&["build", "constant", "--table", "[[0,1,2],[1,2,0],[2,0,1]]", "--ring", "Z/9"]);
    assert_eq!(out.status.code(), Some(0));
    let path = scratch("c3_mod9.json", &String::from_utf8(out.stdout).unwrap());
    assert_eq!(hopfcoh(&["verify", &path]).status.code(), Some(0));
    let out = hopfcoh(&["cohomology", "--group", &path, "--max-degree", "2"]);
    let v = json(&out);
    // Hom(C3, Z/9) = Z/3
    assert_eq!(v["degrees"][1]["free_rank"], 0);
    assert_eq!(v["degrees"][1]["invariant_factors"], serde_json::json!(["3"]));
}

#[test]
fn suites_pass() {
    for name in ["axioms", "cohomology-oracles", "torsion", "frobenius"] {
        let out = hopfcoh(&["suite", name, "--seed", "7"]);
        assert_eq!(out.status.code(), Some(0), "suite {name}");
        let v = json(&out);
        assert_eq!(v["passed"], true);
        assert_eq!(v["seed"], 7);
    }
}
