use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn catalogue(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../catalogue").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nakayama"))
        .args(args)
        .env_remove("NAKAYAMA_BOUND")
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn error_of(out: &Output) -> Value {
    let v: Value = serde_json::from_slice(&out.stderr).unwrap();
    v["error"].clone()
}

#[test]
fn golden_gorenstein_dimensions() {
    let r = report(&["gorenstein", "--builtin", "linear_An", "--param", "n=2"]);
    assert_eq!(r["results"]["g"], 1);
    assert_eq!(r["results"]["is_iwanaga_gorenstein"], "yes");
    let r = report(&["gorenstein", "--builtin", "cyclic_rad_square", "--param", "n=3"]);
    assert_eq!(r["results"]["g"], 0);
    assert_eq!(r["command"], "gorenstein");
    assert_eq!(r["bound"], 14);
}

#[test]
fn broken_relation_is_semantic_error() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("bad.json");
    // a: 1 -> 2 and b: 2 -> 3 are not parallel
    std::fs::write(
        &spec,
        r#"{"quiver": {"vertices": ["1", "2", "3"],
            "arrows": [{"name": "a", "from": "1", "to": "2"}, {"name": "b", "from": "2", "to": "3"}],
            "relations": [[{"coeff": "1", "path": ["a"]}, {"coeff": "1", "path": ["b"]}]],
            "nilpotency_bound": 3}}"#,
    )
    .unwrap();
    let out = run(&["check", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_of(&out)["kind"], "MalformedRelation");
    assert!(out.stdout.is_empty());
}

#[test]
fn schema_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("bad.json");
    std::fs::write(&spec, r#"{"quiver": {"vertices": 3}}"#).unwrap();
    let out = run(&["check", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_of(&out)["kind"], "SchemaError");
    let out = run(&["check", "/nonexistent/spec.json"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_of(&out)["kind"], "UsageError");
}

#[test]
fn unknown_builtin_is_semantic_error() {
    let out = run(&["check", "--builtin", "octonions"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_of(&out)["kind"], "UnknownName");
}

#[test]
fn reports_are_deterministic_and_written_to_out() {
    let dir = tempfile::tempdir().unwrap();
    let a2 = catalogue("a2.json");
    let mods = catalogue("a2_modules.json");
    let mut texts = Vec::new();
    for k in 0..2 {
        let path = dir.path().join(format!("r{k}.json"));
        let out = run(&["gp", a2.to_str().unwrap(), "--modules", mods.to_str().unwrap(), "--out", path.to_str().unwrap()]);
        assert!(out.status.success());
        assert!(out.stdout.is_empty());
        let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        v["timing_ms"] = Value::Null;
        texts.push(serde_json::to_string(&v).unwrap());
    }
    assert_eq!(texts[0], texts[1]);
}

#[test]
fn tested_set_replays_to_identical_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.json");
    let out = run(&["gp", "--builtin", "linear_An", "--param", "n=3", "--out", first.to_str().unwrap()]);
    assert!(out.status.success());
    let again = report(&["gp", "--builtin", "linear_An", "--param", "n=3", "--modules", first.to_str().unwrap()]);
    let before: Value = serde_json::from_str(&std::fs::read_to_string(&first).unwrap()).unwrap();
    assert_eq!(before["results"], again["results"]);
    assert_eq!(before["tested_set"], again["tested_set"]);
    assert_ne!(before["input_digest"], again["input_digest"]);
}

#[test]
fn a2_membership_from_module_file() {
    let r = report(&["gp", catalogue("a2.json").to_str().unwrap(), "--modules", catalogue("a2_modules.json").to_str().unwrap()]);
    let rows = r["results"]["modules"].as_array().unwrap();
    let verdicts: Vec<(String, String, String)> = rows
        .iter()
        .map(|m| {
            let s = |k: &str| m[k].as_str().unwrap().to_string();
            (s("label"), s("gorenstein_projective"), s("gorenstein_injective"))
        })
        .collect();
    let expected = [("P1", "yes", "yes"), ("P2", "yes", "no"), ("S1", "no", "yes")];
    for (got, want) in verdicts.iter().zip(expected) {
        assert_eq!((got.0.as_str(), got.1.as_str(), got.2.as_str()), want);
    }
    assert_eq!(rows[2]["gp_dimension"]["finite"], 1);
}

#[test]
fn bound_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_nakayama"))
        .args(["gorenstein", "--builtin", "dual_numbers"])
        .env("NAKAYAMA_BOUND", "3")
        .output()
        .unwrap();
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["bound"], 3);
    let r = report(&["gorenstein", "--builtin", "dual_numbers", "--bound", "5"]);
    assert_eq!(r["bound"], 5);
}

#[test]
fn catalogue_loads() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../catalogue");
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        if path.file_name().unwrap().to_str().unwrap().contains("modules") {
            continue;
        }
        let r = report(&["check", path.to_str().unwrap()]);
        assert!(r["results"]["dim"].as_u64().unwrap() > 0);
        seen += 1;
    }
    assert!(seen >= 6);
}

#[test]
fn category_examples() {
    let r = report(&["verify", "category", catalogue("morphism_category.json").to_str().unwrap()]);
    assert_eq!(r["results"]["sup_left"]["finite"], 1);
    assert_eq!(r["results"]["g"], 1);
    let r = report(&["verify", "category", catalogue("periodic_complexes3.json").to_str().unwrap()]);
    assert_eq!(r["results"]["g"], 0);
    let out = run(&["verify", "category", "--builtin", "cyclic_rad_square", "--param", "n=2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn vector_space_suites() {
    for suite in ["monad", "ambidextrous"] {
        let r = report(&["verify", suite, "--builtin", "linear_An", "--param", "n=2"]);
        assert_eq!(r["results"]["passed"], true);
        assert!(r["tested_set"].as_array().unwrap().is_empty());
    }
}

#[test]
fn nakayama_on_a2() {
    let r = report(&["nakayama", catalogue("a2.json").to_str().unwrap(), "--modules", catalogue("a2_modules.json").to_str().unwrap()]);
    let rows = r["results"]["modules"].as_array().unwrap();
    // nu(P1) = I1 = (k -> 0), nu(P2) = I2 = (k -> k), nu(S1) = 0
    let dims: Vec<Value> = rows.iter().map(|m| m["nu"]["dimension_vector"].clone()).collect();
    assert_eq!(dims, [serde_json::json!([1, 0]), serde_json::json!([1, 1]), serde_json::json!([0, 0])]);
    assert!(rows.iter().all(|m| m["dim"].as_u64().unwrap() >= 1));
    assert_eq!(rows[0]["unit_lambda_iso"], true);
    assert_eq!(rows[2]["unit_lambda_iso"], false);
}

#[test]
fn tensor_spec_with_relative_path() {
    let r = report(&["check", catalogue("a2_tensor_dual_numbers.json").to_str().unwrap()]);
    assert_eq!(r["results"]["dim"], 6);
    assert_eq!(r["results"]["vertices"], 2);
}
