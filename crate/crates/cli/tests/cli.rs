use std::collections::BTreeSet;
use std::process::{Command, Output};

use serde_json::Value;

fn nonassoc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nonassoc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn table1_rows() -> Vec<Vec<String>> {
    include_str!("../../core/data/sedenion_table.txt")
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.split_whitespace().map(String::from).collect())
        .collect()
}

#[test]
fn sedenion_table_text_and_json() {
    let text = nonassoc(&["tables", "sedenion"]);
    assert_eq!(text.status.code(), Some(0));
    let rows: Vec<Vec<String>> = stdout(&text)
        .lines()
        .map(|l| l.split_whitespace().map(String::from).collect())
        .collect();
    assert_eq!(rows, table1_rows());

    let json = nonassoc(&["tables", "sedenion", "--format", "json"]);
    let v: Value = serde_json::from_slice(&json.stdout).unwrap();
    let grid: Vec<Vec<String>> = serde_json::from_value(v["rows"].clone()).unwrap();
    assert_eq!(grid.len(), 17);
    assert_eq!(grid, table1_rows());
    assert!(stdout(&json).ends_with("}\n"));
}

#[test]
fn unknown_algebra_is_a_usage_error() {
    let o = nonassoc(&["tables", "trigintaduonion"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown algebra"));
}

#[test]
fn eval_examples() {
    let cases = [
        ("octonion", "comm(e1,e2)", "2*e3"),
        ("octonion", "(e1*e2)*e4 - e1*(e2*e4)", "-2*e5"),
        ("split_octonion", "u0*u0c", "0"),
        ("octonion", "one*e5", "e5"),
        ("sedenion", "nacomm(i1, i4, i5)", "0"),
    ];
    for (alg, expr, expected) in cases {
        let o = nonassoc(&["eval", "--algebra", alg, expr]);
        assert_eq!(o.status.code(), Some(0), "{expr}");
        assert_eq!(stdout(&o), format!("{expected}\n"));
    }
    let o = nonassoc(&["eval", "--algebra", "octonion", "e1 ** e2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("offset 3"));
}

#[test]
fn export_load_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for name in [
        "octonion",
        "split_octonion",
        "sedenion",
        "quaternion",
        "biquaternion",
    ] {
        let path = dir.path().join(format!("{name}.json"));
        let p = path.to_str().unwrap();
        assert_eq!(
            nonassoc(&["export-algebra", name, p]).status.code(),
            Some(0)
        );
        let written = std::fs::read_to_string(&path).unwrap();
        let reloaded = nonassoc::io::algebra_from_json(&written).unwrap();
        assert_eq!(
            nonassoc::io::algebra_to_json(&reloaded).unwrap(),
            written,
            "{name}"
        );
        for format in ["text", "json"] {
            let direct = nonassoc(&["tables", name, "--format", format]);
            let loaded = nonassoc(&["load-algebra", p, "--format", format]);
            assert_eq!(loaded.status.code(), Some(0));
            assert_eq!(direct.stdout, loaded.stdout, "{name} {format}");
        }
    }
}

#[test]
fn file_errors() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.json");
    assert_eq!(
        nonassoc(&["load-algebra", missing.to_str().unwrap()])
            .status
            .code(),
        Some(3)
    );
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"dim\": 2}").unwrap();
    assert_eq!(
        nonassoc(&["load-algebra", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    let nowhere = dir.path().join("no/such/dir/out.json");
    let o = nonassoc(&[
        "verify",
        "--suite",
        "example2",
        "--out",
        nowhere.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(3));
    let o = nonassoc(&["export-algebra", "octonion", nowhere.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_example2_passes_and_writes_out() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = nonassoc(&[
        "verify",
        "--suite",
        "example2",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["checks"][0]["report"]["law_id"], "leibniz");
}

#[test]
fn verify_reports_are_deterministic_without_timing() {
    for suite in ["core", "example1", "appendixA"] {
        let args = ["verify", "--suite", suite, "--no-timing", "--samples", "50"];
        let a = nonassoc(&args);
        let b = nonassoc(&args);
        assert_eq!(a.stdout, b.stdout, "{suite}");
        assert!(!stdout(&a).contains("elapsed_ms"));
    }
}

#[test]
fn example1_exit_code_reflects_the_unmet_identity() {
    let o = nonassoc(&["verify", "--suite", "example1", "--no-timing"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("unmet: susy_hamilton_equivalence "), "{err}");
}

fn keys(v: &Value) -> BTreeSet<String> {
    v.as_object().unwrap().keys().cloned().collect()
}

fn strings(v: &Value) -> BTreeSet<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap().to_string())
        .collect()
}

/// Required keys present and no keys outside `properties`.
fn conforms(value: &Value, schema: &Value) {
    let allowed = keys(&schema["properties"]);
    let present = keys(value);
    assert!(present.is_subset(&allowed), "{present:?} vs {allowed:?}");
    assert!(strings(&schema["required"]).is_subset(&present));
}

#[test]
fn reports_follow_the_schema() {
    let schema: Value =
        serde_json::from_str(include_str!("../../../docs/report.schema.json")).unwrap();
    let defs = &schema["$defs"];
    let o = nonassoc(&["verify", "--suite", "appendixA"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    conforms(&v, &schema);
    for check in v["checks"].as_array().unwrap() {
        conforms(check, &defs["check"]);
        conforms(&check["report"], &defs["lawReport"]);
        for w in check["report"]["witnesses"].as_array().unwrap() {
            conforms(w, &defs["witness"]);
        }
    }
}

#[test]
fn spectrum_command() {
    let o = nonassoc(&["spectrum", "--grid", "800", "--levels", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["pairing"], "shifted");
    assert_eq!(v["unpaired"]["side"], "h_plus");

    let o = nonassoc(&[
        "spectrum",
        "--superpotential",
        "cubic",
        "--domain",
        "-6,6",
        "--grid",
        "600",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pairing"], "direct");

    let o = nonassoc(&["spectrum", "--grid", "100", "--tol", "1e-9"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(
        nonassoc(&["spectrum", "--superpotential", "quintic"])
            .status
            .code(),
        Some(2)
    );
}
