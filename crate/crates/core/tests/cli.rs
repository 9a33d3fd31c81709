use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn braidcheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidcheck"))
        .args(args)
        .env_remove("BRAIDCHECK_TOL")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn ids(report: &Value) -> Vec<String> {
    report["items"]
        .as_array()
        .unwrap()
        .iter()
        .map(|i| i["id"].as_str().unwrap().to_string())
        .collect()
}

/// Sweedler's algebra with the x⊗x coefficient of the braiding doubled.
fn broken_file(dir: &Path) -> String {
    let path = dir.join("broken.bqg.json");
    let mut spec: Value = serde_json::from_str(&braidcheck::spec::to_json(
        &braidcheck::spec::builtin("sweedler").unwrap(),
    ))
    .unwrap();
    let sigma = spec["braiding"].as_array_mut().unwrap();
    let xx = sigma
        .iter_mut()
        .find(|e| e["indices"] == serde_json::json!([2, 2, 2, 2]))
        .unwrap();
    xx["re"] = (xx["re"].as_f64().unwrap() * 2.0).into();
    std::fs::write(&path, serde_json::to_string(&spec).unwrap()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn passing_check_exits_zero() {
    let o = braidcheck(&["check", "sweedler"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("overall: PASS (65 items, 0 failed)\n"));
}

#[test]
fn failing_check_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let file = broken_file(dir.path());
    let o = braidcheck(&["check", &file, "--suite", "axioms"]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["check"][..],
        &["check", "no_such_instance"],
        &["check", "z2", "--suite", "identities", "--only", "9.99"],
        &["gn", "z2"],
        &["braid-system", "z2", "--range", "3..1"],
        &["frobnicate"],
    ] {
        let o = braidcheck(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn malformed_file_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.bqg.json");
    for body in ["{not json", r#"{"labels": ["a"]}"#] {
        std::fs::write(&path, body).unwrap();
        let o = braidcheck(&["check", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(2), "{body}");
        let err = String::from_utf8(o.stderr).unwrap();
        assert!(err.starts_with("error: "), "{err}");
    }
}

#[test]
fn help_goes_to_stdout() {
    let o = braidcheck(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    for cmd in ["list", "check", "derive", "gn", "braid-system", "classify"] {
        assert!(stdout(&o).contains(cmd), "{cmd}");
    }
}

#[test]
fn list_shows_builtins_and_catalog() {
    let o = braidcheck(&["list"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for name in braidcheck::spec::builtin_names() {
        assert!(text.contains(name), "{name}");
    }
    assert!(text.contains("2.29") && text.contains("2.54"));
}

#[test]
fn json_output_is_deterministic() {
    let a = braidcheck(&["check", "s3", "--format", "json"]);
    let b = braidcheck(&["check", "s3", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["overall"], Value::Bool(true));
}

#[test]
fn text_and_json_cover_the_same_items() {
    let text = stdout(&braidcheck(&["check", "clifford_rank1"]));
    let report = json(&braidcheck(&[
        "check",
        "clifford_rank1",
        "--format",
        "json",
    ]));
    let from_text: Vec<String> = text
        .lines()
        .filter(|l| !l.starts_with("overall:"))
        .map(|l| l.split_whitespace().next().unwrap().to_string())
        .collect();
    assert_eq!(from_text, ids(&report));
}

#[test]
fn only_restricts_the_catalog() {
    let o = braidcheck(&[
        "check",
        "sweedler",
        "--suite",
        "identities",
        "--only",
        "2.47,2.38",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(ids(&json(&o)), ["2.47", "2.38"]);
}

#[test]
fn tolerance_override_from_env_and_flag() {
    let dir = tempfile::tempdir().unwrap();
    let spec = braidcheck::spec::builtin("clifford_rank1")
        .unwrap()
        .perturbed(braidcheck::spec::TensorName::Braiding, 0, 0, 1e-6)
        .unwrap();
    let path = dir.path().join("near.bqg.json");
    braidcheck::spec::save(&spec, &path).unwrap();
    let file = path.to_str().unwrap();

    assert_eq!(
        braidcheck(&["check", file, "--suite", "axioms"])
            .status
            .code(),
        Some(1)
    );
    let loose = Command::new(env!("CARGO_BIN_EXE_braidcheck"))
        .args(["check", file, "--suite", "axioms", "--format", "json"])
        .env("BRAIDCHECK_TOL", "1e-3")
        .output()
        .unwrap();
    assert_eq!(loose.status.code(), Some(0));
    assert_eq!(json(&loose)["items"][0]["tol"], 1e-3);
    let flag = braidcheck(&["check", file, "--suite", "axioms", "--tol", "1e-3"]);
    assert_eq!(flag.status.code(), Some(0));
    assert_eq!(
        braidcheck(&["check", file, "--tol", "-1"]).status.code(),
        Some(2)
    );
}

#[test]
fn gn_file_round_trips_through_check_and_classify() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g0.bqg.json");
    let file = path.to_str().unwrap();
    let o = braidcheck(&["gn", "clifford_rank1", "--n", "0", "-o", file]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("A13.inv"));

    assert_eq!(braidcheck(&["check", file]).status.code(), Some(0));
    let c = braidcheck(&["classify", file, "--format", "json"]);
    assert_eq!(c.status.code(), Some(0));
    assert_eq!(json(&c)["majid_type"], Value::Bool(true));

    let base = json(&braidcheck(&[
        "classify",
        "clifford_rank1",
        "--format",
        "json",
    ]));
    assert_eq!(base["majid_type"], Value::Bool(false));
}

#[test]
fn gn_accepts_negative_n() {
    let o = braidcheck(&["gn", "clifford_rank1", "--n", "-2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["overall"], Value::Bool(true));
}

#[test]
fn derive_prints_tau() {
    let o = braidcheck(&["derive", "tau", "clifford_rank1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[1, 1, 1, 1]  e⊗e ← e⊗e  -1"));

    let all = json(&braidcheck(&["derive", "all", "sweedler"]));
    for key in ["tau", "tau_inv", "sigma_inv", "braided_mult"] {
        assert!(all.get(key).is_some(), "{key}");
    }
}

#[test]
fn braid_system_reports_completion() {
    let o = braidcheck(&[
        "braid-system",
        "clifford_rank1",
        "--range",
        "-1..1",
        "--depth",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["overall"], Value::Bool(true));
    assert!(v.get("completion").is_some());
    assert!(ids(&v).iter().any(|id| id.starts_with("system/A1")));
}

#[test]
fn output_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = braidcheck(&[
        "check",
        "z2",
        "--format",
        "json",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["overall"], Value::Bool(true));
}
