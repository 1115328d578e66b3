//! End-to-end checks of the command line: exit codes, report shapes,
//! and byte determinism of the JSON output.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn qlie() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qlie"))
}

fn run(args: &[&str]) -> Output {
    qlie().args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("process exited")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn stderr_text(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn build_entry(dir: &Path, id: &str, mode: &str) -> std::path::PathBuf {
    let path = dir.join(format!("{id}.json"));
    let out = run(&[
        "catalogue",
        "build",
        id,
        "--mode",
        mode,
        "--out",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0, "build {id}: {}", stderr_text(&out));
    path
}

#[test]
fn build_then_verify_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = build_entry(dir.path(), "su2xX3", "real");
    let out = run(&["verify", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&out), 0, "{}", stderr_text(&out));
    let report = stdout_json(&out);
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["command"], "verify");
    assert_eq!(report["passed"], true);
    let checks = report["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["passed"] == true));
}

#[test]
fn json_reports_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let path = build_entry(dir.path(), "dx-vv", "closed");
    let args = ["verify", path.to_str().unwrap(), "--format", "json"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout, "verify output drifted between runs");
    let again = build_entry(dir.path(), "dx-vv", "closed");
    assert_eq!(
        fs::read(&path).unwrap(),
        fs::read(&again).unwrap(),
        "built files drifted between runs"
    );
}

#[test]
fn malformed_scalar_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(
        &path,
        r#"{"name":"bad","dim":2,"basis":["a","b"],
           "brackets":[[0,1,0,"1/0"]],
           "form":[["0","1"],["1","0"]],"mode":"closed"}"#,
    )
    .unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr_text(&out).contains("qlie:"), "{}", stderr_text(&out));
    assert!(stderr_text(&out).contains("1/0"), "{}", stderr_text(&out));
}

#[test]
fn unknown_field_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("typo.json");
    fs::write(
        &path,
        r#"{"name":"typo","dim":1,"basis":["e"],"bracketz":[],
           "form":[["1"]],"mode":"closed"}"#,
    )
    .unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr_text(&out).contains("bracketz"), "{}", stderr_text(&out));
}

#[test]
fn broken_bracket_axioms_fail_verification() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nonlie.json");
    // Schema-valid table that violates the Jacobi identity.
    fs::write(
        &path,
        r#"{"name":"nonlie","dim":3,"basis":["x","y","z"],
           "brackets":[[0,1,2,"1"],[0,2,0,"1"],[1,2,1,"1"]],
           "form":[["1","0","0"],["0","1","0"],["0","0","1"]],
           "mode":"closed"}"#,
    )
    .unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("bracket-axioms"), "{text}");
    assert!(text.contains("FAIL"), "{text}");
}

#[test]
fn unknown_catalogue_id_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = run(&["catalogue", "build", "nosuch", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(!path.exists(), "no file should be written on failure");
}

#[test]
fn shared_identifiers_need_an_explicit_mode() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = run(&["catalogue", "build", "dx-vv", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr_text(&out).contains("both rosters"), "{}", stderr_text(&out));
    let out = run(&[
        "catalogue",
        "build",
        "dx-vv",
        "--mode",
        "real",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr_text(&out));
}

#[test]
fn decompose_needs_a_designated_triple() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("abelian.json");
    fs::write(
        &path,
        r#"{"name":"a1","dim":1,"basis":["e"],"brackets":[],
           "form":[["1"]],"mode":"closed"}"#,
    )
    .unwrap();
    let out = run(&["decompose", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr_text(&out).contains("triple"), "{}", stderr_text(&out));
}

#[test]
fn decompose_reports_module_content() {
    let dir = tempfile::tempdir().unwrap();
    let path = build_entry(dir.path(), "d4", "closed");
    let out = run(&["decompose", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&out), 0, "{}", stderr_text(&out));
    let report = stdout_json(&out);
    assert_eq!(report["passed"], true);
    let mut seen: Vec<(String, u64)> = report["summands"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| {
            (
                s["label"].as_str().unwrap().to_string(),
                s["multiplicity"].as_u64().unwrap(),
            )
        })
        .collect();
    seen.sort();
    assert_eq!(
        seen,
        vec![("V(2)".to_string(), 2), ("V(4)".to_string(), 1)]
    );
}

#[test]
fn identify_matches_the_catalogue_entry() {
    let dir = tempfile::tempdir().unwrap();
    let path = build_entry(dir.path(), "su2xX3", "real");
    let out = run(&["identify", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&out), 0, "{}", stderr_text(&out));
    let report = stdout_json(&out);
    assert_eq!(report["matches"], serde_json::json!(["su2xX3"]));
}

#[test]
fn forms_sweeps_signatures_with_custom_samples() {
    let dir = tempfile::tempdir().unwrap();
    let path = build_entry(dir.path(), "su2", "real");
    let out = run(&[
        "forms",
        path.to_str().unwrap(),
        "--samples",
        "-2,-1,1/2",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr_text(&out));
    let report = stdout_json(&out);
    assert_eq!(report["form_space_dim"], 1);
    let signatures = report["signatures"].as_array().unwrap();
    assert!(!signatures.is_empty());
}

#[test]
fn forms_rejects_an_empty_sample_list() {
    let dir = tempfile::tempdir().unwrap();
    let path = build_entry(dir.path(), "su2", "real");
    let out = run(&["forms", path.to_str().unwrap(), "--samples", ""]);
    assert_eq!(code(&out), 2);
}

#[test]
fn timing_lands_on_stderr_only_in_text_mode() {
    let dir = tempfile::tempdir().unwrap();
    let path = build_entry(dir.path(), "sl2", "closed");
    let text = run(&["verify", path.to_str().unwrap()]);
    assert!(stderr_text(&text).contains("elapsed:"), "{}", stderr_text(&text));
    let json = run(&["verify", path.to_str().unwrap(), "--format", "json"]);
    assert!(!stderr_text(&json).contains("elapsed:"), "{}", stderr_text(&json));
    stdout_json(&json);
}

#[test]
fn list_covers_both_rosters() {
    let both = stdout_json(&run(&["catalogue", "list", "--format", "json"]));
    assert_eq!(both["entries"].as_array().unwrap().len(), 48);
    let closed = stdout_json(&run(&["catalogue", "list", "--mode", "closed", "--format", "json"]));
    assert_eq!(closed["entries"].as_array().unwrap().len(), 14);
    let real = stdout_json(&run(&["catalogue", "list", "--mode", "real", "--format", "json"]));
    assert_eq!(real["entries"].as_array().unwrap().len(), 34);
}
