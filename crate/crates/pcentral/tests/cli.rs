//! Exit-code contract and file-format behaviour of the `pcentral` binary:
//! 0 success, 1 mathematical validation failure, 2 malformed input.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pcentral"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

fn stdout_json(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).expect("stdout is a JSON document")
}

#[test]
fn decompose_symbol_presentation() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("dec.json");
    let result = run(&[
        "decompose",
        "--input",
        fixture("pres_symbol.json").to_str().unwrap(),
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&result), 0, "{result:?}");

    let text = std::fs::read_to_string(&out).unwrap();
    let value: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["format_version"], 1);
    assert_eq!(value["m"], 1);
    assert_eq!(value["degree"], 3);
    assert_eq!(value["symbols"][0][0][0], "2/1");
    assert_eq!(value["symbols"][0][1][0], "5/1");
    assert_eq!(value["certificate"]["relations_checked"], 1);

    // emitted document is byte-stable under reparse + reserialize
    let dec = pcentral::clifford::Decomposition::from_json(&value).unwrap();
    let mut reserialized = dec.to_json();
    if let Value::Object(map) = &mut reserialized {
        map.insert("format_version".into(), Value::Number(1.into()));
    }
    assert_eq!(pcentral::json::to_canonical_string(&reserialized), text);
}

#[test]
fn decompose_n1_presentation() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("dec.json");
    let result = run(&[
        "decompose",
        "--input",
        fixture("pres_n1.json").to_str().unwrap(),
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&result), 0);
    let value: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(value["m"], 0);
    assert_eq!(value["degree"], 1);
    assert_eq!(value["commutative"][0]["exponents"], serde_json::json!([1]));
}

#[test]
fn decompose_kernel_example_reports_commutative_part() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("dec.json");
    let result = run(&[
        "decompose",
        "--input",
        fixture("pres_n3_kernel.json").to_str().unwrap(),
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&result), 0);
    let value: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(value["m"], 1);
    assert_eq!(value["degree"], 3);
    // kernel direction (1,2,1), cube 2·3²·5 = 90
    assert_eq!(
        value["commutative"][0]["exponents"],
        serde_json::json!([1, 2, 1])
    );
    assert_eq!(value["commutative"][0]["pth_power"][0], "90/1");
}

#[test]
fn decompose_rejects_non_skew_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("dec.json");
    let result = run(&[
        "decompose",
        "--input",
        fixture("pres_nonskew.json").to_str().unwrap(),
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&result), 1);
    let stderr = String::from_utf8_lossy(&result.stderr);
    // the offending entry coordinates are named
    assert!(stderr.contains("(0,1)"), "stderr: {stderr}");
    assert!(!out.exists());
}

#[test]
fn decompose_rejects_p2() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("dec.json");
    let result = run(&[
        "decompose",
        "--input",
        fixture("pres_p2.json").to_str().unwrap(),
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&result), 1);
}

#[test]
fn decompose_parse_failures_exit_2() {
    for name in ["pres_badjson.json", "pres_badschema.json"] {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("dec.json");
        let result = run(&[
            "decompose",
            "--input",
            fixture(name).to_str().unwrap(),
            "--output",
            out.to_str().unwrap(),
        ]);
        assert_eq!(exit_code(&result), 2, "fixture {name}");
    }
}

#[test]
fn decompose_missing_file_exits_2() {
    let result = run(&[
        "decompose",
        "--input",
        "/nonexistent.json",
        "--output",
        "/tmp/x.json",
    ]);
    assert_eq!(exit_code(&result), 2);
}

#[test]
fn graph_analyze_cycle_tournament() {
    let result = run(&[
        "graph",
        "analyze",
        "--input",
        fixture("tour_cycle3.json").to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&result), 0);
    let report = stdout_json(&result);
    assert_eq!(report["format_version"], 1);
    assert_eq!(report["admissible"], true);
    assert_eq!(report["prop1"]["ok"], true);
    assert_eq!(report["prop2"]["ok"], true);
    assert_eq!(report["prop3"]["ok"], true);
    assert_eq!(report["triangles"], serde_json::json!([[0, 1, 2]]));

    // emitted report parses back into an equal value
    let parsed = pcentral::tournament::PropositionReport::from_json(&report).unwrap();
    assert!(parsed.admissible());
    assert_eq!(parsed.to_json()["triangles"], report["triangles"]);
}

#[test]
fn graph_analyze_prop1_violation_exits_1_with_witness() {
    let result = run(&[
        "graph",
        "analyze",
        "--input",
        fixture("tour_prop1.json").to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&result), 1);
    let report = stdout_json(&result);
    assert_eq!(report["prop1"]["ok"], false);
    assert_eq!(
        report["prop1"]["witness"]["cycle"],
        serde_json::json!([0, 1, 2])
    );
    assert_eq!(report["prop1"]["witness"]["vertex"], 3);
}

#[test]
fn graph_analyze_accepts_presentation_input() {
    let result = run(&[
        "graph",
        "analyze",
        "--input",
        fixture("pres_symbol.json").to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&result), 0);
    let report = stdout_json(&result);
    assert_eq!(report["admissible"], true);
    assert_eq!(report["triangles"], serde_json::json!([]));
}

#[test]
fn graph_analyze_rejects_commuting_presentation() {
    let result = run(&[
        "graph",
        "analyze",
        "--input",
        fixture("pres_commuting.json").to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&result), 1);
    let stderr = String::from_utf8_lossy(&result.stderr);
    assert!(stderr.contains("commute"), "stderr: {stderr}");
}

#[test]
fn graph_diminish_transitive_is_unchanged() {
    let result = run(&[
        "graph",
        "diminish",
        "--input",
        fixture("tour_transitive.json").to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&result), 0);
    let out = stdout_json(&result);
    assert_eq!(out["removed"], serde_json::json!([]));
    assert_eq!(out["kept"], serde_json::json!([0, 1, 2, 3]));
    let reduced = pcentral::Tournament::from_json(&out["tournament"]).unwrap();
    let original: Value =
        serde_json::from_str(&std::fs::read_to_string(fixture("tour_transitive.json")).unwrap())
            .unwrap();
    assert_eq!(reduced, pcentral::Tournament::from_json(&original).unwrap());
}

#[test]
fn graph_diminish_cycle_removes_vertex() {
    let result = run(&[
        "graph",
        "diminish",
        "--input",
        fixture("tour_cycle3.json").to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&result), 0);
    let out = stdout_json(&result);
    assert_eq!(out["removed"], serde_json::json!([0]));
    assert_eq!(out["kept"], serde_json::json!([1, 2]));
    assert_eq!(out["tournament"]["n"], 2);

    // emitted outcome parses back into an equal value
    let parsed = pcentral::tournament::DiminishOutcome::from_json(&out).unwrap();
    assert_eq!(parsed.removed, vec![0]);
    assert!(parsed.tournament.triangles().is_empty());
}

#[test]
fn graph_diminish_rejects_non_admissible() {
    let result = run(&[
        "graph",
        "diminish",
        "--input",
        fixture("tour_prop1.json").to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&result), 1);
}

#[test]
fn graph_rejects_invalid_tournaments() {
    // orientation given twice: a well-formed document failing validation
    let result = run(&[
        "graph",
        "analyze",
        "--input",
        fixture("tour_duplicate_edge.json").to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&result), 1);
    // an edge that is not a pair: malformed document
    let result = run(&[
        "graph",
        "analyze",
        "--input",
        fixture("tour_malformed.json").to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&result), 2);
}

#[test]
fn cubic_solve_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("solutions.jsonl");
    let result = run(&[
        "cubic",
        "solve",
        "--gamma",
        "1",
        "--beta",
        "1",
        "--bound",
        "1",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&result), 0);
    let text = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    // (6 units + zero)² parameter pairs
    assert_eq!(lines.len(), 49);
    for line in &lines {
        let value: Value = serde_json::from_str(line).unwrap();
        assert_eq!(value["verified"], true);
        assert_eq!(value["format_version"], 1);
    }

    let verify = run(&["cubic", "verify", "--in", out.to_str().unwrap()]);
    assert_eq!(exit_code(&verify), 0);
    let stdout = String::from_utf8_lossy(&verify.stdout);
    assert!(stdout.contains("verified 49 solutions"), "stdout: {stdout}");
}

#[test]
fn cubic_solve_accepts_eisenstein_literals() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("solutions.jsonl");
    let result = run(&[
        "cubic",
        "solve",
        "--gamma",
        "2 - 1*r",
        "--beta",
        "-3*r",
        "--bound",
        "0",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&result), 0);
    let text = std::fs::read_to_string(&out).unwrap();
    let value: Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    assert_eq!(value["gamma"]["a"], "2");
    assert_eq!(value["gamma"]["b"], "-1");
    assert_eq!(value["beta"]["b"], "-3");
    assert_eq!(value["degenerate"], true);

    let bad = run(&[
        "cubic",
        "solve",
        "--gamma",
        "2+!",
        "--beta",
        "1",
        "--bound",
        "0",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&bad), 2);
}

#[test]
fn cubic_verify_reports_first_failing_line() {
    let result = run(&[
        "cubic",
        "verify",
        "--in",
        fixture("solutions_corrupt.jsonl").to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&result), 1);
    let stderr = String::from_utf8_lossy(&result.stderr);
    assert!(stderr.contains("line 2"), "stderr: {stderr}");
}

#[test]
fn cubic_verify_malformed_line_exits_2() {
    let result = run(&[
        "cubic",
        "verify",
        "--in",
        fixture("solutions_badjson.jsonl").to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&result), 2);
    let stderr = String::from_utf8_lossy(&result.stderr);
    assert!(stderr.contains("line 2"), "stderr: {stderr}");
}

#[test]
fn cubic_identity_prints_agreement() {
    let result = run(&["cubic", "identity"]);
    assert_eq!(exit_code(&result), 0);
    let stdout = String::from_utf8_lossy(&result.stdout);
    assert!(stdout.contains("all agree"), "stdout: {stdout}");
    assert!(!stdout.contains("MISMATCH"));
}

#[test]
fn unknown_arguments_exit_2() {
    let result = run(&["decompose", "--frobnicate"]);
    assert_eq!(exit_code(&result), 2);
}
