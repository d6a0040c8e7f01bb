use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn hkg(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hkg"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const HERMITIAN: &str = r#"{"p":5,"exponents":[3,1],"jumps":[1,6]}"#;

#[test]
fn analyze_from_stdin_as_json() {
    let out = hkg(&["analyze", "--format", "json", "--verify"], HERMITIAN);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = json(&out);
    assert_eq!(r["genus"], 10);
    assert_eq!(r["semigroup"]["conductor"], 20);
    assert_eq!(r["upper_jumps"]["values"], serde_json::json!(["1", "6/5"]));
    assert_eq!(r["structural_case"]["case"], "d1");
    assert_eq!(r["oracle_verified"], true);
}

#[test]
fn analyze_from_file_as_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("as.json");
    std::fs::write(&path, r#"{"p":5,"exponents":[1],"jumps":[7]}"#).unwrap();
    let out = hkg(&["analyze", path.to_str().unwrap(), "--m", "1"], "");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("frobenius                   23"), "{text}");
    assert!(text.contains("Case d2"));
}

#[test]
fn exit_codes() {
    let parse = hkg(&["analyze"], r#"{"p":4,"exponents":[1],"jumps":[7]}"#);
    assert_eq!(parse.status.code(), Some(2));
    let unknown_key = hkg(&["analyze"], r#"{"p":5,"exponents":[1],"jumps":[7],"x":0}"#);
    assert_eq!(unknown_key.status.code(), Some(2));
    let invalid = hkg(&["analyze"], r#"{"p":5,"exponents":[1],"jumps":[1]}"#);
    assert_eq!(invalid.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&invalid.stderr).contains("g = 0"));
    let warned = hkg(&["analyze", "--warn-only"], r#"{"p":5,"exponents":[1],"jumps":[1]}"#);
    assert_eq!(warned.status.code(), Some(0));
    let bad_family = hkg(&["catalog", "hermitian", "q=6"], "");
    assert_eq!(bad_family.status.code(), Some(2));
    let unknown = hkg(&["catalog", "klein"], "");
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn catalog_reports() {
    let out = hkg(&["catalog", "hermitian", "q=5", "--format", "json"], "");
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["genus"], 10);
    assert_eq!(r["big_action"]["is_big"], true);
    let out = hkg(&["catalog", "artin-schreier", "p=5", "m=7", "--format", "json", "--q", "5"], "");
    let r = json(&out);
    assert_eq!(r["semigroup"]["minimal_generators"], serde_json::json!([5, 7]));
    assert_eq!(r["maximal_compat"][0]["q_and_successor_are_poles"], false);
}

#[test]
fn jumps_both_directions() {
    let up = hkg(
        &["jumps", "--direction", "lower-to-upper", "--p", "5", "--exponents", "3,1", "--values", "1,6"],
        "",
    );
    assert_eq!(String::from_utf8(up.stdout).unwrap().trim(), "1, 6/5");
    let down = hkg(
        &["jumps", "--direction", "upper-to-lower", "--p", "5", "--exponents", "3,1", "--values", "1,6/5"],
        "",
    );
    assert_eq!(String::from_utf8(down.stdout).unwrap().trim(), "1, 6");
    let single = hkg(
        &["jumps", "--direction", "lower-to-upper", "--p", "7", "--exponents", "1", "--values", "9"],
        "",
    );
    assert_eq!(String::from_utf8(single.stdout).unwrap().trim(), "9");
    let bad = hkg(
        &["jumps", "--direction", "upper-to-lower", "--p", "5", "--exponents", "3,1", "--values", "1,11/10"],
        "",
    );
    assert_eq!(bad.status.code(), Some(3));
}

#[test]
fn basis_subcommand() {
    let out = hkg(&["basis", "--m", "1,2", "--format", "json"], HERMITIAN);
    assert_eq!(out.status.code(), Some(0));
    let blocks = json(&out);
    assert_eq!(blocks[0]["basis"]["pole_numbers"], serde_json::json!([0, 5, 6, 10, 11, 12, 15, 16, 17, 18]));
    assert_eq!(blocks[1]["basis"]["dimension"], 27);
}

#[test]
fn batch_mode() {
    let docs = format!(r#"[{HERMITIAN}, {{"p":5,"exponents":[1],"jumps":[7]}}, {{"p":5,"exponents":[1],"jumps":[1]}}]"#);
    let out = hkg(&["analyze", "--batch", "--format", "json"], &docs);
    assert_eq!(out.status.code(), Some(3));
    let results = json(&out);
    assert_eq!(results[0]["report"]["genus"], 10);
    assert_eq!(results[1]["report"]["genus"], 12);
    assert_eq!(results[2]["error"]["kind"], "validation");
}

#[test]
fn json_report_round_trips() {
    let out = hkg(&["analyze", "--format", "json"], HERMITIAN);
    let text = String::from_utf8(out.stdout).unwrap();
    let report: hkg_core::report::InvariantReport = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&report).unwrap().trim(), text.trim());
}
