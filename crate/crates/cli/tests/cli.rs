use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gordian"))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child =
        bin().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn json(o: &Output) -> Value {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn trefoil_permutation_number() {
    let v = json(&run(&["pnum", "--knot", "3_1"]));
    assert_eq!(v["p"], 3);
    assert_eq!(v["lower_bound_only"], false);
}

#[test]
fn linking_set_from_pd_file() {
    let v = json(&run(&["lk", "--pd", fixture("8_21.json").to_str().unwrap()]));
    assert_eq!(v["lk"], serde_json::json!(["4"]));
}

#[test]
fn built_diagram_pipes_into_color() {
    let built = run(&["build", "granny"]);
    let v = json(&run_stdin(&["color", "--group", "S4"], &built.stdout));
    assert!(v["count"].as_u64().unwrap() >= 1);
}

#[test]
fn build_output_round_trips_through_a_file() {
    let built = run(&["build", "trefoil-sum", "2"]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sum.json");
    std::fs::write(&path, &built.stdout).unwrap();
    let v = json(&run(&["pnum", "--pd", path.to_str().unwrap()]));
    assert_eq!(v["p"], 4);
    let again = run_stdin(&["build", "trefoil-sum", "2"], b"");
    assert_eq!(again.stdout, built.stdout);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["color", "--group", "S3", "--all", "--knot", "square"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["lk", "--knot", "P(3,3,3)"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn malformed_input_exits_two() {
    let o = run_stdin(&["pnum"], br#"{"crossings": [[0, 1, 2]], "signs": [1]}"#);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(run(&["pnum", "--pd", "/nonexistent/knot.json"]).status.code(), Some(2));
}

#[test]
fn exhausted_budget_exits_three() {
    let o = run(&["pnum", "--knot", "whitehead-2", "--node-limit", "10"]);
    assert_eq!(o.status.code(), Some(3));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["lower_bound_only"], true);
}

#[test]
fn section_rewrite_from_files() {
    let s = |n: &str| fixture(&format!("sections/{n}"));
    let o = run(&[
        "rewrite",
        "--pd",
        s("case2b_k1.json").to_str().unwrap(),
        "--section",
        s("case2b_section.json").to_str().unwrap(),
        "--coloring",
        s("case2b_coloring.json").to_str().unwrap(),
    ]);
    let v = json(&o);
    assert_eq!(v["case"], "case2b");
}
