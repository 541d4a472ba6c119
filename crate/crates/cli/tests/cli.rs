use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gyrograph"))
        .args(args)
        .env_remove("GYROGRAPH_DATA_DIR")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn verify_paper_default_range_matches() {
    let out = run(&["verify-paper"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["summary"]["mismatched"], 0);
    let corrected: Vec<&str> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["verdict"] == "paper-typo-corrected")
        .map(|e| e["id"].as_str().unwrap())
        .collect();
    assert!(
        corrected.iter().all(|id| id.contains("charpoly")),
        "{corrected:?}"
    );
    assert!(corrected.contains(&"n3.charpoly") && corrected.contains(&"n4.charpoly"));
}

#[test]
fn verify_paper_is_deterministic() {
    let a = run(&["verify-paper", "--n", "3..4"]);
    let b = run(&["verify-paper", "--n", "3..4"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_paper_examples_reports_the_isomorphic_tables() {
    let out = run(&["verify-paper", "--examples"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let entry = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["id"] == "examples.g8-m1.gyrogroups")
        .unwrap();
    assert_eq!(entry["verdict"], "mismatch");
}

#[test]
fn verify_paper_beyond_detour_bound_is_not_evaluated() {
    let out = run(&["verify-paper", "--n", "6"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["verify-paper", "--n", "6", "--detour-bound", "64"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn invariants_of_gn3() {
    let out = run(&[
        "invariants",
        "--gn",
        "3",
        "--hosoya",
        "--metric-dimension",
        "--rs-hosoya",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["hosoya"]["text"], "18x^2 + 10x + 8");
    assert_eq!(v["rs_hosoya"]["text"], "3x^12 + 4x^11 + 3x^10");
    assert_eq!(v["metric_dimension"]["psi"], 5);
    assert_eq!(v["structure"]["matches_gn_shape"], true);
}

#[test]
fn invariants_all_for_a_bundled_table() {
    let out = run(&["invariants", "--table", "k1.csv", "--all"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = json(&out);
    assert_eq!(v["order"], 8);
    assert_eq!(v["planarity"]["certificate_verified"], true);
}

#[test]
fn detour_refused_above_bound() {
    let out = run(&["invariants", "--gn", "6", "--detour"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds the bound"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["build", "--gn", "2"]).status.code(), Some(2));
    assert_eq!(
        run(&["build", "--table", "/no/such/table.csv"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["verify-paper", "--n", "x"]).status.code(), Some(2));
    assert_eq!(run(&["build"]).status.code(), Some(2));
}

#[test]
fn build_writes_a_table_that_reloads() {
    let dir = std::env::temp_dir().join(format!("gyrograph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g3.json");
    let out = run(&["build", "--gn", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["axioms"]["is_group"], false);
    let again = run(&["build", "--table", path.to_str().unwrap()]);
    assert_eq!(again.status.code(), Some(0));
    assert_eq!(json(&again)["table"], json(&out)["table"]);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn export_round_trips_through_graph_input() {
    let dir = std::env::temp_dir().join(format!("gyrograph-export-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pg4.json");
    let out = run(&[
        "export",
        "--gn",
        "4",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let inv = run(&["invariants", "--graph", path.to_str().unwrap(), "--hosoya"]);
    assert_eq!(json(&inv)["hosoya"]["text"], "84x^2 + 36x + 16");
    let dot = run(&["export", "--gn", "3", "--format", "dot"]);
    let dot = String::from_utf8(dot.stdout).unwrap();
    assert!(dot.starts_with("graph") && dot.contains("0 -- 4"));
    std::fs::remove_dir_all(&dir).unwrap();
}
