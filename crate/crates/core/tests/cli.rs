use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn boolnet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boolnet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn assert_valid(schema_file: &str, instance: &Value) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("schemas")
        .join(schema_file);
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    let errors: Vec<String> = validator
        .iter_errors(instance)
        .map(|e| format!("{} at {}", e, e.instance_path()))
        .collect();
    assert!(errors.is_empty(), "{schema_file}: {errors:#?}");
}

const EXAMPLE1: &str = "targets, factors\nA, C\nB, C\nC, A & B\n";

#[test]
fn nets_list() {
    let out = boolnet(&["nets", "list"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).split_whitespace().collect::<Vec<_>>(),
        ["net31", "net29", "net14", "net09", "net09_fitted"]
    );
}

#[test]
fn schedules_count() {
    let out = boolnet(&["schedules", "count", "3"]);
    assert_eq!(stdout(&out).trim(), "13");
    let out = boolnet(&["schedules", "count", "9"]);
    assert_eq!(stdout(&out).trim(), "7087261");
}

#[test]
fn attractor_table_of_net09() {
    let out = boolnet(&["attractors", "net09", "--format", "table"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let basin = text.lines().last().unwrap();
    assert_eq!(
        basin.split_whitespace().collect::<Vec<_>>(),
        ["Basin", "%", "98.44", "0.39", "0.39", "0.78"]
    );
}

#[test]
fn attractor_json_validates_and_is_thread_independent() {
    let one = boolnet(&["--threads", "1", "attractors", "net14", "--format", "json"]);
    let many = boolnet(&["--threads", "4", "attractors", "net14", "--format", "json"]);
    assert!(one.status.success());
    assert_eq!(one.stdout, many.stdout);
    let v: Value = serde_json::from_slice(&one.stdout).unwrap();
    assert_valid("attractors.schema.json", &v);
    assert_eq!(v["attractors"].as_array().unwrap().len(), 4);
}

#[test]
fn pinned_outputs_in_json() {
    let out = boolnet(&[
        "attractors",
        "net29",
        "--pin",
        "DNA_Damage=1",
        "--format",
        "json",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_valid("attractors.schema.json", &v);
    assert_eq!(v["width"], 24);
    assert_eq!(v["pinned"]["DNA_Damage"], 1);
    assert_eq!(v["outputs"].as_array().unwrap().len(), 4);
}

#[test]
fn include_outputs_widens_the_state() {
    let out = boolnet(&[
        "--max-width",
        "12",
        "attractors",
        "net29",
        "--include-outputs",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("29"));
}

#[test]
fn schedule_option_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("ex1.bn");
    std::fs::write(&file, EXAMPLE1).unwrap();
    let f = file.to_str().unwrap();
    let out = boolnet(&[
        "attractors",
        f,
        "--schedule",
        "(A)(C)(B)",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("component,"));
    assert_eq!(text.lines().count(), 1 + 3 + 1);
}

#[test]
fn basins_and_stg_files() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("b.csv");
    let dot = dir.path().join("g.dot");
    assert!(
        boolnet(&["basins", "net09", "--csv", csv.to_str().unwrap()])
            .status
            .success()
    );
    assert!(boolnet(&["stg", "net09", "--dot", dot.to_str().unwrap()])
        .status
        .success());
    let csv = std::fs::read_to_string(csv).unwrap();
    assert_eq!(csv.lines().count(), 513);
    let dot = std::fs::read_to_string(dot).unwrap();
    assert_eq!(dot.matches("->").count(), 512);
    let out = boolnet(&["stg", "net29", "--dot", "/dev/null"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn schedule_classes_of_example1() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("ex1.bn");
    std::fs::write(&file, EXAMPLE1).unwrap();
    let out = boolnet(&["schedules", "classes", file.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "class,C->A,C->B,A->C,B->C,representative"
    );
    assert_eq!(lines.count(), 9);
    let out = boolnet(&["schedules", "enumerate", file.to_str().unwrap()]);
    assert_eq!(stdout(&out).lines().count(), 10);
}

#[test]
fn schedule_guard() {
    let out = boolnet(&["schedules", "enumerate", "net31"]);
    assert_eq!(out.status.code(), Some(2));
    let out = boolnet(&["--max-arcs", "10", "schedules", "enumerate", "net09"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn circuits_json() {
    let out = boolnet(&["circuits", "net09", "--format", "json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_valid("circuits.schema.json", &v);
    let out = boolnet(&["circuits", "net31", "--negative-only", "--format", "csv"]);
    assert!(stdout(&out).lines().skip(1).all(|l| l.starts_with("-,")));
}

#[test]
fn fit_writes_candidates() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fit.json");
    let out = boolnet(&[
        "fit",
        "net09",
        "--targets",
        "BMI1,p53",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("BMI1 <- (!p53_A & !p53_K) | E2F1"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_valid("fit.schema.json", &v);
    assert_eq!(v["targets"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_reduction_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let out = boolnet(&[
        "verify-reduction",
        "net14",
        "net09",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_valid("reduction.schema.json", &v);

    let bad = dir.path().join("bad.bn");
    let text = boolnet(&["nets", "show", "net09"]).stdout;
    let text = String::from_utf8(text)
        .unwrap()
        .replace("BMI1, E2F1", "BMI1, !E2F1");
    std::fs::write(&bad, text).unwrap();
    let out = boolnet(&["verify-reduction", "net09", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn ensemble_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let out = boolnet(&[
        "ensemble",
        "net09",
        "--out-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let summary: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("summary.json")).unwrap())
            .unwrap();
    assert_valid("ensemble_summary.schema.json", &summary);
    assert_eq!(summary["total_schedules"], 10632);
    let steady = std::fs::read_to_string(dir.path().join("steady.csv")).unwrap();
    assert_eq!(
        steady.lines().nth(1).unwrap(),
        "011110001,441.19,69.43,69.43,10632"
    );
    let cycles = std::fs::read_to_string(dir.path().join("cycles.csv")).unwrap();
    assert!(cycles
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("\"100001000, 100001110\",31.50,"));
    let out = boolnet(&[
        "ensemble",
        "net14",
        "--out-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors() {
    assert_eq!(boolnet(&[]).status.code(), Some(1));
    assert_eq!(boolnet(&["attractors"]).status.code(), Some(1));
    assert_eq!(
        boolnet(&["attractors", "net09", "--format", "xml"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        boolnet(&["attractors", "net09", "--pin", "p53"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        boolnet(&["attractors", "net09", "--pin", "nope=1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        boolnet(&["--threads", "0", "nets", "list"]).status.code(),
        Some(1)
    );
    assert_eq!(boolnet(&["--help"]).status.code(), Some(0));
}
