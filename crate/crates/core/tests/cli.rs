use std::process::{Command, Output};

use centroskew::report::{CommandReport, Status};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_centroskew"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(&all);
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn show_payload_schema() {
    let v = json(&["show", "r", "3"]);
    assert_eq!(v["command"], "show r");
    assert_eq!(v["n"], 3);
    assert_eq!(v["status"], "pass");
    assert!(v.get("seed").is_none());
    assert_eq!(v["payload"]["rows"], 3);
    assert_eq!(v["payload"]["cols"], 3);
    let entries = v["payload"]["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 9);
    assert_eq!(entries[0], serde_json::json!([-1.0, 0.0]));
    assert_eq!(entries[1], serde_json::json!([1.0, 0.0]));
}

#[test]
fn verify_report_round_trips() {
    let out = run(&["verify", "unitary", "2..5", "--seed", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: CommandReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.status, Status::Pass);
    assert_eq!(report.seed, Some(3));
    assert_eq!(report.n, 5);
    assert!(report.payload.is_none());
    assert!(!report.metrics.is_empty());
    assert!(report.metrics.iter().all(|m| m.value <= m.bound));
}

#[test]
fn seeds_change_sampled_metrics() {
    let a = run(&["verify", "relation", "4..4", "--seed", "1", "--format", "json"]);
    let b = run(&["verify", "relation", "4..4", "--seed", "2", "--format", "json"]);
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn spectrum_with_vectors() {
    let v = json(&["spectrum", "scirc", "1,2,3", "--vectors"]);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["payload"]["rows"], 3);
    assert_eq!(v["payload"]["cols"], 4);
    let v = json(&["spectrum", "r-odd", "4"]);
    assert_eq!(v["payload"]["cols"], 1);
}

#[test]
fn csv_and_pretty_formats() {
    let out = run(&["show", "pi", "3", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("name,value,bound\n"));
    assert!(text.contains("0,1,0\n"));
    let out = run(&["verify", "nilpotent", "2..3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS"));
}

#[test]
fn usage_errors_go_to_stderr() {
    let out = run(&["show", "fourier", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}
