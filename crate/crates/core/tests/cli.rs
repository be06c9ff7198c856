//! End-to-end runs of the `emlab` binary.

use std::fs;
use std::process::{Command, Output};

fn emlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_emlab"))
        .args(args)
        .output()
        .expect("spawn emlab")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_writes_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = emlab(&[
        "verify",
        "--ids",
        "EM,BARROW,DNP",
        "--samples",
        "100000",
        "--seed",
        "1",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(json["schema_version"], 1);
    assert_eq!(json["passed"], true);
    let records = json["suites"][0]["records"].as_array().unwrap();
    let ids: Vec<&str> = records.iter().map(|r| r["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["EM", "BARROW", "DNP"]);
    for r in records {
        assert_eq!(r["samples"], 100_000);
        assert_eq!(r["violations"], 0);
    }
}

#[test]
fn both_format_writes_csv_beside_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = emlab(&[
        "verify",
        "--ids",
        "EM",
        "--samples",
        "200",
        "--shape",
        "all",
        "--format",
        "both",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let csv = fs::read_to_string(dir.path().join("r.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert!(lines[0].starts_with("id,shape_mode,samples"));
    assert_eq!(lines.len(), 4);
    assert!(lines[2].starts_with("EM,near_degenerate,200,"));
}

#[test]
fn catalog_lists_all_ids() {
    let o = emlab(&["catalog", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 26);
    assert!(text.lines().any(|l| l.starts_with("DARGUERON,")));
}

#[test]
fn unknown_id_is_a_usage_error() {
    let o = emlab(&["verify", "--ids", "NOPE"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("NOPE"), "{err}");
    assert!(err.contains("usage"), "{err}");
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let o = emlab(&["verify", "--bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn flags_override_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    fs::write(
        &cfg,
        r#"{"samples": 50, "seed": 9, "ids": ["EM", "DNP"], "weight-std": 0.25}"#,
    )
    .unwrap();
    let o = emlab(&["verify", "--config", cfg.to_str().unwrap(), "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let sampler = &json["config"]["sampler"];
    assert_eq!(sampler["seed"], 3);
    assert_eq!(sampler["n_samples"], 50);
    assert_eq!(sampler["weight_log_std"].as_f64(), Some(0.25));
    assert_eq!(json["config"]["ids"], serde_json::json!(["EM", "DNP"]));
}

#[test]
fn unknown_config_key_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    fs::write(&cfg, r#"{"sample": 50}"#).unwrap();
    let o = emlab(&["verify", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn invalid_tolerance_is_a_usage_error() {
    let o = emlab(&["verify", "--tol", "-1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn tighten_reports_canonical_minimum() {
    let o = emlab(&[
        "tighten",
        "--ids",
        "EM,BARROW_CHAIN_A",
        "--starts",
        "4",
        "--probes",
        "50",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let em = &json["tightness"][0];
    assert_eq!(em["id"], "EM");
    assert!(em["min_slack"].as_f64().unwrap() <= 1e-6);
    assert!(em["distance_to_canonical"].as_f64().unwrap() <= 1e-3);
    assert_eq!(json["equality"][1]["locus"], "circumcenter");
    assert_eq!(json["equality"][1]["passed"], true);
}

#[test]
fn identities_pass() {
    let o = emlab(&["identities", "--samples", "2000", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("check,value,tolerance,passed"));
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")), "{text}");
}

#[test]
fn fixture_prints_reference_tables() {
    let o = emlab(&["fixture"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("right triangle"));
    assert!(text.contains("equilateral"));
    let tangents = text
        .lines()
        .find(|l| l.starts_with("R_A, R_B, R_C"))
        .unwrap();
    let v: Vec<f64> = tangents
        .split_whitespace()
        .skip(3)
        .map(|f| f.parse().unwrap())
        .collect();
    assert!((v[0] - 1.4).abs() < 1e-12 && (v[1] - 3.0).abs() < 1e-12 && (v[2] - 2.0).abs() < 1e-12);
    assert_eq!(text.lines().filter(|l| l.starts_with("LEMMA_A")).count(), 2);
}

#[test]
fn help_exits_zero() {
    let o = emlab(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verify"));
}
