//! End-to-end checks of the binary: exit codes, report schema, and
//! determinism of the emitted JSON.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invariant-chain"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_report(args: &[&str]) -> (Option<i32>, serde_json::Value) {
    let out = run(args);
    let stdout = String::from_utf8(out.stdout).unwrap();
    let value = serde_json::from_str(&stdout).expect("stdout is a JSON report");
    (out.status.code(), value)
}

#[test]
fn verify_passes_and_reports_schema() {
    let (code, v) = json_report(&[
        "verify", "--char", "3", "--samples", "2", "--seed", "7", "--format", "json",
    ]);
    assert_eq!(code, Some(0));
    assert_eq!(v["overall"], "pass");
    assert_eq!(v["config"]["characteristic"], "3");
    assert_eq!(v["config"]["seed"], 7);
    assert!(v["window"]["max_index"].as_u64().unwrap() >= 7);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 10);
    let mut previous_id = String::new();
    for c in checks {
        for field in ["id", "anchor", "status", "witness"] {
            assert!(c[field].is_string(), "missing field {field}");
        }
        assert!(c["runtime_ms"].is_u64());
        assert_eq!(c["status"], "pass");
        let id = c["id"].as_str().unwrap().to_string();
        assert!(id > previous_id, "checks must be sorted by id");
        previous_id = id;
    }
}

#[test]
fn reports_are_deterministic_up_to_runtimes() {
    let args = [
        "verify", "--char", "2", "--samples", "2", "--seed", "11", "--format", "json",
    ];
    let (_, mut a) = json_report(&args);
    let (_, mut b) = json_report(&args);
    for v in [&mut a, &mut b] {
        for c in v["checks"].as_array_mut().unwrap() {
            c["runtime_ms"] = serde_json::json!(0);
        }
    }
    assert_eq!(a.to_string(), b.to_string());
}

#[test]
fn negative_control_exits_one() {
    let out = run(&[
        "verify", "--char", "5", "--samples", "2", "--negative-control",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("overall: fail"));
}

#[test]
fn bad_configuration_exits_two() {
    let out = run(&["verify", "--char", "4"]);
    assert_eq!(out.status.code(), Some(2), "4 is not prime");
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("not 0 or a prime"));

    let out = run(&["verify", "--trunc", "3"]);
    assert_eq!(out.status.code(), Some(2), "truncation below 4");

    let out = run(&["certify", "--char", "2147483648"]);
    assert_eq!(out.status.code(), Some(2), "characteristic above 2^31");
}

#[test]
fn certify_emits_certificates() {
    let (code, v) = json_report(&[
        "certify", "--char", "0", "--depth", "2", "--format", "json",
    ]);
    assert_eq!(code, Some(0));
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 2);
    // each witness is itself a JSON certificate with inlined polynomials
    let cert: serde_json::Value =
        serde_json::from_str(checks[0]["witness"].as_str().unwrap()).unwrap();
    assert_eq!(cert["depth"], 1);
    assert_eq!(cert["cstar"][0]["text"], "(a2)/(a1)");
    assert_eq!(cert["residual"]["text"], "(a1*a3 - a2^2)/(a1)");
    assert!(cert["digests"]["hankel_det"].is_string());
}

#[test]
fn bench_runs_clean() {
    let (code, v) = json_report(&["bench", "--char", "5", "--format", "json"]);
    assert_eq!(code, Some(0));
    assert_eq!(v["overall"], "pass");
    assert_eq!(v["checks"].as_array().unwrap().len(), 6);
}

#[test]
fn text_format_is_default() {
    let out = run(&["verify", "--char", "2", "--samples", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("overall: pass"));
    assert!(stdout.contains("[pass] 01-fixed-points"));
}
