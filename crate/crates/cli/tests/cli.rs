//! End-to-end tests of the command-line interface: flag parsing, report
//! shapes, exit codes, error messages and byte determinism.

use std::process::{Command, Output};
use std::str::FromStr;

use cga_verma::RationalFunction;

fn cga(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cga-verma"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = cga(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn weights_reports_dimension_and_basis() {
    let v = json(&["weights", "--p", "2", "--q", "1"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["dimension"], 5);
    assert_eq!(v["basis"][0], serde_json::json!({"h": 2, "k": 1, "l": 0, "m": 0}));
}

#[test]
fn singular_at_the_first_level() {
    let v = json(&[
        "singular", "--p", "1", "--q", "0", "--d", "-1", "--r", "0", "--theta", "1",
    ]);
    assert_eq!(v["dimension"], 1);
    assert_eq!(v["matches_closed_form"], true);
    assert_eq!(v["nullspace"][0]["coefficients"][1]["coef"], "-1/2");
}

#[test]
fn singular_absence_is_a_success() {
    let out = cga(&[
        "singular", "--p", "2", "--q", "1", "--d", "-1", "--r", "0", "--theta", "1",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["dimension"], 0);
    assert_eq!(v["matches_closed_form"], false);
}

#[test]
fn generic_singular_mode_is_supported() {
    let v = json(&["singular", "--p", "1", "--q", "0", "--generic"]);
    assert_eq!(v["mode"], "generic");
    assert_eq!(v["dimension"], 0);
}

#[test]
fn jacobi_scan_passes() {
    let out = cga(&["jacobi"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["triples_checked"], 1331);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    assert_eq!(v["pass"], true);
    // The bracket table export is attached on request.
    let v = json(&["jacobi", "--emit-table"]);
    assert_eq!(v["bracket_table"]["K+,K-"]["Theta"], "-2");
}

#[test]
fn gram_det_round_trips_and_has_the_root() {
    let v = json(&["gram", "--p", "1", "--q", "0"]);
    assert_eq!(v["rational_roots_in_d"][0], "-1");
    // Every printed scalar re-parses to an equal value.
    let det = RationalFunction::from_str(v["det"].as_str().unwrap()).unwrap();
    let expected = RationalFunction::from_str("-16*θ^2*d-16*θ^2").unwrap();
    assert_eq!(det, expected);
    for row in v["matrix"].as_array().unwrap() {
        for entry in row.as_array().unwrap() {
            RationalFunction::from_str(entry.as_str().unwrap()).unwrap();
        }
    }
}

#[test]
fn gram_specialized_d_disables_root_extraction() {
    let v = json(&["gram", "--p", "1", "--q", "0", "--d", "-1", "--theta", "2"]);
    assert!(v["rational_roots_in_d"].is_null());
    assert_eq!(v["det"], "0");
}

#[test]
fn classify_branches() {
    let v = json(&["classify", "--d", "0", "--r", "0", "--theta", "1", "--pmax", "3", "--qmax", "1"]);
    assert_eq!(v["branch"], "quotient_irreducible");
    assert_eq!(v["p0"], 3);
    let v = json(&["classify", "--d", "7/3", "--r", "0", "--theta", "1", "--pmax", "2", "--qmax", "1"]);
    assert_eq!(v["branch"], "verma_irreducible");
    assert!(v["p0"].is_null());
    // The boundary convention is recorded.
    let v = json(&["classify", "--d", "-3/2", "--r", "0", "--theta", "1", "--pmax", "2", "--qmax", "1"]);
    assert_eq!(v["branch"], "verma_irreducible");
    assert_eq!(v["positive_integer_convention"], true);
    assert!(v["note"].as_str().unwrap().contains("positive-integer"));
}

#[test]
fn act_matches_the_bracket_route() {
    let v = json(&["act", "--x", "K-", "--h", "1"]);
    // K-·C|hw⟩ = |1,1,0,0⟩ - |0,0,1,0⟩.
    assert_eq!(v["result"][0]["coef"], "-1");
    assert_eq!(v["result"][0]["l"], 1);
    assert_eq!(v["result"][1]["coef"], "1");
    assert_eq!(v["result"][1]["k"], 1);
}

#[test]
fn closed_form_matches_the_table() {
    let v = json(&["closed-form", "--p", "3"]);
    assert_eq!(v["matches_coefficient_table"], true);
    assert_eq!(v["mode"], "generic");
    let v = json(&["closed-form", "--p", "2", "--d", "-1/2", "--r", "0", "--theta", "1/3"]);
    assert_eq!(v["matches_coefficient_table"], true);
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        vec!["singular", "--p", "2", "--q", "0", "--d", "-1/2", "--r", "5", "--theta", "1/3"],
        vec!["gram", "--p", "2", "--q", "0"],
        vec!["weights", "--p", "3", "--q", "-1"],
    ] {
        let a = cga(&args);
        let b = cga(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "bytes differ for {args:?}");
    }
}

#[test]
fn zero_theta_is_rejected_with_a_clear_message() {
    let out = cga(&[
        "singular", "--p", "1", "--q", "0", "--d", "-1", "--r", "0", "--theta", "0",
    ]);
    assert!(!out.status.success());
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("theta must be nonzero"), "stderr: {msg}");
}

#[test]
fn malformed_rationals_are_rejected() {
    let out = cga(&[
        "singular", "--p", "1", "--q", "0", "--d", "abc", "--r", "0", "--theta", "1",
    ]);
    assert!(!out.status.success());
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("rational"), "stderr: {msg}");
    let out = cga(&["singular", "--p", "1", "--q", "0", "--d", "1/0", "--r", "0", "--theta", "1"]);
    assert!(!out.status.success());
}

#[test]
fn unknown_commands_fail() {
    let out = cga(&["frobnicate"]);
    assert!(!out.status.success());
}

#[test]
fn incomplete_parameter_points_are_rejected() {
    let out = cga(&["singular", "--p", "1", "--q", "0", "--d", "-1"]);
    assert!(!out.status.success());
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("--generic"), "stderr: {msg}");
}

#[test]
fn text_format_and_file_output() {
    let dir = std::env::temp_dir().join("cga-verma-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("weights.json");
    let out = cga(&[
        "weights", "--p", "1", "--q", "0", "--output", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["dimension"], 2);

    let out = cga(&["weights", "--p", "1", "--q", "0", "--format", "text"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("dimension 2"), "text: {text}");
}

#[test]
fn verify_theorems_passes_on_a_small_grid() {
    let out = Command::new(env!("CARGO_BIN_EXE_cga-verma"))
        .args(["verify-theorems", "--pmax", "3", "--qmax", "2"])
        .env("CGA_VERMA_THREADS", "2")
        .output()
        .expect("binary runs");
    assert!(
        out.status.success(),
        "verify failed: {}",
        String::from_utf8_lossy(&out.stdout)
    );
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["criteria"].as_array().unwrap().len(), 7);
}
