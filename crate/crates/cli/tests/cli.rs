//! End-to-end checks of the command-line surface: documented outputs,
//! exit codes, JSON schema, and output determinism.

use std::process::{Command, Output};

fn sigchar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sigchar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = sigchar(args);
    assert!(
        out.status.success(),
        "expected success for {args:?}, stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .trim_end()
        .to_string()
}

#[test]
fn documented_outputs() {
    assert_eq!(
        stdout(&["rca", "closed", "--shape", "3,1", "--c", "-7/8", "--format", "json"]),
        r#"{"numerator":[3,-2,-2,-2],"denominator":"(1-t)^4"}"#
    );
    assert_eq!(
        stdout(&[
            "hecke",
            "sig",
            "--shape",
            "2,2,1",
            "--variant",
            "normalized",
            "--format",
            "text"
        ]),
        "2 + 2*a3 + a2*a4"
    );
    assert_eq!(
        stdout(&["rca", "limit", "--shape", "1,1", "--format", "json"]),
        r#"{"numerator":[1],"denominator":[1,0,1]}"#
    );
}

#[test]
fn degenerate_parameter_exits_2_with_diagnostic() {
    let out = sigchar(&[
        "rca", "series", "--shape", "1,1", "--c", "-1/2", "--degree", "4",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.contains("degenerate parameter c = -1/2 (excluded point r/m, m=2)"),
        "stderr: {err}"
    );
    assert!(out.stdout.is_empty());
}

#[test]
fn invalid_inputs_exit_2() {
    for args in [
        vec![
            "rca", "series", "--shape", "2,3", "--c", "-1/3", "--degree", "2",
        ],
        vec![
            "rca", "series", "--shape", "1,1", "--c", "x", "--degree", "2",
        ],
        vec![
            "rca", "series", "--shape", "1,1", "--c", "1/5", "--degree", "2",
        ],
        vec!["hecke", "sig", "--shape", "2,1", "--variant", "weird"],
        vec!["nonsense"],
    ] {
        let out = sigchar(&args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
}

#[test]
fn positive_parameter_hints_at_conjugate_shape() {
    let out = sigchar(&["rca", "closed", "--shape", "2,1", "--c", "1/5"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("conjugate shape"), "stderr: {err}");
}

#[test]
fn evaluated_signatures_and_oracle() {
    assert_eq!(
        stdout(&[
            "hecke",
            "sig",
            "--shape",
            "3,1",
            "--at",
            "-7/8",
            "--variant",
            "raw"
        ]),
        "-3"
    );
    assert_eq!(
        stdout(&[
            "hecke",
            "sig",
            "--shape",
            "3,1",
            "--at",
            "-7/8",
            "--variant",
            "normalized"
        ]),
        "3"
    );
    assert_eq!(
        stdout(&["hecke", "oracle", "--shape", "3,1", "--at", "-7/8"]),
        "-3"
    );
    assert_eq!(
        stdout(&["hecke", "oracle", "--shape", "2,2", "--at", "2/5", "--prec", "96"]),
        "0"
    );
}

#[test]
fn series_and_asym_outputs() {
    assert_eq!(
        stdout(&[
            "rca", "series", "--shape", "1,1", "--c", "-3/4", "--degree", "4", "--format", "json"
        ]),
        "[1,0,-1,-2]"
    );
    assert_eq!(
        stdout(&["rca", "asym", "--shape", "3,1", "--c", "-7/8"]),
        "-3"
    );
    let bridge = stdout(&[
        "rca", "asym", "--shape", "2,1,1", "--c", "-7/8", "--bridge", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&bridge).unwrap();
    assert_eq!(v["asymptotic"], -3);
    assert_eq!(v["hecke_raw"], 3);
    assert_eq!(v["signed_match_raw"], false);
    assert_eq!(v["abs_match_raw"], true);
    assert_eq!(v["predicted_global_sign"], -1);
}

#[test]
fn stable_outputs() {
    assert_eq!(
        stdout(&["stable", "poly", "--order", "1", "--format", "json"]),
        r#"["2","-1"]"#
    );
    assert_eq!(
        stdout(&["stable", "series", "--a", "5", "--degree", "2", "--format", "json"]),
        r#"["1","-3"]"#
    );
}

#[test]
fn jobs_flag_changes_nothing_but_wall_time() {
    let single = stdout(&[
        "rca", "closed", "--shape", "2,2,1", "--c", "-13/8", "--format", "json",
    ]);
    let multi = stdout(&[
        "--jobs", "3", "rca", "closed", "--shape", "2,2,1", "--c", "-13/8", "--format", "json",
    ]);
    assert_eq!(single, multi);
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        vec!["hecke", "sig", "--shape", "3,2", "--format", "json"],
        vec![
            "rca", "closed", "--shape", "2,2", "--c", "-5/6", "--format", "json",
        ],
        vec!["rca", "limit", "--shape", "2,1", "--format", "json"],
    ] {
        assert_eq!(stdout(&args), stdout(&args), "args {args:?}");
    }
}

#[test]
fn zexpr_json_schema() {
    let out = stdout(&["hecke", "sig", "--shape", "2,2,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let terms = v.as_array().unwrap();
    assert_eq!(terms[0]["indices"].as_array().unwrap().len(), 0);
    assert_eq!(terms[0]["coeff"], 2);
    assert_eq!(terms[1]["indices"], serde_json::json!([3]));
    assert_eq!(terms[2]["indices"], serde_json::json!([2, 4]));
}
