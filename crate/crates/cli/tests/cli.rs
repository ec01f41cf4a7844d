//! End-to-end tests of the batch CLI: output values, exit codes, and
//! byte-level determinism of reports.

use std::process::{Command, Output};

fn opdet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_opdet"))
        .args(args)
        .output()
        .expect("failed to run opdet")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn moments_json() {
    let out = opdet(&["moments", "--measure", "hermite", "--upto", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), r#"["1","0","1/2","0","3/4"]"#);
}

#[test]
fn moments_csv() {
    let out = opdet(&[
        "moments",
        "--measure",
        "laguerre:alpha=0",
        "--upto",
        "3",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "k,moment\n0,1\n1,1\n2,2\n3,6\n");
}

#[test]
fn det_slater_value() {
    let out = opdet(&[
        "det", "slater", "--measure", "hermite", "--n", "1", "--nodes", "0,1",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), r#""1/4""#);
}

#[test]
fn det_structure_constant() {
    let out = opdet(&[
        "det",
        "structure",
        "--measure",
        "hermite",
        "--kind",
        "b-multi",
        "--n",
        "1",
        "--mults",
        "2",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), r#""-1/8""#);
}

#[test]
fn poly_orth() {
    let out = opdet(&[
        "poly", "--measure", "hermite", "--kind", "orth", "--n", "2",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), r#"["-1/4","0","1/2"]"#);
}

#[test]
fn verify_single_identity_passes() {
    let out = opdet(&[
        "verify",
        "--id",
        "COR_LEC_R",
        "--measure",
        "hermite",
        "--n-max",
        "2",
        "--m-max",
        "3",
        "--seed",
        "7",
    ]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains(r#""status":"pass""#));
    assert!(text.contains(r#""identity":"COR_LEC_R""#));
}

#[test]
fn verify_output_is_byte_identical_across_runs() {
    let args = [
        "verify", "--id", "LEC_Q", "--measure", "hermite", "--seed", "11",
    ];
    let a = opdet(&args);
    let b = opdet(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_unknown_identity_is_usage_error() {
    let out = opdet(&["verify", "--id", "NOT_AN_ID", "--measure", "hermite"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flag_is_usage_error() {
    let out = opdet(&["moments", "--measure", "hermite", "--wat", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_measure_is_usage_error() {
    let out = opdet(&["moments", "--measure", "cauchy", "--upto", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));
}

#[test]
fn scan_positivity_passes_and_rejects_odd() {
    let out = opdet(&[
        "scan-positivity",
        "--measure",
        "hermite",
        "--n",
        "1",
        "--mults",
        "2",
        "--trials",
        "25",
        "--seed",
        "3",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains(r#""status":"pass""#));

    let odd = opdet(&[
        "scan-positivity",
        "--measure",
        "hermite",
        "--n",
        "1",
        "--mults",
        "3",
    ]);
    assert_eq!(odd.status.code(), Some(2));
}

#[test]
fn jensen_converge_csv_has_table() {
    let out = opdet(&[
        "jensen-converge",
        "--measure",
        "laguerre:alpha=0",
        "--x",
        "1/2",
        "--m-max",
        "8",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "m,value_exact,value,abs_error");
    assert_eq!(lines.len(), 9);
    assert!(lines[1].starts_with("1,1/2,"));
}

#[test]
fn jensen_converge_rejects_unsupported_measure() {
    let out = opdet(&[
        "jensen-converge",
        "--measure",
        "hermite",
        "--x",
        "1/2",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn modified_measure_grammar_round_trips_through_cli() {
    let out = opdet(&[
        "moments",
        "--measure",
        "modified(hermite;0^1,1^1,2^1)",
        "--upto",
        "0",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), r#"["-3/2"]"#);
}
