//! End-to-end checks of the `qw` binary: exit codes, output contracts, and
//! the environment-variable override.

use std::process::{Command, Output};

fn qw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qw"))
        .args(args)
        .env_remove("QW_DEFAULT_WINDOW")
        .output()
        .expect("binary runs")
}

fn qw_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qw"))
        .args(args)
        .env_remove("QW_DEFAULT_WINDOW")
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn eval_antipode_text() {
    let out = qw(&["eval", "S(L(1))"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "-(1/q)*T^-2*L(1)\n");
}

#[test]
fn eval_parse_error_exits_two() {
    let out = qw(&["eval", "["]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).is_empty());
    assert!(stderr(&out).contains("syntax"));
}

#[test]
fn eval_json_and_latex_formats() {
    let out = qw(&["eval", "q^2*L(1)", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("JSON output");
    assert_eq!(v["terms"][0]["coeff"], "q^2");
    assert_eq!(v["terms"][0]["L"][0], 1);

    let out = qw(&["eval", "Delta(L(3))", "--format", "latex"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "L_{3}\\otimes\\mathcal{T}^{3}+\\mathcal{T}^{3}\\otimes L_{3}\n"
    );
}

#[test]
fn verify_limit_window_ten_passes() {
    let out = qw(&["verify", "limit", "--window", "10"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("result: PASS"));
}

#[test]
fn verify_relations_modes_and_exit_codes() {
    let out = qw(&["verify", "relations", "--window", "2"]);
    assert_eq!(out.status.code(), Some(0));

    let out = qw(&["verify", "relations", "--window", "2", "--mode", "strict_paper"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("CL (m = -2)"), "stdout: {}", text);
    assert!(text.contains("C-T relation leak"), "stdout: {}", text);
}

#[test]
fn verify_json_report_parses() {
    let out = qw(&["verify", "jacobi", "--window", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("JSON report");
    assert_eq!(v["suite"], "jacobi");
    assert_eq!(v["pass"], true);
    assert_eq!(v["window"], 2);
}

#[test]
fn solve_cocycle_window_one_is_usage_error() {
    let out = qw(&["solve-cocycle", "--window", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("window"));
}

#[test]
fn solve_cocycle_json_window_two() {
    let out = qw(&["solve-cocycle", "--window", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("JSON report");
    assert_eq!(v["gauge_fixed_dim"], 1);
    assert_eq!(v["nullspace_dim"], 6);
    assert_eq!(v["normalized_multiple"], "1");
    assert_eq!(v["pass"], true);
}

#[test]
fn env_var_overrides_default_window() {
    // QW_DEFAULT_WINDOW feeds the same validation path as --window
    let out = qw_env(&["solve-cocycle"], "QW_DEFAULT_WINDOW", "1");
    assert_eq!(out.status.code(), Some(2));
    let out = qw_env(&["solve-cocycle"], "QW_DEFAULT_WINDOW", "2");
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("gauge-fixed dimension: 1"));
    // an explicit flag wins over the environment
    let out = qw_env(&["solve-cocycle", "--window", "2"], "QW_DEFAULT_WINDOW", "1");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn unknown_subcommand_exits_two() {
    let out = qw(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    let out = qw(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("eval"));
    assert!(stdout(&out).contains("solve-cocycle"));
}
