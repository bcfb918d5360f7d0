//! End-to-end checks of the dpart binary: exit codes, the JSON envelope,
//! and byte-for-byte determinism across runs and worker counts.

use std::process::{Command, Output};

fn dpart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dpart"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

const Z5: &str = r#"{"type":"cyclic","n":5}"#;
const Z6: &str = r#"{"type":"cyclic","n":6}"#;
const Z7: &str = r#"{"type":"cyclic","n":7}"#;

#[test]
fn verify_splits_exit_codes_by_verdict() {
    let good = dpart(&["verify", "--group", Z5, "--partition", "[[0],[1,4],[2,3]]"]);
    assert_eq!(code(&good), 0, "stderr: {}", stderr(&good));
    assert!(stdout(&good).contains("d-partition: yes"));

    let bad = dpart(&["verify", "--group", Z5, "--partition", "[[0],[1],[2,3,4]]"]);
    assert_eq!(code(&bad), 1);
    assert!(stdout(&bad).contains("d-partition: no"));
}

#[test]
fn malformed_input_is_a_usage_error() {
    let garbled = dpart(&["verify", "--group", "not json", "--partition", "[[0]]"]);
    assert_eq!(code(&garbled), 2);
    assert!(stderr(&garbled).contains("group"));

    let unknown_flag = dpart(&["verify", "--group", Z5, "--no-such-flag"]);
    assert_eq!(code(&unknown_flag), 2);

    let no_subcommand = dpart(&[]);
    assert_eq!(code(&no_subcommand), 2);

    let bad_request = dpart(&["construct", "--request", r#"{"construction":"unknown"}"#]);
    assert_eq!(code(&bad_request), 2);
}

#[test]
fn domain_failures_exit_one() {
    let composite = dpart(&["census", "--p", "9"]);
    assert_eq!(code(&composite), 1);
    assert!(stderr(&composite).contains("odd prime"));

    let too_large = dpart(&["gordon", "--p", "13"]);
    assert_eq!(code(&too_large), 1);

    let bad_coarsen = dpart(&[
        "construct",
        "--request",
        &format!(
            r#"{{"construction":"coarsen-identity","group":{Z6},"partition":[[0],[1,2,3,4,5]],"subgroup":[0,3]}}"#
        ),
    ]);
    assert_eq!(code(&bad_coarsen), 1);
    assert!(stderr(&bad_coarsen).contains("neither below nor above"));
}

#[test]
fn json_envelope_always_carries_the_schema_tag() {
    for args in [
        vec!["--json", "verify", "--group", Z5, "--partition", "[[0],[1,4],[2,3]]"],
        vec!["--json", "census", "--p", "7"],
        vec!["--json", "gordon", "--p", "5"],
        vec!["--json", "dfield", "--order", "2"],
        vec!["--json", "enumerate", "--group", Z6],
    ] {
        let out = dpart(&args);
        assert_eq!(code(&out), 0, "args {args:?}, stderr: {}", stderr(&out));
        let value: serde_json::Value =
            serde_json::from_str(&stdout(&out)).expect("stdout is JSON");
        assert_eq!(value["schema"], "1", "args {args:?}");
    }
}

#[test]
fn construct_requests_fulfill_the_documented_examples() {
    let orbit = dpart(&[
        "construct",
        "--request",
        &format!(
            r#"{{"construction":"orbit-coarsen","group":{Z7},"partition":[[0],[1],[2],[3],[4],[5],[6]],"multipliers":[1,2,4]}}"#
        ),
    ]);
    assert_eq!(code(&orbit), 0, "stderr: {}", stderr(&orbit));
    let text = stdout(&orbit);
    assert!(text.contains("{1,2,4}") && text.contains("{3,5,6}"), "got: {text}");

    let complement = dpart(&[
        "construct",
        "--request",
        &format!(
            r#"{{"construction":"complement-coarsen","group":{Z6},"partition":[[0],[1],[2],[3],[4],[5]],"subgroup":[0,3]}}"#
        ),
    ]);
    assert_eq!(code(&complement), 0, "stderr: {}", stderr(&complement));
    let text = stdout(&complement);
    assert!(text.contains("{1,2,4,5}") && text.contains("{3}"), "got: {text}");
}

#[test]
fn iso_reports_both_verdicts() {
    let same = dpart(&[
        "iso",
        "--group", Z7,
        "--partition", "[[0],[1,2,4],[3,5,6]]",
        "--group2", Z7,
        "--partition2", "[[0],[3,5,6],[1,2,4]]",
    ]);
    assert_eq!(code(&same), 0, "stderr: {}", stderr(&same));
    assert!(stdout(&same).contains("isomorphic"));

    // A three-part against the improper partition: no bijection exists.
    let different = dpart(&[
        "iso",
        "--group", Z7,
        "--partition", "[[0],[1,2,4],[3,5,6]]",
        "--group2", Z7,
        "--partition2", "[[0,1,2,3,4,5,6]]",
    ]);
    assert_eq!(code(&different), 1);
}

#[test]
fn output_bytes_are_stable_across_runs_and_worker_counts() {
    let reference = dpart(&["--json", "census", "--p", "13"]);
    assert_eq!(code(&reference), 0);
    for args in [
        vec!["--json", "census", "--p", "13"],
        vec!["--json", "--workers", "1", "census", "--p", "13"],
        vec!["--json", "--workers", "4", "census", "--p", "13"],
    ] {
        let run = dpart(&args);
        assert_eq!(code(&run), 0);
        assert_eq!(run.stdout, reference.stdout, "args {args:?}");
    }

    let enum_reference = dpart(&["--json", "enumerate", "--group", Z6]);
    assert_eq!(code(&enum_reference), 0);
    let enum_again = dpart(&["--json", "--workers", "3", "enumerate", "--group", Z6]);
    assert_eq!(enum_again.stdout, enum_reference.stdout);
}
