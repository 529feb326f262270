//! End-to-end runs of the compiled binary: exit codes, report shapes, and
//! byte-stable suite output.

use std::io::Write;
use std::process::Command;

fn write_doc(name: &str, contents: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path
}

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_cuntzli"))
        .args(args)
        .env_remove("CUNTZLI_VERBOSE")
        .output()
        .expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn check_mul_and_run_against_the_example_document() {
    let doc = write_doc(
        "cuntzli_cli_doc2.json",
        r#"{
            "system": {"n": 2, "generators": [[[0, 2], [1, -2]]], "family": "single_matrix"},
            "elements": [{"name": "corner", "expr": "s[[[0,2],[1,-2]]] s*[[[0,2],[1,-2]]]"}],
            "tasks": ["check", "mul corner corner"]
        }"#,
    );
    let spec = doc.to_str().unwrap();

    let (stdout, _, code) = run(&["check", "--spec", spec]);
    assert_eq!(code, 0, "stdout:\n{stdout}");
    assert!(stdout.contains("C2: index 2"));
    assert!(stdout.contains("verdict: no obstruction"));

    let (stdout, _, code) = run(&["mul", "--spec", spec, "corner", "corner"]);
    assert_eq!(code, 0, "stdout:\n{stdout}");
    assert!(stdout.contains("product: f[[[0,2],[1,-2]];{(0,0)}]"), "stdout:\n{stdout}");
    assert!(stdout.contains("oracle: agrees"));

    let (stdout, _, code) = run(&["run", "--spec", spec]);
    assert_eq!(code, 0, "stdout:\n{stdout}");
    assert!(stdout.contains("== task: check =="));
    assert!(stdout.contains("== task: mul corner corner =="));
}

#[test]
fn obstructed_systems_exit_one() {
    let doc = write_doc(
        "cuntzli_cli_bad.json",
        r#"{"system": {"n": 2, "generators": [[[1, 0], [0, 2]]], "family": "single_matrix"}}"#,
    );
    let (stdout, _, code) = run(&["check", "--spec", doc.to_str().unwrap()]);
    assert_eq!(code, 1, "stdout:\n{stdout}");
    assert!(stdout.contains("C3: obstruction"));
}

#[test]
fn malformed_documents_and_usage_exit_two() {
    let doc = write_doc("cuntzli_cli_broken.json", "{this is not json");
    let (_, _, code) = run(&["check", "--spec", doc.to_str().unwrap()]);
    assert_eq!(code, 2);

    let (_, stderr, code) = run(&["check", "--spec", "/nonexistent/nowhere.json"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("cannot read"));

    let ok = write_doc(
        "cuntzli_cli_ok1.json",
        r#"{"system": {"n": 1, "generators": [[[2]]], "family": "single_matrix"}}"#,
    );
    let (stdout, _, code) = run(&["verify", "--spec", ok.to_str().unwrap(), "nonsense"]);
    assert_eq!(code, 2, "stdout:\n{stdout}");
}

#[test]
fn verify_is_byte_stable_under_a_fixed_seed() {
    let doc = write_doc(
        "cuntzli_cli_ok1b.json",
        r#"{"system": {"n": 1, "generators": [[[2]]], "family": "single_matrix"}}"#,
    );
    let spec = doc.to_str().unwrap();
    for suite in ["relations", "semigroup", "groupoid", "duality"] {
        let first = run(&["verify", "--spec", spec, suite, "--seed", "9", "--window", "6"]);
        let second = run(&["verify", "--spec", spec, suite, "--seed", "9", "--window", "6"]);
        assert_eq!(first.2, 0, "suite {suite}:\n{}", first.0);
        assert_eq!(first.0, second.0, "suite {suite} output drifted");
        assert!(first.0.contains("result: pass"));
    }
}
