//! End-to-end checks of the binary: values, formats, exit codes and
//! batch/golden comparison.

use std::path::PathBuf;
use std::process::{Command, Output};

fn gl11(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gl11"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn alexander_of_braid_inputs() {
    let out = gl11(&["--braid", "n=2: 1 1 1", "--invariant", "alexander"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "q^-2 - 1 + q^2\n");

    let out = gl11(&["--braid", "n=1:", "--invariant", "alexander"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn vanishing_invariant() {
    let out = gl11(&["--braid", "n=2: 1 1", "--invariant", "q"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0\n");
}

#[test]
fn t_format_when_exponents_are_even() {
    let out = gl11(&[
        "--braid",
        "n=2: 1 1 1",
        "--invariant",
        "alexander",
        "--format",
        "t",
    ]);
    assert_eq!(stdout(&out), "t^-1 - 1 + t\n");
    // odd exponents stay in q
    let out = gl11(&[
        "--braid",
        "n=2: 1 1",
        "--invariant",
        "alexander",
        "--format",
        "t",
    ]);
    assert_eq!(stdout(&out), "-q^-1 + q\n");
}

#[test]
fn exit_codes_for_error_classes() {
    // parse error -> 1
    let out = gl11(&["--braid", "nonsense", "--invariant", "alexander"]);
    assert_eq!(out.status.code(), Some(1));
    // validation error -> 2 (alexander with a non-vector labeling)
    let out = gl11(&[
        "--braid",
        "n=2: 1 1 1",
        "--invariant",
        "alexander",
        "--label",
        "(2,0)",
    ]);
    assert_eq!(out.status.code(), Some(2));
    // validation error -> 2 (label outside P')
    let out = gl11(&[
        "--braid",
        "n=2: 1 1 1",
        "--invariant",
        "hatq",
        "--label",
        "(1,-1)",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn deterministic_output() {
    let args = ["--braid", "n=3: 1 -2 1 -2", "--invariant", "alexander"];
    let a = gl11(&args);
    let b = gl11(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a), "-q^-2 + 3 - q^2\n");
}

#[test]
fn hatq_reports_writhe_for_non_vector_labels() {
    let out = gl11(&[
        "--braid",
        "n=2: 1 1 1",
        "--invariant",
        "hatq",
        "--label",
        "(2,0)",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("writhe c0 = +3"), "got: {text}");
}

#[test]
fn check_subcommands() {
    let out = gl11(&["--braid", "n=2: 1 1 1", "--invariant", "check-skein"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("all 3 crossings"));
    let out = gl11(&["--braid", "n=2: 1 1", "--invariant", "check-cuts"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("all cuts agree"));
}

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .join("corpus")
}

#[test]
fn batch_with_golden_file() {
    let dir = corpus_dir();
    let golden = dir.join("golden-alexander.txt");
    let out = gl11(&[
        "--batch",
        dir.to_str().unwrap(),
        "--invariant",
        "alexander",
        "--golden",
        golden.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    // mismatching golden fails with the validation code
    let out = gl11(&[
        "--batch",
        dir.to_str().unwrap(),
        "--invariant",
        "q",
        "--golden",
        golden.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn morse_file_input() {
    let dir = corpus_dir();
    let morse = dir.join("07-trefoil.morse");
    let out = gl11(&[
        "--morse",
        morse.to_str().unwrap(),
        "--invariant",
        "alexander",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "q^-2 - 1 + q^2\n");
}
