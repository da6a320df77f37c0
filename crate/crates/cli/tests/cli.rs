use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const TWO_CORNER: &str = r#"{"m": 3, "n": 3, "upper": [[1, 3]], "lower": [[2, 1], [3, 2]], "t": [2, 2]}"#;

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn run(args: &[&str], file: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mixladder")).args(args).arg(file).output().unwrap()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn valid_ladder_passes_every_command() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "l.json", TWO_CORNER);
    for args in [
        &["validate"][..],
        &["gb", "--verify"],
        &["height"],
        &["hilbert"],
        &["gorenstein", "--oracle"],
        &["biliaison", "--verify"],
        &["cm-check"],
    ] {
        let out = run(args, &f);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(!out.stderr.is_empty(), "summary goes to stderr");
        let r = report(&out);
        assert_eq!(r["settings"]["field_prime"], 32003);
        assert_eq!(r["ladder"]["upper"], serde_json::json!([[1, 3]]));
    }
}

#[test]
fn reports_carry_the_numbers() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "l.json", TWO_CORNER);
    let gb = report(&run(&["gb"], &f));
    assert_eq!(gb["basis_size"], 5);
    let h = report(&run(&["height"], &f));
    assert_eq!(h["heights"]["lprime_cells"], 3);
    assert_eq!(h["agree"], true);
    let hil = report(&run(&["hilbert"], &f));
    assert_eq!(hil["hilbert"]["h_vector"], serde_json::json!([1, 3, 1]));
    let g = report(&run(&["gorenstein", "--oracle"], &f));
    assert_eq!(g["verdict"], true);
    assert_eq!(g["agree"], true);
    let b = report(&run(&["biliaison"], &f));
    assert_eq!(b["chain"]["steps"].as_array().unwrap().len(), 2);
}

#[test]
fn non_square_matrix_is_not_gorenstein_but_exits_zero() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "l.json", r#"{"m": 2, "n": 3, "upper": [[1, 3]], "lower": [[2, 1]], "t": [2]}"#);
    let out = run(&["gorenstein", "--oracle"], &f);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["verdict"], false);
}

#[test]
fn malformed_json_reports_line_and_column() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "bad.json", "{\n  \"m\": 3,\n  \"n\": ,\n}");
    let out = run(&["validate"], &f);
    assert_eq!(out.status.code(), Some(2));
    let err = report(&out)["error"].as_str().unwrap().to_string();
    assert!(err.contains("line 3"), "{err}");
    assert!(err.contains("column"), "{err}");
}

#[test]
fn unknown_keys_and_missing_files_are_input_errors() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "extra.json", r#"{"m": 2, "n": 2, "upper": [[1, 2]], "lower": [[2, 1]], "t": [2], "x": 1}"#);
    assert_eq!(run(&["validate"], &f).status.code(), Some(2));
    assert_eq!(run(&["height"], &dir.path().join("absent.json")).status.code(), Some(2));
}

#[test]
fn invalid_ladder_fails_validate_with_one_and_other_commands_with_two() {
    let dir = TempDir::new().unwrap();
    // Lower corners out of order.
    let f = write(&dir, "l.json", r#"{"m": 3, "n": 3, "upper": [[1, 3]], "lower": [[3, 2], [2, 1]], "t": [2, 2]}"#);
    let out = run(&["validate"], &f);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    assert_eq!(r["valid"], false);
    assert!(!r["violations"].as_array().unwrap().is_empty());
    assert_eq!(run(&["gb"], &f).status.code(), Some(2));
}

#[test]
fn bad_prime_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "l.json", TWO_CORNER);
    assert_eq!(run(&["--prime", "12", "height"], &f).status.code(), Some(2));
}

#[test]
fn flags_override_document_settings() {
    let dir = TempDir::new().unwrap();
    let f = write(
        &dir,
        "l.json",
        r#"{"m": 3, "n": 3, "upper": [[1, 3]], "lower": [[2, 1], [3, 2]], "t": [2, 2], "field_prime": 101}"#,
    );
    assert_eq!(report(&run(&["hilbert"], &f))["settings"]["field_prime"], 101);
    assert_eq!(report(&run(&["--prime", "7", "hilbert"], &f))["settings"]["field_prime"], 7);
}

#[test]
fn exhausted_budget_exits_three() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "l.json", r#"{"m": 3, "n": 3, "upper": [[1, 3]], "lower": [[3, 1]], "t": [2]}"#);
    let out = run(&["--budget", "0", "gb", "--verify"], &f);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(report(&out)["buchberger"]["status"], "budget_exceeded");
}

#[test]
fn wrong_expected_height_exits_one() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "l.json", TWO_CORNER);
    assert_eq!(run(&["height", "--expect-height", "3"], &f).status.code(), Some(0));
    let out = run(&["height", "--expect-height", "4"], &f);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report(&out)["expected_matches"], false);
}
