//! End-to-end runs of every subcommand against golden transcripts in `tests/golden/`.
//!
//! Set `UQSL2_BLESS=1` to rewrite the transcripts.

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use uqsl2_cli::report::Report;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
    json: Option<Value>,
    raw_json: Option<String>,
}

fn run(args: &[&str]) -> Run {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = Command::new(env!("CARGO_BIN_EXE_uqsl2"))
        .args(args)
        .arg("--emit")
        .arg(&path)
        .env_remove("UQSL2_SIGN_PRECISION")
        .output()
        .unwrap();
    let raw_json = std::fs::read_to_string(&path).ok();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
        json: raw_json.as_deref().map(|s| serde_json::from_str(s).unwrap()),
        raw_json,
    }
}

fn golden(name: &str, r: &Run) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.txt"));
    let text = format!("exit {}\n{}", r.code, r.stdout);
    if std::env::var_os("UQSL2_BLESS").is_some() {
        std::fs::write(&path, &text).unwrap();
        return;
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(text, want, "transcript of {name} changed");
}

fn payload<'a>(r: &'a Run, key: &str) -> &'a Value {
    &r.json.as_ref().expect("report written")["payload"][key]
}

#[test]
fn check_axioms() {
    let r = run(&["check-axioms", "--N", "3"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(payload(&r, "dim_H"), 27);
    golden("check_axioms", &r);
}

#[test]
fn stars() {
    let r = run(&["stars"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    golden("stars", &r);
}

#[test]
fn reps() {
    let r = run(&["reps", "--rep", "6_eve", "--analyze"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(payload(&r, "radical_dim"), 13);
    assert_eq!(payload(&r, "lattice_chain"), &serde_json::json!([0, 2, 3, 4, 6]));
    golden("reps", &r);
}

#[test]
fn forms() {
    let r = run(&["forms", "--rep", "3_irr", "--star", "hopf"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(payload(&r, "real_dim"), 1);
    assert_eq!(payload(&r, "signature"), "(2,1,0)");
    golden("forms", &r);
}

#[test]
fn forms_twisted_6_odd() {
    let r = run(&["forms", "--rep", "6_odd", "--star", "twisted+", "--analyze"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    golden("forms_twisted_6_odd", &r);
}

#[test]
fn plane() {
    let r = run(&["plane"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(payload(&r, "witt"), "9 = 4 + 4 + 1");
    golden("plane", &r);
}

#[test]
fn plane_twisted_minus_reports_failure() {
    let r = run(&["plane", "--star", "twisted-"]);
    assert_eq!(r.code, 2);
    assert!(r.stdout.contains("FAIL  star respects the relations of M"));
    golden("plane_twisted_minus", &r);
}

#[test]
fn killing() {
    let r = run(&["killing"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    golden("killing", &r);
}

#[test]
fn integral() {
    let r = run(&["integral", "--star", "hopf", "--analyze"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(payload(&r, "signature"), "(14,13,0)");
    golden("integral", &r);
}

#[test]
fn tensor() {
    let r = run(&["tensor", "--star", "twisted+"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    golden("tensor", &r);
}

#[test]
fn double() {
    let r = run(&["double", "--star", "twisted+", "--rep", "3-_irr"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(payload(&r, "k_order"), 6);
    assert_eq!(payload(&r, "signature"), "(3,0,0)");
    golden("double", &r);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["forms", "--star", "nope"]).code, 1);
    assert_eq!(run(&["frobnicate"]).code, 1);
    let bad = run(&["forms", "--rep", "7_weird"]);
    assert_eq!(bad.code, 1);
    assert!(bad.stderr.contains("unknown representation"));
    assert!(bad.raw_json.is_none());
    assert_eq!(run(&["--N", "4", "check-axioms"]).code, 1);
    assert_eq!(run(&["--N", "3", "--embedding", "3", "forms"]).code, 1);
}

#[test]
fn output_is_deterministic_and_round_trips() {
    let a = run(&["tensor", "--rep", "2_eve"]);
    let b = run(&["tensor", "--rep", "2_eve"]);
    assert_eq!(a.stdout, b.stdout);
    let raw = a.raw_json.unwrap();
    assert_eq!(Some(&raw), b.raw_json.as_ref());
    let parsed: Report = serde_json::from_str(&raw).unwrap();
    assert_eq!(parsed.to_json(), raw);
    assert_eq!(parsed.command, "tensor");
    assert_eq!(parsed.parameters.n, 3);
}
