#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Case {
    pub name: String,
    pub args: Vec<String>,
    pub exit: i32,
}

fn case(name: impl Into<String>, args: &[&str], exit: i32) -> Case {
    Case { name: name.into(), args: args.iter().map(|s| s.to_string()).collect(), exit }
}

/// Every golden-file case: per-catalog commands plus the flag, error and
/// exit-code paths.
pub fn cases() -> Vec<Case> {
    let mut out = Vec::new();
    for name in fcspec::catalog::names() {
        let input = format!("catalog:{name}");
        out.push(case(format!("spec-{name}"), &["spec", &input], 0));
        out.push(case(format!("spec-{name}.json"), &["spec", &input, "--json"], 0));
        out.push(case(format!("topology-{name}"), &["topology", &input], 0));
        out.push(case(format!("topology-{name}.json"), &["topology", &input, "--json"], 0));
        out.push(case(format!("verify-{name}"), &["verify", &input], 0));
        out.push(case(format!("dot-{name}"), &["export-dot", &input], 0));
        out.push(case(format!("catalog-{name}.json"), &["catalog", name], 0));
    }
    out.extend([
        case("catalog", &["catalog"], 0),
        case("catalog.json", &["catalog", "--json"], 0),
        case("topology-fi-V4overF2", &["topology", "--fi", "catalog:V4overF2"], 0),
        case("verify-all-catalog", &["verify", "--all-catalog"], 0),
        case("verify-Z4-thm-T2", &["verify", "catalog:Z4", "--theorems", "thm-T2"], 0),
        case("verify-Z4-thm-T2.json", &["verify", "catalog:Z4", "--theorems", "thm-T2", "--json"], 0),
        case("fuzz-seed1-count12", &["fuzz", "--seed", "1", "--count", "12"], 0),
        case("fuzz-count0", &["fuzz", "--count", "0"], 0),
        case("spec-file-z4", &["spec", "tests/data/z4.json"], 0),
        case("error-unknown-theorem", &["verify", "catalog:Z4", "--theorems", "thm-nope"], 1),
        case("error-unknown-catalog", &["spec", "catalog:Z5"], 1),
        case("error-nonassociative", &["spec", "tests/data/nonassociative.json"], 1),
        case("error-unknown-key", &["spec", "tests/data/unknown-key.json"], 1),
        case("error-missing-file", &["spec", "tests/data/missing.json"], 1),
        case("error-bound-elements", &["spec", "catalog:Z8", "--bound-elements", "4"], 2),
        case("error-bound-submodules", &["topology", "catalog:T2F2", "--bound-submodules", "3"], 2),
    ]);
    out
}

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_path(name: &str) -> PathBuf {
    manifest_dir().join("tests/golden").join(format!("{name}.golden"))
}

/// Runs the binary and returns exit code and the rendered transcript.
pub fn transcript(args: &[String]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_fcspec"))
        .args(args)
        .current_dir(manifest_dir())
        .output()
        .expect("binary runs");
    let code = out.status.code().expect("exited normally");
    let mut text = format!("$ fcspec {}\nexit: {code}\n--- stdout\n", args.join(" "));
    text.push_str(&String::from_utf8(out.stdout).expect("utf-8 stdout"));
    let stderr = String::from_utf8(out.stderr).expect("utf-8 stderr");
    if !stderr.is_empty() {
        text.push_str("--- stderr\n");
        text.push_str(&stderr);
    }
    (code, text)
}

pub enum Outcome {
    Match,
    Mismatch(String),
}

/// Compares one case against its golden file, rewriting the file instead
/// when `UPDATE_GOLDEN=1`.
pub fn check(case: &Case) -> Outcome {
    let (code, text) = transcript(&case.args);
    if code != case.exit {
        return Outcome::Mismatch(format!("{}: exit {code}, expected {}", case.name, case.exit));
    }
    let path = golden_path(&case.name);
    if std::env::var("UPDATE_GOLDEN").as_deref() == Ok("1") {
        std::fs::write(&path, &text).expect("golden file writable");
        return Outcome::Match;
    }
    match std::fs::read_to_string(&path) {
        Ok(expected) if expected == text => Outcome::Match,
        Ok(expected) => Outcome::Mismatch(format!("{}: output differs from {}\n{}", case.name, display(&path), first_difference(&expected, &text))),
        Err(e) => Outcome::Mismatch(format!("{}: cannot read {}: {e}", case.name, display(&path))),
    }
}

fn display(p: &Path) -> String {
    p.strip_prefix(manifest_dir()).unwrap_or(p).display().to_string()
}

fn first_difference(expected: &str, actual: &str) -> String {
    for (i, (e, a)) in expected.lines().zip(actual.lines()).enumerate() {
        if e != a {
            return format!("line {}:\n  expected: {e}\n  actual:   {a}", i + 1);
        }
    }
    format!("lengths differ: expected {} lines, got {}", expected.lines().count(), actual.lines().count())
}
