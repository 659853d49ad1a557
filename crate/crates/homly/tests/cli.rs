//! End-to-end coverage of the `homly` binary: exit codes, output formats,
//! and determinism of the JSON reports.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn homly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn workdir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("homly-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn materialize(name: &str) -> PathBuf {
    let path = workdir().join(format!("{name}.alg"));
    let out = homly(&["builtin", name, "--out", path.to_str().unwrap()]);
    assert!(out.status.success(), "builtin {name} saves");
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn builtin_prints_definition_and_rejects_unknown_names() {
    let out = homly(&["builtin", "l4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("algebra l4"));
    assert!(text.contains("prod 3 1 -> l*e1"));
    assert!(text.contains("map 3 -> a*e1 + e2 + e3"));

    let out = homly(&["builtin", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown builtin"));
}

#[test]
fn check_defaults_pass_on_twisted_builtin() {
    let path = materialize("r7-twist");
    let out = homly(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("multiplicative: holds (16 tuples)"));
    assert!(text.contains("hom-leibniz-left: holds (64 tuples)"));
}

#[test]
fn check_reports_failures_with_exit_one() {
    let path = workdir().join("idempotent.alg");
    fs::write(&path, "algebra idempotent\ndim 1\nprod 1 1 -> e1\n").unwrap();
    let out = homly(&[
        "check",
        path.to_str().unwrap(),
        "--identity",
        "hom-leibniz-left",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("hom-leibniz-left: FAILS"));
    assert!(text.contains("at (1,1,1): lhs = e1, rhs = 2*e1"));
}

#[test]
fn check_right_leibniz_negative_control() {
    let path = workdir().join("l4-id.alg");
    fs::write(
        &path,
        "algebra l4-id\ndim 3\nparams a b l\nprod 2 3 -> e2\nprod 3 1 -> l*e1\nprod 3 2 -> -e2\nprod 3 3 -> e1\n",
    )
    .unwrap();
    let out = homly(&[
        "check",
        path.to_str().unwrap(),
        "--identity",
        "hom-leibniz-right",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("at (3,3,3): lhs = 0, rhs = l*e1"));
}

#[test]
fn check_json_is_byte_identical_across_runs() {
    let path = materialize("l4-twist");
    let args = [
        "check",
        path.to_str().unwrap(),
        "--json",
        "--identity",
        "hom-ly",
        "--identity",
        "multiplicative",
    ];
    let first = homly(&args);
    let second = homly(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    let doc: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(doc["input"], "l4-twist");
    let checks = doc["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 9); // eight axioms + multiplicative
    assert!(checks.iter().all(|c| c["holds"] == true));
}

#[test]
fn check_max_counterexamples_caps_output() {
    let path = workdir().join("square.alg");
    // Every triple fails the left identity on this table.
    fs::write(
        &path,
        "algebra square\ndim 2\nprod 1 1 -> e1\nprod 1 2 -> e1\nprod 2 1 -> e1\nprod 2 2 -> e1\n",
    )
    .unwrap();
    let out = homly(&[
        "check",
        path.to_str().unwrap(),
        "--identity",
        "hom-leibniz-left",
        "--json",
        "--max-counterexamples",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let ces = doc["checks"][0]["counterexamples"].as_array().unwrap();
    assert_eq!(ces.len(), 3);

    let bad = homly(&[
        "check",
        path.to_str().unwrap(),
        "--max-counterexamples",
        "0",
    ]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn twist_of_builtin_matches_catalogued_twist() {
    let l4 = materialize("l4");
    let out = homly(&["twist", l4.to_str().unwrap()]);
    assert!(out.status.success());
    let twisted = stdout(&out);

    let catalogued = homly(&["builtin", "l4-twist"]);
    assert_eq!(twisted, stdout(&catalogued));
    assert!(twisted.contains("prod 3 1 -> (a*l^2+l)*e1"));
}

#[test]
fn twist_refuses_non_endomorphisms() {
    let path = workdir().join("badmap.alg");
    fs::write(
        &path,
        "algebra badmap\ndim 2\nprod 1 1 -> e2\nmap 1 -> e2\nmap 2 -> e1\n",
    )
    .unwrap();
    let out = homly(&["twist", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("twist refused"));
    assert!(err.contains("multiplicative: FAILS"));
}

#[test]
fn construct_emits_structure_and_check_report() {
    let path = materialize("r8-twist");
    let out = homly(&["construct", path.to_str().unwrap(), "--check"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("bracket 1 2 -> 2*e3 - e4"));
    assert!(text.contains("bracket 1 3 -> 2*e4"));
    assert!(text.contains("triple 1 2 1 -> e4"));
    for axiom in [
        "HLY1", "HLY2", "HLY3", "HLY4", "HLY5", "HLY6", "HLY7", "HLY8",
    ] {
        assert!(text.contains(&format!("check {axiom}: holds")), "{axiom}");
    }

    let outfile = workdir().join("r8-homly.txt");
    let saved = homly(&[
        "construct",
        path.to_str().unwrap(),
        "--out",
        outfile.to_str().unwrap(),
    ]);
    assert!(saved.status.success());
    assert!(fs::read_to_string(&outfile)
        .unwrap()
        .contains("bracket 1 2 -> 2*e3 - e4"));
}

#[test]
fn construct_refuses_non_leibniz_input() {
    let path = workdir().join("notleibniz.alg");
    fs::write(&path, "algebra notleibniz\ndim 1\nprod 1 1 -> e1\n").unwrap();
    let out = homly(&["construct", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("construction refused"));
    assert!(err.contains("hom-leibniz-left: FAILS"));
}

#[test]
fn eval_substitutes_and_checks() {
    let path = materialize("l4-twist");
    let out = homly(&[
        "eval",
        path.to_str().unwrap(),
        "--assign",
        "a=2,b=3,l=I",
        "--identity",
        "hom-ly",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("HLY8: holds"));

    let missing = homly(&["eval", path.to_str().unwrap(), "--assign", "a=2,b=3"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(stderr(&missing).contains("no value assigned to parameter `l`"));

    let unknown = homly(&[
        "eval",
        path.to_str().unwrap(),
        "--assign",
        "a=2,b=3,l=1,zz=4",
    ]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(stderr(&unknown).contains("unknown parameter `zz`"));
}

#[test]
fn ly_check_requires_identity_map() {
    let twisted = materialize("r7-twist");
    let out = homly(&["check", twisted.to_str().unwrap(), "--identity", "ly"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("identity twisting map"));

    // Without a map block the same product is checkable.
    let path = workdir().join("r7-id.alg");
    fs::write(
        &path,
        "algebra r7-id\ndim 4\nprod 1 1 -> e4\nprod 1 2 -> e3\nprod 1 3 -> e4\nprod 2 1 -> -e3\nprod 3 1 -> -e4\n",
    )
    .unwrap();
    let out = homly(&["check", path.to_str().unwrap(), "--identity", "ly"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("LY6: holds"));
}

#[test]
fn parse_errors_exit_with_two_and_cite_position() {
    let path = workdir().join("broken.alg");
    fs::write(&path, "algebra broken\ndim 2\nprod 1 5 -> e1\n").unwrap();
    let out = homly(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3"));
    assert!(stderr(&out).contains("out of range"));

    let out = homly(&["check", workdir().join("missing.alg").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("cannot read"));
}

#[test]
fn hom_akivis_and_hom_lie_identities_run_from_cli() {
    let heis = materialize("heisenberg");
    let out = homly(&[
        "check",
        heis.to_str().unwrap(),
        "--identity",
        "hom-akivis",
        "--identity",
        "hom-lie",
        "--identity",
        "id-3-1",
        "--identity",
        "id-3-2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("hom-akivis: holds"));
    assert!(text.contains("anticommutative: holds"));
    assert!(text.contains("hom-jacobi: holds"));
    assert!(text.contains("id-3-1: holds"));
    assert!(text.contains("id-3-2: holds"));
}
