use std::path::PathBuf;

use superybe::cli::{run, Output};
use superybe::format::parse;
use superybe::rmat::is_super_rmatrix;

const AFFINE: &str = "\
[space]
even = e
odd = f

[bracket]
e f = 1 f

[map T0 : g* -> g parity even]
f* = -1 f

[map T1 : g* -> g parity odd]
e* = 1 f
f* = -1 e

[map bad : g* -> g parity even]
e* = 1 e
f* = 1 f

[tensor r0 parity even]
f f = 1

[tensor ef parity odd]
e f = 1
";

fn file(name: &str, text: &str) -> String {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn sy(args: &[&str]) -> Output {
    run(std::iter::once("superybe").chain(args.iter().copied()))
}

#[test]
fn validate_and_checks() {
    let f = file("affine.sy", AFFINE);
    assert_eq!(sy(&["validate", &f]).code, 0);
    assert_eq!(sy(&["check-oop", &f, "--map", "T1", "--rep", "coad"]).code, 0);
    let out = sy(&["check-oop", &f, "--map", "bad", "--rep", "coad"]);
    assert_eq!(out.code, 1, "{}", out.stdout);
    let out = sy(&["check-cybe", &f, "--tensor", "r0"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("SCYBE defect: 0"), "{}", out.stdout);
    let out = sy(&["check-cybe", &f, "--tensor", "ef"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("e⊗f⊗f"), "{}", out.stdout);
}

#[test]
fn constructions_emit_documents() {
    let f = file("affine-build.sy", AFFINE);
    for variant in ["plain", "dual"] {
        let out = sy(&["build-rmatrix", &f, "--map", "T1", "--rep", "coad", "--variant", variant]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let doc = parse(&out.stdout).unwrap();
        assert!(is_super_rmatrix(doc.tensor("r").unwrap()));
    }
    let out = sy(&["hierarchy", &f, "--tensor", "r0", "--word", "+-"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let out = sy(&["dualize", &f, "--map", "T0", "--rep", "coad"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let doc = parse(&out.stdout).unwrap();
    assert!(doc.map("T0_s").is_ok());
    assert!(doc.representation("coad_s").is_ok());
}

#[test]
fn search_json_does_not_depend_on_threads() {
    let f = file("affine-search.sy", AFFINE);
    let args = |threads: &'static str| {
        sy(&["--json", "--threads", threads, "search", &f, "--rep", "coad", "--parity", "odd", "--entries=-1,0,1"])
    };
    let one = args("1");
    let four = args("4");
    assert_eq!(one.code, 0, "{}", one.stderr);
    assert_eq!(one.stdout, four.stdout);
    let v: serde_json::Value = serde_json::from_str(&one.stdout).unwrap();
    assert!(v["count"].as_u64().unwrap() > 0);
    assert_eq!(v["maps"].as_array().unwrap().len() as u64, v["count"].as_u64().unwrap());
}

#[test]
fn search_cap_is_enforced() {
    let f = file("affine-cap.sy", AFFINE);
    let out = sy(&["search", &f, "--rep", "coad", "--parity", "odd", "--entries=-1,0,1", "--cap", "2"]);
    assert_eq!(out.code, 2);
}

#[test]
fn prelie_commands() {
    let out = sy(&["demo", "ex3.20"]);
    assert_eq!(out.code, 0);
    let start = out.stdout.find("[space]").unwrap();
    let end = out.stdout[start..].find("\n\n[prelie dot").unwrap() + start;
    let f = file("odd-square.sy", &out.stdout[start..end]);
    let out = sy(&["prelie", &f, "compatible", "--map", "T", "--rep", "rho"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("f f = -1 e"), "{}", out.stdout);
    let out = sy(&["prelie", &f, "from-oop", "--map", "T", "--rep", "rho"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
}

#[test]
fn every_demo_passes() {
    for name in superybe::catalog::FIXTURES {
        let out = sy(&["demo", name]);
        assert_eq!(out.code, 0, "{name}: {}", out.stdout);
    }
}

#[test]
fn usage_errors_exit_2() {
    let f = file("affine-errors.sy", AFFINE);
    assert_eq!(sy(&["check-cybe", &f, "--tensor", "nope"]).code, 2);
    assert_eq!(sy(&["validate", "/nonexistent/file.sy"]).code, 2);
    assert_eq!(sy(&["demo", "nope"]).code, 2);
    assert_eq!(sy(&["frobnicate"]).code, 2);
    let broken = file("broken.sy", "[space]\neven = e\nodd = f\n[bracket]\ne f = 1 e\n");
    let out = sy(&["validate", &broken]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("line 5"), "{}", out.stderr);
}
