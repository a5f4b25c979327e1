use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_eulerob"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(o: &Output) -> Value {
    assert_eq!(code(o), 0, "stderr: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

fn write(name: &str, body: &str) -> String {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("eulerob-cli");
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

const P1: &str = r#"{"strata": [
    {"name": "pt", "dim": 0, "chi": 1},
    {"name": "C", "dim": 1, "chi": 1, "covers": ["pt"]}
]}"#;

const A1: &str = r#"{"strata": [
    {"name": "0", "dim": 0, "chi": 1, "fixed": true},
    {"name": "C*", "dim": 1, "chi": 0, "covers": ["0"]}
]}"#;

#[test]
fn conifold_report() {
    let v = json(&run(&["eu", "--poly", "y*u - x*v", "--point", "0,0,0,0", "--json"]));
    assert_eq!(v["eu"], 2);
    assert_eq!(v["segre"], serde_json::json!([2, 2, 2, 0]));
    assert_eq!(v["multidegrees"]["blocks"], serde_json::json!(["x", "y", "z"]));
    assert!(!v["multidegrees"]["entries"].as_array().unwrap().is_empty());
}

#[test]
fn segre_with_explicit_vars() {
    let v = json(&run(&["segre", "--poly", "y^2 - x^3", "--vars", "x,y", "--point", "1,1", "--json"]));
    assert_eq!(v["vars"], serde_json::json!(["x", "y"]));
    assert_eq!(v["segre"], serde_json::json!([1, 0]));
    assert_eq!(v["alternating_sum"], 1);
}

#[test]
fn eu_with_factors_checks_additivity() {
    let v = json(&run(&["eu", "--poly", "x*y", "--vars", "x,y", "--point", "0,0", "--factors", "x;y", "--json"]));
    assert_eq!(v["eu"], 2);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["name"] == "additivity" && c["passed"] == true));
}

#[test]
fn strat_chi_of_the_projective_line() {
    let space = write("p1.json", P1);
    let v = json(&run(&["strat-chi", "--space", &space, "--json"]));
    assert_eq!(v["chi"], 2);
    let v = json(&run(&["strat-chi", "--space", &space, "--values", "pt=3,C=-1", "--json"]));
    assert_eq!(v["chi"], 2);
}

#[test]
fn transform_both_directions() {
    let space = write("p1-transform.json", P1);
    let v = json(&run(&["transform", "--space", &space, "--cycle", "C=1", "--json"]));
    assert_eq!(v["function"][0]["value"], 1);
    let v = json(&run(&["transform", "--space", &space, "--function", "pt=1,C=0", "--json"]));
    assert_eq!(v["direction"], "function-to-cycle");
    assert_eq!(v["cycle"][0]["value"], 1);
    assert_eq!(v["cycle"][1]["value"], 0);
}

#[test]
fn behrend_and_kiem_li_on_the_affine_line() {
    let space = write("a1.json", A1);
    let cone = write("a1-cone.json", r#"[{"support": "C*", "dim": 1, "mult": 1}]"#);
    let v = json(&run(&["behrend", "--space", &space, "--cone", &cone, "--json"]));
    assert_eq!(v["dt"], -1);
    assert_eq!(v["zero_section_intersection"], -1);
    let v = json(&run(&["kiemli", "--space", &space, "--cone", &cone, "--json"]));
    assert_eq!(v["c2"][1]["value"], -1);
    assert_eq!(v["chi_f_nu2"], -1);
    assert_eq!(v["localized"], -1);
    assert_eq!(v["holds"], true);
}

#[test]
fn selftest_passes() {
    let o = run(&["selftest"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
}

#[test]
fn job_documents() {
    let job = write(
        "job-eu.json",
        r#"{"kind": "eu", "seed": 3, "payload": {"poly": "x^3 + y^3 + z^3", "point": [0, 0, 0]}}"#,
    );
    let v = json(&run(&["run", &job, "--json"]));
    assert_eq!(v["eu"], -3);
    assert_eq!(v["seed"], 3);
    let job = write("job-chi.json", &format!(r#"{{"kind": "strat-chi", "payload": {{"space": {P1}}}}}"#));
    assert_eq!(json(&run(&["run", &job, "--json"]))["chi"], 2);
}

#[test]
fn output_is_byte_identical() {
    let args = ["eu", "--poly", "y^2 - x^3", "--point", "0,0", "--seed", "5", "--json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let space = write("a1-det.json", A1);
    let cone = write("a1-cone-det.json", r#"{"components": [{"support": "C*", "dim": 1, "mult": 2}]}"#);
    let args = ["kiemli", "--space", &space, "--cone", &cone, "--json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn exit_codes() {
    // bad arguments and documents
    assert_eq!(code(&run(&["eu", "--poly", "x*y"])), 2);
    assert_eq!(code(&run(&["eu", "--poly", "x*y +", "--point", "0,0"])), 2);
    assert_eq!(code(&run(&["eu", "--poly", "x*y", "--point", "1,1"])), 2);
    assert_eq!(code(&run(&["eu", "--poly", "x^2*y", "--point", "0,0"])), 2);
    let bad = write("bad-kind.json", r#"{"kind": "nope"}"#);
    assert_eq!(code(&run(&["run", &bad])), 2);
    let bad = write("bad-field.json", r#"{"strata": [{"name": "a", "dim": 0, "chi": 1, "colour": 3}]}"#);
    assert_eq!(code(&run(&["strat-chi", "--space", &bad])), 2);
    assert_eq!(code(&run(&["strat-chi", "--space", "/nonexistent/space.json"])), 1);
    // resource limit
    assert_eq!(code(&run(&["eu", "--poly", "y*u - x*v", "--point", "0,0,0,0", "--budget", "10"])), 3);
    // free stratum with nonzero Euler characteristic
    let space = write(
        "free-chi.json",
        r#"{"strata": [{"name": "0", "dim": 0, "chi": 1, "fixed": true},
                       {"name": "E", "dim": 1, "chi": 2, "covers": ["0"]}]}"#,
    );
    let cone = write("free-chi-cone.json", r#"[{"support": "E", "dim": 1, "mult": 1}]"#);
    assert_eq!(code(&run(&["kiemli", "--space", &space, "--cone", &cone])), 5);
    // unitriangularity
    let space = write(
        "bad-eu.json",
        r#"{"strata": [{"name": "a", "dim": 0, "chi": 1}, {"name": "b", "dim": 1, "chi": 1}],
            "eu": [{"on": "a", "of": "b", "value": 2}]}"#,
    );
    assert_eq!(code(&run(&["transform", "--space", &space, "--cycle", "b=1"])), 5);
}
