use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn dir(name: &str) -> PathBuf {
    let d = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    let _ = fs::remove_dir_all(&d);
    fs::create_dir_all(&d).unwrap();
    d
}

fn write(d: &Path, name: &str, body: &str) -> String {
    let p = d.join(name);
    fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

fn hopfres(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfres")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const I2: &str = r#"[["1","0"],["0","1"]]"#;
const I3: &str = r#"[["1","0","0"],["0","1","0"],["0","0","1"]]"#;
const GEOMETRIC: &str = r#"[["1/2","0","0"],["0","1","0"],["0","0","2"]]"#;

#[test]
fn orthogonal_identity_cohomology() {
    let d = dir("orth");
    let e = write(&d, "E.json", I2);
    let o = hopfres(&["cohomology", "b", &e, &e]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("rank:    1 1 1 1\n"), "{out}");
    assert!(out.contains("formula: 1 1 1 1\n"));
    assert!(out.contains("agree: true"));
}

#[test]
fn group_algebra_sign_character() {
    let o = hopfres(&["cohomology", "cz2", "--tau", "sign"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("rank:    0 0\n"));
    let o = hopfres(&["cohomology", "cz2"]);
    assert!(stdout(&o).contains("rank:    1 0\n"));
}

#[test]
fn geometric_progression_has_vanishing_top_degree() {
    // H^3 = 2 - t = 0 here, by both routes
    let d = dir("geometric");
    let f = write(&d, "F.json", GEOMETRIC);
    let s = write(&d, "S.json", I3);
    let o = hopfres(&["cohomology", "h", &f, &s]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("rank:    1 3 1 0\n"), "{out}");
    assert!(out.contains("params: p=1 d=3 t=2"));
}

#[test]
fn report_json_golden() {
    let d = dir("golden");
    let f = write(&d, "F.json", I2);
    let s = write(&d, "S.json", r#"{"S": [["-1","0"],["0","-1"]]}"#);
    let o = hopfres(&["--json", "cohomology", "h", &f, &s]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "{\"dims_rank\":[0,3,3,1],\"dims_formula\":[0,3,3,1],\"params\":{\"p\":0,\"d\":4,\"t\":1},\"agree\":true,\"warnings\":[]}\n"
    );
    let o = hopfres(&["--json", "--mode", "rank", "cohomology", "h", &f, &s]);
    assert!(stdout(&o).starts_with("{\"dims_rank\":[0,3,3,1],\"dims_formula\":null"));
}

#[test]
fn default_character_is_the_counit() {
    let d = dir("counit");
    let e = write(&d, "E.json", I3);
    let o = hopfres(&["cohomology", "a", &e]);
    assert!(stdout(&o).contains("rank:    1 3 3 1\n"));
    let g = write(&d, "T.json", &format!(r#"{{"T": {I3}, "g": "-1"}}"#));
    let o = hopfres(&["cohomology", "a", &e, &g]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("agree: true"));
}

#[test]
fn classify_verdicts() {
    let d = dir("classify");
    let o = hopfres(&["classify", &write(&d, "I3.json", I3)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("generic: true\n"));
    let o = hopfres(&["classify", &write(&d, "R.json", r#"[["1","0"],["0","-1"]]"#)]);
    assert!(stdout(&o).contains("generic: false\n"));
    assert!(stdout(&o).contains("P: 0\n"));
}

#[test]
fn input_errors_exit_2() {
    let d = dir("errors");
    let bad = write(&d, "bad.json", "[[\"1\",");
    assert_eq!(hopfres(&["classify", &bad]).status.code(), Some(2));
    let singular = write(&d, "sing.json", r#"[["1","2"],["2","4"]]"#);
    assert_eq!(hopfres(&["classify", &singular]).status.code(), Some(2));
    let nonsquare = write(&d, "ns.json", r#"[["1","2"]]"#);
    assert_eq!(hopfres(&["classify", &nonsquare]).status.code(), Some(2));
    // T = 2I is not orthogonal for E = I
    let e = write(&d, "E.json", I2);
    let t = write(&d, "T.json", r#"[["2","0"],["0","2"]]"#);
    assert_eq!(hopfres(&["cohomology", "b", &e, &t]).status.code(), Some(2));
    assert_eq!(hopfres(&["character", "b", &e, &t]).status.code(), Some(2));
    assert_eq!(hopfres(&["classify", &d.join("missing.json").to_string_lossy()]).status.code(), Some(2));
    assert_eq!(hopfres(&["classify"]).status.code(), Some(2));
}

#[test]
fn character_reports_derived_matrix() {
    let d = dir("character");
    let f = write(&d, "F.json", GEOMETRIC);
    let s = write(&d, "S.json", r#"[["2","0","0"],["0","1","0"],["0","0","1"]]"#);
    let o = hopfres(&["--json", "character", "h", &f, &s]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(r#""T":[["1/2","0","0"],["0","1","0"],["0","0","1"]]"#), "{}", stdout(&o));
}

#[test]
fn verify_suites() {
    let d = dir("verify");
    let i2 = write(&d, "I2.json", I2);
    let o = hopfres(&["verify", "glued", &i2]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let o = hopfres(&["verify", "complex", "h", &i2]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("status: passed"));
    assert!(out.contains("  d1*d2: 16/16 certified\n") && out.contains("  d2*d3: 18/18 certified\n"), "{out}");

    let o = hopfres(&["--json", "verify", "hopf", "b", &i2, "--certificates"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "passed");
    assert!(v["items"].as_array().unwrap().iter().all(|i| i["certificate"].is_array()));
}

#[test]
fn small_bound_is_undecided() {
    let d = dir("bound");
    let i2 = write(&d, "I2.json", I2);
    assert_eq!(hopfres(&["verify", "glued", &i2, "--degree-bound", "1"]).status.code(), Some(3));
    assert_eq!(hopfres(&["--degree-bound", "1", "verify", "complex", "b", &i2]).status.code(), Some(3));
}

#[test]
fn sweep_is_sorted_deterministic_and_reports_worst_code() {
    let d = dir("sweep");
    write(&d, "b.json", I3);
    write(&d, "a.json", I2);
    write(&d, "notes.txt", "ignored");
    let dir_arg = d.to_string_lossy().into_owned();
    let o = hopfres(&["--json", "--sweep", &dir_arg, "bialgebra", "h"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let files: Vec<_> = v.as_array().unwrap().iter().map(|e| e["file"].as_str().unwrap().to_string()).collect();
    assert_eq!(files, ["a.json", "b.json"]);
    assert_eq!(hopfres(&["--json", "--sweep", &dir_arg, "bialgebra", "h"]).stdout, o.stdout);

    write(&d, "c.json", "{");
    let o = hopfres(&["--sweep", &dir_arg, "classify"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("== a.json ==\nn: 2\n"));
}
