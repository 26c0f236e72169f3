use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn unichord(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unichord")).args(args).current_dir(dir).output().expect("binary runs")
}

fn stdout_json(o: &Output) -> Value {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("json output")
}

fn write_named(dir: &Path, name: &str, file: &str, format: &str) {
    let o = unichord(&["gen", name, "--format", format, "--out", file], dir);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn house_is_rejected_and_refused() {
    let dir = tempfile::tempdir().unwrap();
    write_named(dir.path(), "house", "house.json", "json");
    let v = stdout_json(&unichord(&["recognize", "house.json"], dir.path()));
    assert_eq!(v["long_unichord_free"], false);
    assert_eq!(v["witness"]["cycle"].as_array().unwrap().len(), 5);
    let c = unichord(&["color", "house.json"], dir.path());
    assert_eq!(c.status.code(), Some(2));
}

#[test]
fn petersen_colors_within_four_and_verifies() {
    let dir = tempfile::tempdir().unwrap();
    write_named(dir.path(), "petersen", "petersen.col", "dimacs");
    let o = unichord(&["color", "petersen.col", "--checked", "--out", "c.json"], dir.path());
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let c: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("c.json")).unwrap()).unwrap();
    assert!(c["colors"].as_u64().unwrap() <= 4);
    assert_eq!(c["omega"], 2);
    assert_eq!(c["bound"], 4);
    let v = stdout_json(&unichord(&["verify-coloring", "petersen.col", "c.json"], dir.path()));
    assert_eq!(v["proper"], true);
}

#[test]
fn improper_coloring_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    write_named(dir.path(), "cycle(5)", "c5.json", "json");
    std::fs::write(dir.path().join("bad.json"), r#"{"0":0,"1":0,"2":1,"3":0,"4":1}"#).unwrap();
    let o = unichord(&["verify-coloring", "c5.json", "bad.json"], dir.path());
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn oracle_reports_petersen_numbers() {
    let dir = tempfile::tempdir().unwrap();
    write_named(dir.path(), "petersen", "p.json", "json");
    let v = stdout_json(&unichord(&["oracle", "p.json"], dir.path()));
    assert_eq!(v["long_unichord_free"], true);
    assert_eq!(v["omega"], 2);
    assert_eq!(v["chi"], 3);
    let small = unichord(&["oracle", "p.json", "--oracle-max-n", "5"], dir.path());
    assert_eq!(small.status.code(), Some(1));
}

#[test]
fn decompose_emits_json_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    write_named(dir.path(), "wheel(5)", "w.json", "json");
    let v = stdout_json(&unichord(&["decompose", "w.json"], dir.path()));
    let nodes = v["components"][0]["nodes"].as_array().unwrap();
    assert_eq!(nodes[0]["rule"], "universal-removal");
    let dot = unichord(&["decompose", "w.json", "--format", "dot"], dir.path());
    assert!(dot.status.success());
    assert!(String::from_utf8(dot.stdout).unwrap().starts_with("digraph"));
}

#[test]
fn compose_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let spec = r#"{"compose": {"kind": "cutvertex-glue", "v1": 0, "v2": 0},
                   "left": {"compose": {"kind": "amalgam", "u2": 1, "u1": 1, "k": [[5, 6]]},
                            "left": "wheel(5)", "right": "wheel(6)"},
                   "right": {"compose": {"kind": "cutvertex-glue", "v1": 0, "v2": 0},
                             "left": {"random": "chordal", "n": 9},
                             "right": {"random": "seed", "n": 8}}}"#;
    std::fs::write(dir.path().join("a.spec"), spec).unwrap();
    let run = || unichord(&["gen", "compose", "a.spec", "--seed", "7"], dir.path());
    let (a, b) = (run(), run());
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    std::fs::write(dir.path().join("g.json"), &a.stdout).unwrap();
    let v = stdout_json(&unichord(&["recognize", "g.json"], dir.path()));
    assert_eq!(v["long_unichord_free"], true);
    let other = unichord(&["gen", "compose", "a.spec", "--seed", "8"], dir.path());
    assert!(other.status.success());
    assert_ne!(other.stdout, a.stdout);
    // Joining the rim vertex 0 to the hub of the second wheel breaks the amalgam precondition.
    std::fs::write(dir.path().join("bad.spec"), spec.replace("[[5, 6]]", "[[0, 6]]")).unwrap();
    let bad = unichord(&["gen", "compose", "bad.spec"], dir.path());
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("precondition"));
}

#[test]
fn color_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("s.spec"), r#"{"random": "composed", "n": 60}"#).unwrap();
    let g = unichord(&["gen", "compose", "s.spec", "--seed", "3", "--out", "g.json"], dir.path());
    assert!(g.status.success());
    let a = unichord(&["color", "g.json"], dir.path());
    let b = unichord(&["color", "g.json"], dir.path());
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bad_inputs_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(unichord(&["recognize", "missing.col"], dir.path()).status.code(), Some(1));
    std::fs::write(dir.path().join("junk.col"), "p edge 2 1\ne 1 x\n").unwrap();
    assert_eq!(unichord(&["recognize", "junk.col"], dir.path()).status.code(), Some(1));
    assert_eq!(unichord(&["gen", "no-such-graph"], dir.path()).status.code(), Some(1));
    assert_eq!(unichord(&["recognize", "junk.col", "--format", "dot"], dir.path()).status.code(), Some(1));
}

#[test]
fn bench_runs_in_parallel() {
    let dir = tempfile::tempdir().unwrap();
    let v = stdout_json(&unichord(&["bench", "corpus", "--count", "8", "--max-n", "40", "--jobs", "2"], dir.path()));
    let rows = v["instances"].as_array().unwrap();
    assert_eq!(rows.len(), 8);
    for r in rows {
        assert_eq!(r["in_class"], true);
        assert!(r["colors"].as_u64().unwrap() <= r["bound"].as_u64().unwrap());
    }
}
