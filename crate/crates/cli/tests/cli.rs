use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_liebound"));
    c.env_remove("LIEBOUND_SEED");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write_tmp(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("liebound-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn catalog_file(name: &str) -> PathBuf {
    let o = run(&["catalog", "show", name]);
    assert!(o.status.success());
    write_tmp(&format!("{name}.json"), &stdout(&o))
}

#[test]
fn validate_heisenberg_file() {
    let p = write_tmp(
        "h3.json",
        r#"{"name": "h3", "dim": 3, "basis": ["x", "y", "z"], "brackets": {"0,1": [["2", "1"]]}}"#,
    );
    let o = run(&["validate", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("ok"));
}

#[test]
fn user_errors_exit_one() {
    let lower = write_tmp(
        "lower.json",
        r#"{"name": "x", "dim": 2, "basis": ["a", "b"], "brackets": {"1,0": [["1", "1"]]}}"#,
    );
    let o = run(&["validate", lower.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("lower-triangular key"));

    let jacobi = write_tmp(
        "jacobi.json",
        r#"{"name": "bad", "dim": 3, "basis": ["e1", "e2", "e3"],
            "brackets": {"0,1": [["2", "1"]], "0,2": [["0", "1"]]}}"#,
    );
    let o = run(&["validate", jacobi.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("(0,1,2)"));

    assert_eq!(run(&["catalog", "show", "nope"]).status.code(), Some(1));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(run(&["validate", "/nonexistent/file.json"]).status.code(), Some(1));
    let osc = catalog_file("oscillator");
    let o = run(&["check", osc.to_str().unwrap(), "--vector", "1,2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn catalog_listing_and_round_trip() {
    let o = run(&["catalog", "list"]);
    let text = stdout(&o);
    for name in ["abelian", "aff1", "heisenberg3", "sl2R", "so3", "e2cover", "oscillator"] {
        assert!(text.contains(name), "{name} missing");
    }
    let o = run(&["catalog", "show", "abelian", "--param", "5"]);
    assert!(stdout(&o).contains("\"dim\": 5"));
    let p = catalog_file("so3_sl2_h3");
    assert!(run(&["validate", p.to_str().unwrap()]).status.success());
}

#[test]
fn analyze_json_reports_bounded_subalgebra() {
    let p = catalog_file("e2cover");
    let o = run(&["analyze", p.to_str().unwrap(), "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["bounded"]["dim"], 2);
    assert_eq!(v["bounded"]["basis"][0], "0,1,0");
    assert_eq!(v["bounded"]["basis"][1], "0,0,1");

    let o = run(&["analyze", p.to_str().unwrap()]);
    assert!(stdout(&o).contains("bounded subalgebra b"));
}

#[test]
fn check_and_oracle_agree() {
    let p = catalog_file("oscillator");
    let f = p.to_str().unwrap();
    let o = run(&["check", f, "--vector", "0,0,0,3/2"]);
    assert!(stdout(&o).trim_end().ends_with("bounded"));
    assert!(!stdout(&o).contains("unbounded"));

    let o = run(&["oracle", f, "--vector", "1,0,0,0"]);
    let text = stdout(&o);
    assert!(text.contains("unbounded-witness"));
    assert!(text.contains("agreement: true"));

    let o = run(&["oracle", f, "--vector", "0,0,0,1", "--steps", "2000", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "bounded-likely");
    assert_eq!(v["agreement"], true);
}

#[test]
fn oracle_with_isotropy_and_seed_env() {
    let p = catalog_file("e2cover");
    let f = p.to_str().unwrap();
    let args = ["oracle", f, "--vector", "0,1,0", "--steps", "3000", "--isotropy", "r", "--format", "json"];
    let a = bin().args(args).env("LIEBOUND_SEED", "7").output().unwrap();
    let b = bin().args(args).env("LIEBOUND_SEED", "7").output().unwrap();
    assert!(a.status.success());
    let va: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(va["walk"]["seed"], 7);
    assert_eq!(stdout(&a), stdout(&b));
    // translations stay bounded modulo the rotations
    assert_eq!(va["verdict"], "bounded-likely");

    let bad = run(&["oracle", f, "--vector", "1,0,0", "--isotropy", "p1"]);
    assert_eq!(bad.status.code(), Some(1));
}
