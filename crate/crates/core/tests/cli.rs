use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::OnceLock;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hallkit")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim_end().to_string()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).to_string()
}

fn scratch() -> PathBuf {
    let d = std::env::temp_dir().join(format!("hallkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

/// A₂ table with dimension bound (2,2), built once through the CLI.
fn a2_table() -> &'static str {
    static T: OnceLock<String> = OnceLock::new();
    T.get_or_init(|| {
        let out = scratch().join("a2.json").display().to_string();
        let o = run(&["hall-table", "--quiver", &fixture("a2.q"), "--max-dim", "2,2", "--out", &out]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        out
    })
}

#[test]
fn hall_table_writes_json() {
    let t: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(a2_table()).unwrap()).unwrap();
    let classes = t["classes"].as_array().unwrap();
    let indec = classes.iter().filter(|c| c["label"].as_array().unwrap().len() == 1).count();
    assert_eq!(indec, 3);
    assert_eq!(t["primes"], serde_json::json!([2, 3, 5, 7, 11]));
}

#[test]
fn hall_table_errors() {
    let o = run(&["hall-table", "--quiver", &fixture("a2.q"), "--max-dim", "1,1"]);
    assert_eq!(o.status.code(), Some(2));
    let out = scratch().join("bad.json").display().to_string();
    let o = run(&["hall-table", "--quiver", &fixture("bad.q"), "--max-dim", "1,1", "--out", &out]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("oriented cycle"), "{}", stderr(&o));
    let o = run(&["hall-table", "--quiver", &fixture("a2.q"), "--max-dim", "1,1,1", "--out", &out]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn mult_examples() {
    let o = run(&["mult", "--algebra", "B", "--chi", "1,-1;0,1", "--lhs", "b{[1,0]}", "--rhs", "b{[0,1]}"]);
    assert_eq!(stdout(&o), "b{[1,0],[0,1]}");
    let o = run(&[
        "mult",
        "--algebra",
        "B",
        "--chi",
        "1,-1;0,1",
        "--lhs",
        "b{[0,1]}",
        "--rhs",
        "b{[1,0]}",
        "--mode",
        "sum",
    ]);
    assert_eq!(stdout(&o), "b{[1,0],[0,1]} + b{[1,1]}");
    let o = run(&["mult", "--algebra", "A", "--chi", "1", "--lhs", "a[0]", "--rhs", "a[0]"]);
    assert_eq!(stdout(&o), "a[0]");
    let t = a2_table();
    let o = run(&["mult", "--algebra", "SF", "--table", t, "--lhs", "s[[0,1]]", "--rhs", "s[[1,0]]"]);
    assert_eq!(stdout(&o), "(L-1)*s[[1,1]] + s[[1,0],[0,1]]");
    let o = run(&["mult", "--algebra", "CF", "--table", t, "--lhs", "d[[0,1]]", "--rhs", "d[[1,0]]"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn mult_errors() {
    let o = run(&["mult", "--algebra", "B", "--chi", "1,-1;0,1", "--lhs", "b{[1,0]", "--rhs", "b{[0,1]}"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["mult", "--algebra", "SF", "--lhs", "s[[0,1]]", "--rhs", "s[[1,0]]"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["mult", "--algebra", "SF", "--table", a2_table(), "--lhs", "s[[1,1],[1,1]]", "--rhs", "s[[1,0]]"]);
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
    let o = run(&["mult", "--algebra", "D", "--chi", "1", "--lhs", "a[0]", "--rhs", "a[0]"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_reports_json_lines() {
    let o = run(&["verify", "--suite", "serre", "--quiver", &fixture("a2.q")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    for line in stdout(&o).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["suite"], "serre");
        assert_eq!(v["status"], "pass");
    }
    let o = run(&["verify", "--suite", "serre", "--table", a2_table()]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--suite", "thm65", "--seed", "7", "--trials", "3"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("\"seed\":7"));
    let c = run(&["verify", "--suite", "cy", "--seed", "8", "--trials", "3"]);
    assert_ne!(c.stdout, a.stdout);
}

#[test]
fn verify_errors() {
    let o = run(&["verify", "--suite", "qserre", "--quiver", &fixture("bad.q")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("oriented cycle"));
    assert_eq!(run(&["verify", "--suite", "serre"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nosuch"]).status.code(), Some(2));
}
