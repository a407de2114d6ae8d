use std::path::Path;
use std::process::{Command, Output};

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oneplane"))
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn t1() -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures/t1.1pg")
        .display()
        .to_string()
}

#[test]
fn generate_writes_default_file() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["generate", "xh", "--k", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "n=12 cr=6 edges=36");
    assert!(dir.path().join("xh1.1pg").exists());

    let o = run(
        dir.path(),
        &["generate", "m", "--k", "2", "--out", "prism.1pg"],
    );
    assert!(stdout(&o).contains("cr=0"));
    assert!(dir.path().join("prism.1pg").exists());

    let o = run(dir.path(), &["generate", "fixture", "--path", &t1()]);
    assert!(stdout(&o).starts_with("n=24 cr=18"));
}

#[test]
fn bad_parameters_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        run(dir.path(), &["generate", "h", "--k", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(dir.path(), &["generate", "fixture"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(dir.path(), &["fuzz", "--n", "9..3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(dir.path(), &["fuzz", "--count", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn check_reports_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    run(dir.path(), &["generate", "yh", "--k", "1"]);
    let o = run(
        dir.path(),
        &["check", "yh1.1pg", "--maximal", "--immovable", "--bounds"],
    );
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("connectivity 3"));
    assert!(out.contains("cr-lower-k3 6 >= 6 PASS tight"));
    assert!(!out.contains("FAIL"));

    run(dir.path(), &["generate", "hh", "--k", "1"]);
    let o = run(dir.path(), &["check", "hh1.1pg", "--maximal"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("maximal FAIL witness"));

    run(dir.path(), &["generate", "xm", "--k", "3"]);
    let o = run(dir.path(), &["check", "xm3.1pg", "--bounds"]);
    assert!(stdout(&o).contains("cr-lower-k4 10 >= 10 PASS tight"));

    std::fs::write(dir.path().join("bad.1pg"), "not a drawing\n").unwrap();
    assert_eq!(
        run(dir.path(), &["check", "bad.1pg"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(dir.path(), &["check", "missing.1pg"]).status.code(),
        Some(2)
    );
}

#[test]
fn dot_export() {
    let dir = tempfile::tempdir().unwrap();
    run(dir.path(), &["generate", "xh", "--k", "1"]);
    let o = run(dir.path(), &["export-dot", "xh1.1pg", "--out", "xh1.dot"]);
    assert!(o.status.success());
    let dot = std::fs::read_to_string(dir.path().join("xh1.dot")).unwrap();
    assert_eq!(dot.matches(" -- ").count(), 48);
    let nodes = dot
        .lines()
        .filter(|l| l.trim_start().starts_with('v') && !l.contains(" -- "))
        .count();
    assert_eq!(nodes, 18);
}

#[test]
fn fuzz_summary_is_clean_and_stable() {
    let dir = tempfile::tempdir().unwrap();
    let a = run(
        dir.path(),
        &["fuzz", "--count", "50", "--n", "6..14", "--seed", "3"],
    );
    assert!(a.status.success());
    assert_eq!(stdout(&a).trim(), "instances 50 violations 0");
    let b = run(
        dir.path(),
        &["fuzz", "--count", "50", "--n", "6..14", "--seed", "3"],
    );
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn stats_lines() {
    let dir = tempfile::tempdir().unwrap();
    run(dir.path(), &["generate", "xh", "--k", "1"]);
    let out = stdout(&run(dir.path(), &["stats", "xh1.1pg"]));
    assert!(out.contains("degrees 6:12"));
    assert!(out.contains("near-optimal true"));
    assert!(out.contains("skeleton edges=30 red=12 blue=8"));
}
