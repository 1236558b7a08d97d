use std::fs;
use std::process::Command;

use indpoly::classify::TreeRecord;
use indpoly::cli::{run_command, CatalogueFile};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("indpoly").chain(args.iter().copied());
    let code = run_command(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn poly_of_p3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p3.txt");
    fs::write(&path, "3\n0 1\n1 2\n").unwrap();
    let (code, out, _) = run(&["poly", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out, "1 + 3x + x^2\n");
}

#[test]
fn malformed_files_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cycle.txt");
    fs::write(&path, "3\n0 1\n1 2\n0 2\n").unwrap();
    assert_eq!(run(&["poly", path.to_str().unwrap()]).0, 2);
    assert_eq!(run(&["poly", "/nonexistent/tree.txt"]).0, 2);
    assert_eq!(run(&["scan"]).0, 2);
    assert_eq!(run(&["construct", "--vertices", "5", "--degree", "4"]).0, 2);
}

#[test]
fn scan_row() {
    let (code, out, _) = run(&["scan", "--n", "6"]);
    assert_eq!(code, 0);
    assert_eq!(out, "6 6 1 1 1\n");
}

#[test]
fn scan_output_ignores_jobs() {
    let outputs: Vec<String> = ["1", "2", "5"]
        .iter()
        .map(|j| run(&["scan", "--n", "14", "--jobs", j]).1)
        .collect();
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
    assert_eq!(outputs[0], "14 3159 1 1 0\n");
}

#[test]
fn scan_records_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("records.json");
    let (code, _, _) = run(&[
        "scan",
        "--n",
        "9",
        "--jobs",
        "2",
        "--records",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let records: Vec<TreeRecord> =
        serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(records.len(), 47);
    assert_eq!(records.iter().filter(|r| r.symmetric).count(), 1);
}

#[test]
fn construct_outcomes() {
    let (code, _, err) = run(&["construct", "--vertices", "7"]);
    assert_eq!(code, 1);
    assert!(err.contains("no tree with a symmetric independence polynomial"));

    let (code, _, err) = run(&["construct", "--degree", "3"]);
    assert_eq!(code, 1);
    assert!(err.contains("no integer solution"));

    let (code, out, _) = run(&["construct", "--degree", "4"]);
    assert_eq!(code, 0);
    let t: indpoly::tree::Tree = out.parse().unwrap();
    assert_eq!(t.order(), 6);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t22.txt");
    let (code, out, _) = run(&[
        "construct",
        "--vertices",
        "22",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let (_, poly, _) = run(&["poly", path.to_str().unwrap()]);
    assert!(poly.ends_with("x^15\n"));
}

#[test]
fn orbits_of_p3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p3.txt");
    fs::write(&path, "3\n0 1\n1 2\n").unwrap();
    let (code, out, _) = run(&["orbits", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "rep 1 size 1 d 2 A(y) = 1 + y B(y) = 1 bridge-ready yes\n"
    );
}

#[test]
fn catalogue_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("catalogue.json");
    let (code, out, _) = run(&[
        "catalogue",
        "--max-n",
        "15",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 15);
    let catalogue: CatalogueFile =
        serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(catalogue.header.max_n, 15);
    assert_eq!(catalogue.rederive_summary(), catalogue.summary);
    assert!(catalogue
        .entries
        .windows(2)
        .all(|w| (w[0].n, &w[0].code) < (w[1].n, &w[1].code)));
    assert_eq!(catalogue.entries.len(), 18);
}

#[test]
fn binary_verify_paper() {
    let output = Command::new(env!("CARGO_BIN_EXE_indpoly"))
        .args(["verify-paper", "--max-n", "16"])
        .output()
        .unwrap();
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert_eq!(output.status.code(), Some(0), "{stdout}");
    assert_eq!(stdout.lines().filter(|l| l.starts_with("PASS")).count(), 9);
    assert_eq!(stdout.lines().filter(|l| l.starts_with("SKIP")).count(), 1);
}

#[test]
fn binary_exit_codes() {
    let status = Command::new(env!("CARGO_BIN_EXE_indpoly"))
        .args(["construct", "--vertices", "10"])
        .output()
        .unwrap()
        .status;
    assert_eq!(status.code(), Some(1));
}
