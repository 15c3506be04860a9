//! Runs the `fraccount` binary: exit codes, output files, determinism.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use fraccount::export::read_pajek;
use tempfile::TempDir;

const TABLE_ONE: &str = r#"{"id":"doc1","year":2014,"entities":[{"institution":"A","country":"X","authors":3},{"institution":"B","country":"Y","authors":2},{"institution":"C","country":"X","authors":4}]}
{"id":"doc2","year":2013,"entities":[{"institution":"A","country":"X","authors":1},{"institution":"D","country":"Z","authors":1}]}
"#;

fn fixture() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/five_records.txt")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fraccount"))
        .args(args)
        .env_remove("FRACCOUNT_NORM_DIR")
        .output()
        .expect("spawn fraccount")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn corpus(dir: &TempDir) -> String {
    let path = dir.path().join("t1.jsonl");
    fs::write(&path, TABLE_ONE).unwrap();
    path.display().to_string()
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let good = corpus(&dir);
    let bad = dir.path().join("bad.jsonl");
    fs::write(&bad, "{\"id\": \"x\", \"entities\": [\n").unwrap();
    let bad = bad.display().to_string();
    let truncated = dir.path().join("cut.txt");
    fs::write(&truncated, "FN x\nVR 1.0\nPT J\nUT a\n").unwrap();
    let truncated = truncated.display().to_string();

    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["--version"]), 0);
    assert_eq!(code(&["net", "--in", &good]), 0);
    assert_eq!(code(&["net", "--in", &good, "--scheme", "HALF_LINKS"]), 1);
    assert_eq!(code(&["frobnicate", "--in", &good]), 1);
    assert_eq!(code(&["compare", "--in", &good]), 1);
    assert_eq!(code(&["net", "--in", &bad]), 2);
    assert_eq!(code(&["net", "--in", &truncated, "--format", "wos"]), 2);
    assert_eq!(code(&["net", "--in", "/nonexistent/corpus.jsonl"]), 3);
    let missing_dir = dir.path().join("no/such/dir/out.csv");
    assert_eq!(code(&["net", "--in", &good, "--out", missing_dir.to_str().unwrap()]), 3);
}

#[test]
fn parse_errors_name_the_line() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("bad.jsonl");
    fs::write(&path, format!("{TABLE_ONE}not json\n")).unwrap();
    let out = run(&["parse", "--in", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("line 3"), "{stderr}");
}

#[test]
fn table_one_network_csv() {
    let dir = TempDir::new().unwrap();
    let input = corpus(&dir);
    let out = run(&["net", "--in", &input, "--level", "institution"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        ",A,B,C,D\nA,0,6,12,1\nB,6,0,8,0\nC,12,8,0,0\nD,1,0,0,0\n"
    );
}

#[test]
fn export_round_trips_through_pajek() {
    let dir = TempDir::new().unwrap();
    let input = corpus(&dir);
    let path = dir.path().join("frac.net");
    let out = run(&[
        "export",
        "--in",
        &input,
        "--level",
        "institution",
        "--scheme",
        "FRACTIONAL_LINKS",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("FRACTIONAL_LINKS"));
    let (labels, m) = read_pajek(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(labels, ["A", "B", "C", "D"]);
    assert!((m.get(0, 1) - 6.0 / 52.0).abs() < 1e-6);
    assert_eq!(m.get(0, 3), 0.5);
}

#[test]
fn outputs_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let input = corpus(&dir);
    let wos = fixture().display().to_string();
    for args in [
        vec!["compare", "--in", &input, "--in", &wos, "--level", "institution", "--scheme-b", "FRACTIONAL_LINKS"],
        vec!["qap", "--in", &wos, "--in", &input, "--level", "institution", "--scheme-b", "FRACTIONAL_LINKS", "--seed", "7"],
        vec!["metrics", "--in", &wos, "--report", "csv"],
        vec!["parse", "--in", &wos],
    ] {
        let first = run(&args);
        assert!(first.status.success(), "{args:?}");
        for _ in 0..3 {
            assert_eq!(run(&args).stdout, first.stdout, "{args:?}");
        }
    }
}

#[test]
fn duplicate_ids_across_files() {
    let dir = TempDir::new().unwrap();
    let input = corpus(&dir);
    assert_eq!(code(&["parse", "--in", &input, "--in", &input]), 2);
}

#[test]
fn filters_and_normalization_tables() {
    let dir = TempDir::new().unwrap();
    let wos = fixture().display().to_string();
    let out = run(&["parse", "--in", &wos, "--year", "2013-2014", "--report", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 4);

    let out = run(&["parse", "--in", &wos, "--require-country", "england", "--report", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 3, "{text}");

    let table = dir.path().join("inst.tsv");
    fs::write(&table, "# merge campuses\nKorea Univ\tSeoul Natl Univ\n").unwrap();
    let spec = format!("institution:{}", table.display());
    let out = run(&["net", "--in", &wos, "--level", "institution", "--norm-table", &spec]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains("Korea Univ,"), "{text}");

    let env_dir = TempDir::new().unwrap();
    fs::write(env_dir.path().join("country.tsv"), "South Korea\tKorea\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_fraccount"))
        .args(["net", "--in", &wos])
        .env("FRACCOUNT_NORM_DIR", env_dir.path())
        .output()
        .unwrap();
    assert!(String::from_utf8(out.stdout).unwrap().starts_with(",Korea,"));
}

#[test]
fn integer_and_fractional_share_cohesion() {
    let wos = fixture().display().to_string();
    let out = run(&["compare", "--in", &wos, "--level", "institution", "--scheme-b", "FRACTIONAL_LINKS"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["cohesionA"], v["cohesionB"]);
    assert_ne!(v["degreeA"], v["degreeB"]);
    assert_eq!(v["differences"].as_array().unwrap().len(), 33);
}
