use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn octoplane(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_octoplane")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("octoplane-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    std::fs::create_dir_all(&d).unwrap();
    d
}

fn fixtures_dir() -> PathBuf {
    let d = scratch("fixtures");
    let o = octoplane(&["fixtures", "--out", d.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    d
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&octoplane(&[])), 2);
    assert_eq!(code(&octoplane(&["frobnicate"])), 2);
    assert_eq!(code(&octoplane(&["search", "--m", "9"])), 2);
    assert_eq!(code(&octoplane(&["--jobs", "0", "flips", "census"])), 2);
    let o = octoplane(&["search", "--m", "9", "--d", "4", "--group", "nonsense", "--min-facets", "1"]);
    assert_eq!(code(&o), 2);
    assert_eq!(code(&octoplane(&["--help"])), 0);
}

#[test]
fn data_errors_exit_3() {
    let o = octoplane(&["analyze", "sdist", "--complex", "missing.dat"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing.dat"));
    let d = scratch("bad");
    let bad = d.join("bad.dat");
    std::fs::write(&bad, "2\n110\n1x1\n").unwrap();
    assert_eq!(code(&octoplane(&["analyze", "sdist", "--complex", s(&bad)])), 3);
}

#[test]
fn verify_certifies_and_rejects() {
    let fx = fixtures_dir();
    let out = scratch("verify");
    let o = octoplane(&["verify", "--complex", s(&fx.join("CP2_9.dat")), "--out", s(&out)]);
    assert_eq!(code(&o), 0);
    assert!(out.join("certificate.txt").exists());
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out.join("report.json")).unwrap()).unwrap();
    assert_eq!(report["command"], "verify");
    assert_eq!(report["ok"], true);

    // a single triangle is not a weak pseudomanifold
    let tri = out.join("tri.dat");
    std::fs::write(&tri, "1\n111\n").unwrap();
    assert_eq!(code(&octoplane(&["verify", "--complex", s(&tri)])), 1);
}

#[test]
fn sym_filters_the_normalizer() {
    let fx = fixtures_dir();
    let o = octoplane(&["--format", "json", "analyze", "sym", "--complex", s(&fx.join("K2.dat")), "--group", "g351", "--within", "normalizer"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["order"], 351);
}

#[test]
fn search_writes_complexes() {
    let out = scratch("search");
    let o = octoplane(&["search", "--m", "6", "--d", "2", "--min-facets", "10", "--complementary", "--out", s(&out)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let dats: Vec<_> = std::fs::read_dir(&out)
        .unwrap()
        .filter_map(|e| e.ok())
        .filter(|e| e.file_name().to_string_lossy().ends_with(".dat"))
        .collect();
    // labelled copies of the six-vertex projective plane: 6!/60
    assert_eq!(dats.len(), 12);
    let text = std::fs::read_to_string(dats[0].path()).unwrap();
    assert!(text.starts_with("10\n"));
}

#[test]
fn output_is_independent_of_jobs() {
    let fx = fixtures_dir();
    let k = fx.join("CP2_9.dat");
    let one = octoplane(&["--jobs", "1", "analyze", "sdist", "--complex", s(&k)]);
    let two = octoplane(&["--jobs", "2", "analyze", "sdist", "--complex", s(&k)]);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, two.stdout);
    let one = octoplane(&["--jobs", "1", "search", "--m", "6", "--d", "2", "--min-facets", "10"]);
    let two = octoplane(&["--jobs", "3", "search", "--m", "6", "--d", "2", "--min-facets", "10"]);
    assert_eq!(one.stdout, two.stdout);
}

#[test]
fn census_json() {
    let o = octoplane(&["--format", "json", "flips", "census"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["command"], "flips census");
    assert!(v["result"].to_string().contains("630"));
}
