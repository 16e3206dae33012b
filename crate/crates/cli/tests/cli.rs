use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use circdepth::pointfile;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_circdepth"))
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("circdepth-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn generate_outputs() {
    let out = run(&["generate", "random", "--n", "10", "--seed", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 10);

    let out = run(&["generate", "halving", "--n", "4"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let file = pointfile::parse(&text).unwrap();
    assert_eq!((file.points.len(), file.pairs.len()), (8, 4));

    let out = run(&["generate", "two-colored-convex", "--n", "4"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|l| l.ends_with(" R") || l.ends_with(" B")));
    assert_eq!(rows.iter().filter(|l| l.ends_with(" R")).count(), 4);
}

#[test]
fn generated_files_round_trip() {
    for args in [
        &["generate", "random", "--n", "9", "--seed", "4"][..],
        &["generate", "convex", "--n", "7", "--seed", "2"],
        &["generate", "halving", "--n", "3"],
        &["generate", "seven-region", "--n", "3"],
        &["generate", "random", "--n", "3", "--blue", "2", "--seed", "8"],
    ] {
        let out = run(args);
        assert!(out.status.success(), "{args:?}");
        let text = String::from_utf8(out.stdout).unwrap();
        let again = pointfile::format(&pointfile::parse(&text).unwrap());
        assert_eq!(again, text, "{args:?}");
    }
}

#[test]
fn exit_codes() {
    let bad = tmp("bad.pts");
    std::fs::write(&bad, "0 0\n1 x\n").unwrap();
    assert_eq!(run(&["analyze", bad.to_str().unwrap()]).status.code(), Some(1));
    let col = tmp("col.pts");
    std::fs::write(&col, "0 0\n1 1\n2 2\n").unwrap();
    let out = run(&["analyze", col.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stderr).unwrap().contains("collinear (0,1,2)"));
    assert_eq!(run(&["generate", "halving", "--n", "1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    let quad = data("quad.pts");
    let q = quad.to_str().unwrap();
    assert_eq!(run(&["verify", q]).status.code(), Some(0));
    assert_eq!(run(&["verify", q, "--checks", "census-equality"]).status.code(), Some(4));
    assert_eq!(run(&["verify", q, "--checks", "nope"]).status.code(), Some(1));
    assert_eq!(run(&["render", q, "profile", "0", "9"]).status.code(), Some(1));
}

#[test]
fn analyze_anchors() {
    let tri = String::from_utf8(run(&["analyze", data("triangle.pts").to_str().unwrap()]).stdout).unwrap();
    let v: serde_json::Value = serde_json::from_str(&tri).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["extremal"]["minimax"]["K"], 1);
    assert_eq!(v["extremal"]["maximin"]["k"], 0);
    assert_eq!(v["tables"]["c"][0], 1);
    assert_eq!(v["points"][1]["x"], "4/1");

    let quad = String::from_utf8(run(&["analyze", data("quad.pts").to_str().unwrap()]).stdout).unwrap();
    let v: serde_json::Value = serde_json::from_str(&quad).unwrap();
    assert_eq!(v["tables"]["c"], serde_json::json!([2, 2]));

    let out = run(&["verify", data("triangle.pts").to_str().unwrap(), "--checks", "census"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], true);

    let r20 = tmp("r20.pts");
    run(&["generate", "random", "--n", "20", "--seed", "11", "--output", r20.to_str().unwrap()]);
    let out = run(&["verify", r20.to_str().unwrap(), "--checks", "minimax"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["checks"][0]["rhs"], 12);
    assert!(v["checks"][0]["lhs"].as_i64().unwrap() <= 12);
}

#[test]
fn renderings() {
    let svg = |args: &[&str]| String::from_utf8(run(args).stdout).unwrap();
    let tri = svg(&["render", data("triangle.pts").to_str().unwrap(), "points"]);
    assert!(tri.starts_with("<?xml") && tri.trim_end().ends_with("</svg>"));
    assert_eq!(tri.matches("<circle").count(), 3);

    let prof = svg(&["render", data("quad.pts").to_str().unwrap(), "profile", "0", "2"]);
    assert!(prof.contains(">1,0,1</text>"));

    let h = tmp("h3.pts");
    run(&["generate", "halving", "--n", "3", "--output", h.to_str().unwrap()]);
    let c = svg(&["render", h.to_str().unwrap(), "construction"]);
    assert_eq!(c.matches("<circle").count(), 6);
    assert_eq!(c.matches(r##"stroke="#e69f00""##).count(), 3);
}
