use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn semforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semforge"))
        .args(args)
        .env_remove("SEMFORGE_THREADS")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn construct_two_stars_json() {
    let o = semforge(&["construct", "--family", "2lk11-lk1n", "--params", "n=1", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["labels"], serde_json::json!([3, 6, 5, 2, 4, 1]));
    assert_eq!(v["window"], serde_json::json!([5, 10]));
    assert_eq!(v["sem"], true);
}

#[test]
fn every_named_family_constructs() {
    let cases: &[&[&str]] = &[
        &["--family", "2lk1m-lk1n", "--params", "m=2,n=3"],
        &["--family", "odd-lk1n", "--params", "s=1,n=2"],
        &["--family", "thm24", "--params", "m=1,n=2,s=1"],
        &["--family", "deer", "--spec", "1,0,1"],
        &["--family", "odd-cycle", "--params", "k=5"],
        &["--family", "corona-union-i", "--params", "k=3,n=1"],
        &["--family", "corona-union-iii", "--params", "k=3,s=1,n=1"],
    ];
    for args in cases {
        let mut full = vec!["construct"];
        full.extend_from_slice(args);
        let o = semforge(&full);
        assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert_eq!(json(&o)["sem"], true, "{args:?}");
    }
    for args in [&["--family", "loop"][..], &["--family", "cycle", "--params", "k=4"], &["--family", "caterpillar", "--spec", "2,0,1"]] {
        let mut full = vec!["construct"];
        full.extend_from_slice(args);
        let o = semforge(&full);
        assert_eq!(code(&o), 0, "{args:?}");
        assert_eq!(json(&o)["labels"], Value::Null);
    }
}

#[test]
fn construct_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.txt");
    let o = semforge(&["construct", "--family", "thm24", "--params", "m=2,n=1,s=1", "--format", "edgelist", "--out", g.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let labels = json(&semforge(&["construct", "--family", "thm24", "--params", "m=2,n=1,s=1"]))["labels"].clone();
    let p = labels.as_array().unwrap().len();
    let f = write(dir.path(), "f.json", &serde_json::json!({ "p": p, "labels": labels }).to_string());
    let o = semforge(&["verify", "--graph", g.to_str().unwrap(), "--labeling", &f]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["sem"], true);

    // the complement is SEM as well
    let o = semforge(&["complement", "--graph", g.to_str().unwrap(), "--labeling", &f]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["sem"], true);
}

#[test]
fn verify_rejects_repeated_labels() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.txt", "2 2\n1 1\n1 2\n");
    let f = write(dir.path(), "bad.json", r#"{"p": 2, "labels": [1, 1]}"#);
    let o = semforge(&["verify", "--graph", &g, "--labeling", &f]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("bijection"));
}

#[test]
fn verify_negative_is_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.txt", "2 2\n1 1\n2 2\n");
    let f = write(dir.path(), "f.json", r#"{"p": 2, "labels": [1, 2]}"#);
    let o = semforge(&["verify", "--graph", &g, "--labeling", &f]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["sem"], false);
}

#[test]
fn certify_two_stars_is_exhausted() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "twostar_1_1.txt", "4 4\n1 1\n1 2\n3 3\n3 4\n");
    let o = semforge(&["certify", "--graph", &g]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert_eq!(v["outcome"], "exhausted");
    assert_eq!(v["labels"], Value::Null);
    assert_eq!(v["unpruned_outcome"], "exhausted");
}

#[test]
fn search_modes_and_limits() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "star.txt", "4 4\n1 1\n1 2\n1 3\n1 4\n");
    let o = semforge(&["search", "--graph", &g, "--mode", "canonical"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["labels"], serde_json::json!([1, 2, 3, 4]));

    let o = semforge(&["search", "--graph", &g, "--mode", "all", "--threads", "3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["solutions"], 24);

    let big = write(dir.path(), "big.txt", "9 9\n1 1\n1 2\n1 3\n1 4\n5 5\n5 6\n5 7\n5 8\n5 9\n");
    let o = semforge(&["search", "--graph", &big, "--node-budget", "5"]);
    assert_eq!(code(&o), 3);
    assert_eq!(json(&o)["outcome"], "aborted");

    let o = semforge(&["search", "--graph", &g, "--edge-magic"]);
    assert_eq!(code(&o), 0);
    assert!(json(&o)["magic_sum"].is_u64());
}

#[test]
fn threads_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "star.txt", "3 3\n1 1\n1 2\n1 3\n");
    let o = Command::new(env!("CARGO_BIN_EXE_semforge"))
        .args(["search", "--graph", &g, "--mode", "all"])
        .env("SEMFORGE_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["solutions"], 6);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&semforge(&[])), 2);
    assert_eq!(code(&semforge(&["construct", "--family", "2lk11-lk1n", "--bogus"])), 2);
    let o = semforge(&["construct", "--family", "2lk11-lk1n", "--params", "m=1"]);
    assert_eq!(code(&o), 2);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("--params") && err.contains("Usage"), "{err}");
    assert_eq!(code(&semforge(&["construct", "--family", "deer", "--spec", "1,0"])), 2);
    assert_eq!(code(&semforge(&["verify", "--graph", "/nonexistent", "--labeling", "/nonexistent"])), 2);
}

#[test]
fn dot_output() {
    let o = semforge(&["construct", "--family", "2lk11-lk1n", "--params", "n=1", "--format", "dot"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("graph G {"));
    assert_eq!(text.lines().filter(|l| l.contains("--")).count(), 6);
}

#[test]
fn product_over_enumerated_family() {
    let dir = tempfile::tempdir().unwrap();
    let fam = dir.path().join("s22");
    let o = semforge(&["census", "--family", "snk", "--params", "n=2,k=2", "--out", fam.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(fam.join("family.json").exists());

    // oriented triangle, labels 1, 3, 2
    let host = write(dir.path(), "c3.txt", "3 3 d\n1 2\n2 3\n3 1\n");
    let hl = write(dir.path(), "c3.json", r#"{"p": 3, "labels": [1, 3, 2]}"#);
    let h = write(dir.path(), "h.txt", "1 2 0\n2 3 1\n3 1 0\n");
    let o = semforge(&[
        "product", "--graph", &host, "--family", fam.to_str().unwrap(), "--assignment", &h, "--labeling", &hl,
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!(v["p"], 6);
    assert!(v["window"].is_array());

    let o = semforge(&["product", "--graph", &host, "--family", fam.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
}

#[test]
fn corona_iso_product_check() {
    let o = semforge(&["product", "--family", "corona-iso", "--params", "k=4,n=2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["isomorphic"], true);
}

#[test]
fn census_and_matrix() {
    let o = semforge(&["census", "--params", "p=3"]);
    assert_eq!(code(&o), 0);
    assert!(!json(&o).as_array().unwrap().is_empty());

    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.txt", "6 6\n1 1\n1 2\n3 3\n3 4\n5 5\n5 6\n");
    let f = write(dir.path(), "f.json", r#"{"p": 6, "labels": [3, 6, 5, 2, 4, 1]}"#);
    let o = semforge(&["matrix", "--graph", &g, "--labeling", &f]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["compliant"], true);
    assert_eq!(v["rotation_matches_complement"], true);
}

#[test]
fn explore_reports_data() {
    let o = semforge(&["explore", "--params", "s=1,n=1"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["outcome"], "exhausted");
}

#[test]
fn order_over_bound_is_limit() {
    let dir = tempfile::tempdir().unwrap();
    let mut text = String::from("13 13\n1 1\n");
    for v in 2..=13 {
        text.push_str(&format!("1 {v}\n"));
    }
    let g = write(dir.path(), "big.txt", &text);
    assert_eq!(code(&semforge(&["search", "--graph", &g, "--mode", "all"])), 3);
}
