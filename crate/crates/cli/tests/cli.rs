use std::process::{Command, Output};

use serde_json::Value;

fn twobridge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twobridge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = twobridge(args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn table_knot() {
    let v = json(&["slopes", "7/17", "--format", "json"]);
    let paths = v["paths"].as_array().unwrap();
    let ms: Vec<i64> = paths.iter().map(|p| p["m"].as_i64().unwrap()).collect();
    let slopes: Vec<i64> = paths.iter().map(|p| p["slope"].as_i64().unwrap()).collect();
    assert_eq!(ms, [4, 2, 1, -1, -3]);
    assert_eq!(slopes, [0, 4, 6, 10, 14]);
    assert_eq!(v["crossing_number"], 7);
}

#[test]
fn expansion_input() {
    let v = json(&["slopes", "[6,2,3]", "--format", "json"]);
    assert_eq!(v["q"], "45");
    assert_eq!(v["distinct"], 5);
}

#[test]
fn csv_and_text() {
    let out = twobridge(&["slopes", "7/17", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 6);

    let out = twobridge(&["slopes", "2/5"]);
    assert!(out.status.success());
    assert!(!out.stdout.is_empty());
}

#[test]
fn exit_codes() {
    assert_eq!(twobridge(&["slopes", "4/6"]).status.code(), Some(3));
    assert_eq!(twobridge(&["slopes", "1/4"]).status.code(), Some(3));
    assert_eq!(twobridge(&["slopes", "3/1"]).status.code(), Some(3));
    assert_eq!(twobridge(&["slopes", "seven"]).status.code(), Some(2));
    assert_eq!(twobridge(&["slopes"]).status.code(), Some(2));
    assert_eq!(
        twobridge(&["census", "--checks", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(
        twobridge(&["census", "--q-max", "100"]).status.code(),
        Some(2)
    );
    assert_eq!(
        twobridge(&["ors", "--seed", "[3]", "--word", "0:-"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn ors_example() {
    let v = json(&[
        "ors", "--seed", "[3]", "--word", "0:-,1:-", "--format", "json",
    ]);
    assert_eq!(v["raw"], "[3,0,3,2,3]");
    assert_eq!(v["reduced"], "[6,2,3]");
    assert_eq!(v["child"], "7/45");
    assert_eq!(v["parent"], "1/3");
    assert_eq!(v["dichotomy"], "at_least_five");
    assert_eq!(v["distinct"], 5);
}

#[test]
fn order_pair() {
    let v = json(&["order", "7/45", "1/3", "--format", "json"]);
    assert_eq!(v["verdict"]["survives"], serde_json::json!([1, 3]));
    let v = json(&["order", "7/17", "1/3", "--format", "json"]);
    assert_eq!(v["verdict"]["excluded"], "determinant");
}

#[test]
fn classify_and_scan() {
    let v = json(&["classify", "2/5", "--format", "json"]);
    assert!(!v["family"].is_null(), "{v}");
    let v = json(&["scan-minimality", "4/15", "--format", "json"]);
    assert_eq!(v["survivors"], serde_json::json!([]));
}

#[test]
fn census_is_clean_and_deterministic() {
    let args = [
        "census",
        "--q-max",
        "99",
        "--checks",
        "table1,thm32,cor33,lemma41",
        "--format",
        "json",
    ];
    let one = twobridge(&[&args[..], &["--jobs", "1"]].concat());
    let four = twobridge(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(
        one.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&one.stderr)
    );
    assert_eq!(one.stdout, four.stdout);
    let v: Value = serde_json::from_slice(&one.stdout).unwrap();
    assert_eq!(v["q_max"], 99);
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("twobridge-cli-{}.json", std::process::id()));
    let out = twobridge(&[
        "slopes",
        "7/17",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["distinct"], 5);
    std::fs::remove_file(path).unwrap();
}
