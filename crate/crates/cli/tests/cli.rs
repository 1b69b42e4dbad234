use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_e36")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().unwrap(), v)
}

#[test]
fn parse_prints_canonical_forms() {
    let (code, v) = json(&["parse", "x3*d25 -x2*d35+2 * x5*d23"]);
    assert_eq!(code, 0);
    assert_eq!(v["canonical"], "x3*d25 - x2*d35 + 2*x5*d23");
    let (_, named) = json(&["parse", "e0"]);
    assert_eq!(v["element"], named["element"]);

    let bad = run(&["parse", "x5*d23"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("not closed"));
    let syntax = run(&["parse", "x1*(d23"]);
    assert_eq!(syntax.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&syntax.stderr).contains("position 7"));
}

#[test]
fn bracket_grade_weight() {
    let (code, v) = json(&["bracket", "x3*d35", "d14"]);
    assert_eq!(code, 0);
    assert_eq!(v["bracket"], "x3*dp2");
    let (_, v) = json(&["bracket", "d14", "d15"]);
    assert_eq!(v["zero"], true);

    let (_, v) = json(&["grade", "--which", "secondary", "d12"]);
    assert_eq!(v["degree"], -1);
    let (_, v) = json(&["grade", "--which", "consistent", "dp1 + d14"]);
    assert_eq!(v["degree"], Value::Null);
    assert_eq!(v["components"]["-2"], "dp1");

    let (_, v) = json(&["weight", "e0prime"]);
    assert_eq!(v["weight"], serde_json::json!([0, -2, -1, "1/3"]));
    assert_eq!(run(&["weight", "x1*dp2 + x4*dp5"]).status.code(), Some(2));
}

#[test]
fn relations_and_verify_exit_codes() {
    let (code, v) = json(&["relations"]);
    assert_eq!(code, 0);
    let devs = v.as_array().unwrap().iter().filter(|r| r["status"] == "deviation").count();
    assert_eq!(devs, 1);

    let (code, v) = json(&["verify", "3.7", "--param", "pmax=2"]);
    assert_eq!(code, 0);
    assert_eq!(v["lemma-id"], "3.7");
    assert_eq!(v["status"], "pass");
    assert_eq!(v["parameters"]["pmax"], "2");
    let (code, v) = json(&["verify", "relations"]);
    assert_eq!((code, v["status"].as_str()), (0, Some("deviation")));

    assert_eq!(run(&["verify", "9.99"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "3.7", "--param", "pmax"]).status.code(), Some(2));
    assert_eq!(run(&["hwv", "--p", "1"]).status.code(), Some(2));
}

#[test]
fn singular_schema() {
    let (code, v) = json(&["singular", "--p", "0", "--q", "0", "--r", "0", "--y", "0", "--max-depth", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["F"], serde_json::json!({"p": 0, "q": 0, "r": 0, "y": "0/1"}));
    assert_eq!(v["maxDepth"], 1);
    let found = v["found"].as_array().unwrap();
    assert_eq!(found.len(), 1);
    assert_eq!(found[0]["depth"], 1);
    assert_eq!(found[0]["weight"], serde_json::json!([1, 0, 1, "-1/3"]));
    assert_eq!(
        found[0]["terms"],
        serde_json::json!([{"alpha": [0, 0, 0], "dminus": [], "dplus": [1], "fIndex": 0, "coeff": "1/1"}])
    );

    let (_, v) = json(&["singular", "--p", "0", "--q", "0", "--r", "0", "--y", "1", "--max-depth", "1"]);
    assert!(v["found"].as_array().unwrap().is_empty());

    let (_, v) = json(&["singular", "--p", "0", "--q", "0", "--r", "0", "--max-depth", "1", "--parametric-y"]);
    assert_eq!(v["conditions"][0]["poly-in-y"], "y");
    assert_eq!(v["conditions"][0]["rational-roots"], serde_json::json!(["0/1"]));
    assert_eq!(run(&["singular", "--p", "0", "--q", "0", "--r", "0", "--max-depth", "1"]).status.code(), Some(2));
}

#[test]
fn scan_schema_and_determinism() {
    let args = ["scan", "--pmax", "1", "--qmax", "1", "--r", "0,1", "--max-depth", "2", "--include-boundary"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 8);
    let keys: Vec<(u64, u64, u64)> = rows
        .iter()
        .map(|r| (r["p"].as_u64().unwrap(), r["q"].as_u64().unwrap(), r["r"].as_u64().unwrap()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    let first = &rows[0];
    assert_eq!((first["p"].as_u64(), first["q"].as_u64(), first["r"].as_u64()), (Some(0), Some(0), Some(0)));
    assert!(first["conditions"].as_array().unwrap().iter().any(|c| c["poly-in-y"] == "y"));
    for r in rows {
        if r["p"].as_u64().unwrap() * r["q"].as_u64().unwrap() != 0 {
            assert!(r["conditions"].as_array().unwrap().is_empty());
        }
    }
}

#[test]
fn hwv_lines() {
    let (code, v) = json(&["hwv", "--p", "2", "--q", "2", "--sign", "-"]);
    assert_eq!(code, 0);
    assert_eq!(v["lines"].as_array().unwrap().len(), 8);
    let (_, v) = json(&["hwv", "--p", "0", "--q", "1", "--sign", "+", "--annihilated"]);
    let tags: Vec<&str> = v["lines"].as_array().unwrap().iter().map(|l| l["tag"].as_str().unwrap()).collect();
    assert_eq!(tags, vec!["T0", "T2", "T3"]);
}

#[test]
fn pretty_output_is_text() {
    let out = run(&["verify", "3.1", "--pretty"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("3.1: pass"));
    assert!(serde_json::from_str::<Value>(&text).is_err());
}
