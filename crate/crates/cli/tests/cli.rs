use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nonic-index")).args(args).output().expect("binary runs")
}

fn envelope(args: &[&str]) -> (Value, i32) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = run(&all);
    let v: Value = serde_json::from_slice(&out.stdout).expect("stdout is one JSON document");
    (v, out.status.code().unwrap())
}

#[test]
fn classify_json_reports_the_index() {
    let (v, code) = envelope(&["classify", "--a", "1392", "--b", "768"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["command"], "classify");
    assert_eq!(v["input"]["a"], "1392");
    assert_eq!(v["result"]["i_k"]["exact"], "2");
}

#[test]
fn classify_text_for_183_296() {
    let out = run(&["classify", "--a", "183", "--b", "296"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("p = 2: v_p(i(K)) = 3"), "{text}");
    assert!(text.contains("p = 3: v_p(i(K)) = 0"), "{text}");
    assert!(text.contains("i(K) = 8"), "{text}");
}

#[test]
fn classify_single_prime() {
    let (v, code) = envelope(&["classify", "--a", "7335", "--b", "24184", "--prime", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["prime"], 3);
    assert_eq!(v["result"]["nu"]["value"], 1);
    let (v, _) = envelope(&["classify", "--a", "51", "--b", "122", "--prime", "11"]);
    assert_eq!(v["result"]["nu"]["value"], 0);
}

#[test]
fn negative_inputs_parse() {
    let (v, code) = envelope(&["classify", "--a", "-35", "--b", "-20"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["input"]["a"], "-35");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["classify", "--a", "0", "--b", "0"]).status.code(), Some(3));
    let (v, code) = envelope(&["classify", "--a", "-9", "--b", "8"]);
    assert_eq!(code, 3);
    assert_eq!(v["result"]["error"]["kind"], "reducible");
    assert_eq!(run(&["classify", "--a", "1e3", "--b", "1"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--a", "1", "--b", "1", "--prime", "4"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "dedekind", "--prime", "5"]).status.code(), Some(2));
}

#[test]
fn polygon_examples() {
    let (v, code) = envelope(&["polygon", "--a", "5", "--b", "2", "--p", "2", "--phi", "x-1"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["vertices"], serde_json::json!([[0, 3], [1, 1], [8, 0]]));

    let (v, _) = envelope(&["polygon", "--a", "16", "--b", "8", "--p", "2", "--phi", "x"]);
    let side = &v["result"]["sides"][0];
    assert_eq!(side["residual"], "y^3 + 1");
    assert_eq!(side["factors"], "(y + 1)(y^2 + y + 1)");

    let (v, _) = envelope(&["polygon", "--a", "2", "--b", "2", "--p", "2", "--phi", "x"]);
    assert_eq!(v["result"]["sides"].as_array().unwrap().len(), 1);
    assert_eq!(v["result"]["sides"][0]["e"], 9);
}

#[test]
fn polygon_rejects_a_non_factor() {
    let out = run(&["polygon", "--a", "2", "--b", "2", "--p", "2", "--phi", "x-1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("does not reduce to a factor"));
}

#[test]
fn polygon_shifted_lift() {
    // (7, 8) mod 16: the double root of F mod 2 is isolated by x - u
    let (v, code) = envelope(&["polygon", "--a", "183", "--b", "296", "--p", "2", "--phi", "shifted"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["result"]["regular"], true);
}

#[test]
fn verify_suites() {
    let (v, code) = envelope(&["verify", "--suite", "examples"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["classes_checked"], 7);
    let (v, code) = envelope(&["verify", "--suite", "dedekind", "--prime", "3", "--modulus", "9", "--lifts", "10", "--seed", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["mismatches"].as_array().unwrap().len(), 0);
    let (_, code) = envelope(&["verify", "--suite", "agreement", "--prime", "5", "--modulus", "5"]);
    assert_eq!(code, 0);
    let (_, code) = envelope(&["verify", "--suite", "tables"]);
    assert_eq!(code, 0);
}

#[test]
fn verify_writes_csv() {
    let path = std::env::temp_dir().join(format!("nonic-index-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    let out = run(&["verify", "--suite", "agreement", "--prime", "7", "--modulus", "7", "--lifts", "1", "--csv", p]);
    assert!(out.status.success());
    let mut rd = csv::Reader::from_path(&path).unwrap();
    assert_eq!(rd.headers().unwrap(), vec!["a", "b", "prime", "nu", "rule", "splitting", "status"]);
    assert_eq!(rd.records().count(), 49);
    std::fs::remove_file(path).ok();
}

#[test]
fn json_round_trips() {
    for args in [
        vec!["classify", "--a", "126", "--b", "40130"],
        vec!["polygon", "--a", "18", "--b", "62", "--p", "3", "--phi", "x-1"],
        vec!["verify", "--suite", "tables"],
    ] {
        let (v, _) = envelope(&args);
        let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(v, again);
    }
}

#[test]
fn same_seed_same_report() {
    let args = ["verify", "--suite", "agreement", "--prime", "3", "--modulus", "9", "--seed", "9"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
