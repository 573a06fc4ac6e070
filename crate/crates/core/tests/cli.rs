use std::io::Write;
use std::process::{Command, Output};

use corequot::cli::RunReport;
use serde_json::Value;

fn corequot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_corequot"))
        .args(args)
        .env_remove("COREQUOT_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["--json"];
    argv.extend_from_slice(args);
    let out = corequot(&argv);
    let value = serde_json::from_str(&stdout(&out)).expect("valid JSON on stdout");
    (out.status.code().unwrap(), value)
}

fn batch_file(contents: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(contents.as_bytes()).unwrap();
    file
}

#[test]
fn json_reports_roundtrip() {
    let corpus: &[&[&str]] = &[
        &["quotient", "4,3,1,1"],
        &["quotient", "", "--padding", "4"],
        &["core", "5,2,2"],
        &["sign", "3,3"],
        &["schur", "2,2"],
        &["schur", "3,1", "--reduced"],
        &["character", "3,2", "2,2,1"],
        &["lr", "3,2,1", "2,1", "2,1"],
        &["lr-expand", "2,1", "1"],
        &["weight", "4,3,1,1"],
        &["basis", "1", "2"],
        &["verify", "theorem2", "--r", "2", "--n", "3"],
        &["verify", "theorem3", "2,2"],
        &["verify", "theorem3", "--max-size", "6"],
        &["verify", "multiplicity", "--max-degree", "12"],
        &["verify", "gauss", "--order", "20"],
        &["vertex", "apply", "--k", "1", "4"],
        &["vertex", "apply", "--k=-1", "--poly", "t1"],
        &["vertex", "commutators", "--degree", "4"],
    ];
    for args in corpus {
        let (code, value) = json(args);
        assert_eq!(code, 0, "{args:?}: {value}");
        let report: RunReport = serde_json::from_value(value.clone()).unwrap();
        let reprinted = serde_json::to_value(&report).unwrap();
        assert_eq!(reprinted, value, "{args:?}");
        assert!(report.payload.is_some(), "{args:?}");
    }
}

#[test]
fn worked_example_text_and_json() {
    let (code, value) = json(&["quotient", "4,3,1,1"]);
    assert_eq!(code, 0);
    assert_eq!(value["payload"]["beta_set"], serde_json::json!([7, 5, 2, 1]));
    assert_eq!(value["payload"]["core"], "2,1");
    assert_eq!(value["payload"]["quotient0"], "1");
    assert_eq!(value["payload"]["quotient1"], "1,1");

    let out = corequot(&["schur", "3,1", "--reduced"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1/8·t1^4");
}

#[test]
fn decomposition_json_shape() {
    let (_, value) = json(&["verify", "theorem3", "2,2"]);
    let expected = r#"{"subject":"2,2","basis":["4","2,1,1"],"formula":["-1","1"],"solved":["-1","1"],"match":true}"#;
    assert_eq!(value["payload"].to_string(), expected);
}

#[test]
fn invalid_input_exits_two() {
    for args in [
        vec!["core", "1,2"],
        vec!["quotient", "3,x"],
        vec!["character", "3", "2"],
        vec!["vertex", "apply", "--k", "1", "--poly", "t2"],
        vec!["frobnicate"],
    ] {
        let out = corequot(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    let (code, value) = json(&["core", "1,2"]);
    assert_eq!(code, 2);
    assert_eq!(value["status"], "error");
    assert!(value["message"].as_str().unwrap().contains("index 1"));
}

#[test]
fn batch_checks() {
    let file = batch_file("2,2\n1,1,1,1\n");
    let (code, value) = json(&["batch", file.path().to_str().unwrap(), "--check", "theorem3"]);
    assert_eq!(code, 0);
    assert_eq!(value["payload"]["checked"], 2);
    assert_eq!(value["payload"]["passed"], 2);
    let lines: Vec<_> = value["payload"]["results"].as_array().unwrap().iter().map(|r| r["line"].clone()).collect();
    assert_eq!(lines, [1, 2]);

    let empty = batch_file("");
    let (code, value) = json(&["batch", empty.path().to_str().unwrap(), "--check", "theorem3"]);
    assert_eq!(code, 0);
    assert_eq!(value["status"], "pass");
    assert_eq!(value["payload"]["checked"], 0);

    let bad = batch_file("1,2\n");
    let out = corequot(&["batch", bad.path().to_str().unwrap(), "--check", "theorem3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
}

#[test]
fn batch_preserves_input_order() {
    let listing: String = ["4,3,1,1", "# comment", "", "2,2", "5", "3,3,2", "1"].join("\n");
    let file = batch_file(&listing);
    for check in ["theorem3", "theorem2", "roundtrip"] {
        let (code, value) = json(&["batch", file.path().to_str().unwrap(), "--check", check]);
        assert_eq!(code, 0, "{check}: {value}");
        let parts: Vec<_> = value["payload"]["results"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r["partition"].as_str().unwrap().to_string())
            .collect();
        assert_eq!(parts, ["4,3,1,1", "2,2", "5", "3,3,2", "1"], "{check}");
    }
}

#[test]
fn thread_count_must_be_positive() {
    let file = batch_file("2,2\n");
    let path = file.path().to_str().unwrap();
    for bad in ["0", "-3", "many"] {
        let out = Command::new(env!("CARGO_BIN_EXE_corequot"))
            .args(["batch", path, "--check", "theorem3"])
            .env("COREQUOT_THREADS", bad)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(2), "{bad}");
    }
    let out = Command::new(env!("CARGO_BIN_EXE_corequot"))
        .args(["batch", path, "--check", "theorem3"])
        .env("COREQUOT_THREADS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn help_exits_zero() {
    let out = corequot(&["--help"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("quotient"));
}
