//! End-to-end runs of the `mustafin` binary.

use std::io::Write;
use std::process::{Command, Output};

use mustafin_cli::document::ConfigurationDocument;
use mustafin_cli::error::ErrorRecord;
use mustafin_cli::report::{
    classification_report, general_position_report, graph_report, hilbert_report, hull_report,
    ClassificationReport, GeneralPositionReport, GraphReport, HilbertReport, HullReport,
};
use mustafin_cli::verify::{random_configurations, verify, VerifyReport};
use mustafin_core::Configuration;
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;
use tempfile::NamedTempFile;

const STAIRCASE: &str = r#"{"d":3,"points":[[0,-1,-2],[0,-2,-4],[0,-3,-6]],"label":"staircase"}"#;
const PAIR: &str = r#"{"d":3,"points":[[0,0,0],[0,1,1]]}"#;

fn document(text: &str) -> NamedTempFile {
    let mut file = NamedTempFile::new().unwrap();
    file.write_all(text.as_bytes()).unwrap();
    file
}

fn mustafin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mustafin"))
        .args(args)
        .output()
        .unwrap()
}

fn run_ok(args: &[&str]) -> String {
    let out = mustafin(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn run_err(args: &[&str]) -> (i32, ErrorRecord) {
    let out = mustafin(args);
    let record = serde_json::from_slice(&out.stderr).unwrap();
    (out.status.code().unwrap(), record)
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap()
}

#[test]
fn classify_staircase() {
    let file = document(STAIRCASE);
    let out = json(&run_ok(&["classify", file.path().to_str().unwrap()]));
    assert_eq!(
        out["counts"],
        json(r#"{"total":6,"primary":3,"secondary":3}"#)
    );
    assert_eq!(out["general_position"], Value::Bool(true));
    assert_eq!(out["config"]["label"], "staircase");
    assert_eq!(out["partition"].as_array().unwrap().len(), 6);
}

#[test]
fn classify_pair() {
    let file = document(PAIR);
    let report: ClassificationReport =
        serde_json::from_str(&run_ok(&["classify", file.path().to_str().unwrap()])).unwrap();
    let components: Vec<(Vec<i64>, Vec<Vec<usize>>)> = report
        .vertices
        .iter()
        .filter(|v| v.is_component)
        .map(|v| (v.vertex.clone(), v.multidegrees.clone()))
        .collect();
    assert_eq!(
        components,
        vec![
            (vec![0, 0, 0], vec![vec![2, 0]]),
            (vec![0, 1, 1], vec![vec![0, 2], vec![1, 1]]),
        ]
    );
}

#[test]
fn hilbert_at_zero_is_one() {
    let file = document(PAIR);
    let path = file.path().to_str().unwrap();
    let out = json(&run_ok(&[
        "hilbert", path, "--vertex", "0,1,1", "--u", "0,0",
    ]));
    assert_eq!(out["value"], "1");
    let out = json(&run_ok(&[
        "hilbert", path, "--vertex", "0,0,0", "--u", "1,0",
    ]));
    // single tuple (2,0): C(1+2, 2) · C(0, 0)
    assert_eq!(out["value"], "3");
}

#[test]
fn local_model_output_is_exact() {
    assert_eq!(
        run_ok(&["local-model", "--d", "3"]),
        "{\"d\":3,\"points\":[[0,0,0],[0,1,1],[0,0,1]]}\n"
    );
}

#[test]
fn hull_lists_lattice_points() {
    let file = document(STAIRCASE);
    let out = json(&run_ok(&["hull", file.path().to_str().unwrap()]));
    assert_eq!(out["count"], 6);
    assert!(out["points"]
        .as_array()
        .unwrap()
        .contains(&json("[0,-2,-5]")));
}

#[test]
fn gp_reports_witness() {
    let pair = document(PAIR);
    let out = json(&run_ok(&["gp", pair.path().to_str().unwrap()]));
    assert_eq!(out["general_position"], Value::Bool(false));
    assert_eq!(out["witness"]["matrix"], json("[[0,0],[1,1]]"));
    let staircase = document(STAIRCASE);
    let out = json(&run_ok(&["gp", staircase.path().to_str().unwrap()]));
    assert_eq!(out, json(r#"{"general_position":true}"#));
}

#[test]
fn graph_json_and_dot() {
    let file = document(PAIR);
    let path = file.path().to_str().unwrap();
    let out = json(&run_ok(&["graph", path]));
    assert_eq!(out["edges"][0]["forward"], json("[1,0,0]"));
    assert_eq!(out["edges"][0]["backward"], json("[0,1,1]"));
    let dot = run_ok(&["graph", path, "--dot"]);
    assert!(dot.starts_with("graph hull {"));
    assert!(dot.contains("\"(0,0,0)\" -- \"(0,1,1)\""));
}

#[test]
fn table_format() {
    let file = document(STAIRCASE);
    let out = run_ok(&[
        "classify",
        file.path().to_str().unwrap(),
        "--format",
        "table",
    ]);
    assert!(out.contains("components: 6 total, 3 primary, 3 secondary"));
    assert!(out.contains("(0,-2,-5)"));
}

#[test]
fn verify_file_and_seed() {
    let file = document(STAIRCASE);
    let out = json(&run_ok(&[
        "verify",
        file.path().to_str().unwrap(),
        "--seed",
        "11",
        "--count",
        "5",
    ]));
    assert_eq!(out["passed"], Value::Bool(true));
    assert_eq!(out["configurations"], 6);
}

#[test]
fn output_is_deterministic() {
    let file = document(STAIRCASE);
    let path = file.path().to_str().unwrap();
    for args in [
        vec!["classify", path],
        vec!["graph", path],
        vec!["verify", "--seed", "5", "--count", "3"],
    ] {
        assert_eq!(mustafin(&args).stdout, mustafin(&args).stdout);
    }
}

#[test]
fn exit_codes_and_error_records() {
    let bad = document("{\"d\": 3, \"points\": [[0,1,");
    let (code, record) = run_err(&["hull", bad.path().to_str().unwrap()]);
    assert_eq!((code, record.kind.as_str()), (2, "parse"));

    let (code, record) = run_err(&["hull", "/nonexistent/config.json"]);
    assert_eq!((code, record.kind.as_str()), (2, "io"));

    let mismatched = document(r#"{"d":3,"points":[[0,1]]}"#);
    let (code, record) = run_err(&["classify", mismatched.path().to_str().unwrap()]);
    assert_eq!((code, record.kind.as_str()), (3, "dimension_mismatch"));

    let pair = document(PAIR);
    let path = pair.path().to_str().unwrap();
    let (code, record) = run_err(&["hilbert", path, "--vertex", "0,5,1", "--u", "0,0"]);
    assert_eq!((code, record.kind.as_str()), (3, "not_in_hull"));

    let (code, record) = run_err(&["hilbert", path, "--vertex", "0,x,1", "--u", "0,0"]);
    assert_eq!((code, record.kind.as_str()), (2, "parse"));

    let (code, record) = run_err(&["hilbert", path, "--vertex", "0,1,1", "--u", "0"]);
    assert_eq!((code, record.kind.as_str()), (3, "dimension_mismatch"));

    let (code, record) = run_err(&["local-model", "--d", "1"]);
    assert_eq!((code, record.kind.as_str()), (3, "ambient_too_small"));

    let (code, record) = run_err(&["verify"]);
    assert_eq!((code, record.kind.as_str()), (2, "usage"));

    let (code, record) = run_err(&["frobnicate"]);
    assert_eq!((code, record.kind.as_str()), (2, "usage"));
}

fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(value: &T) {
    let text = serde_json::to_string(value).unwrap();
    assert_eq!(&serde_json::from_str::<T>(&text).unwrap(), value);
}

#[test]
fn reports_round_trip_through_json() {
    let configs = random_configurations(0xfeed, 10);
    for config in &configs {
        let hull: HullReport = hull_report(config, Some("x".into()));
        round_trip(&hull);
        let classification: ClassificationReport = classification_report(config, None).unwrap();
        round_trip(&classification);
        round_trip(&classification.config);
        let graph: GraphReport = graph_report(config);
        round_trip(&graph);
        let gp: GeneralPositionReport = general_position_report(config);
        round_trip(&gp);
        let vertex = &classification.hull[0];
        let u = vec![1; config.n()];
        let hilbert: HilbertReport = hilbert_report(config, vertex, &u).unwrap();
        round_trip(&hilbert);
    }
    let verified: VerifyReport = verify(&configs);
    round_trip(&verified);
    let echo: ConfigurationDocument = ConfigurationDocument::from_configuration(
        &Configuration::from_raw(2, &[vec![3, 1]]).unwrap(),
        None,
    );
    round_trip(&echo);
    round_trip(&ErrorRecord {
        kind: "parse".into(),
        message: "m".into(),
    });
}
