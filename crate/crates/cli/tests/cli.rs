use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn grtame(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grtame")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

#[test]
fn band_measure_on_a32() {
    let out = grtame(&["measure", "--cycle", "+++--", "--band", "m=1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["results"][0]["measure"], serde_json::json!([1, 2, 3, 4, 5]));
    assert_eq!(v["config"]["quiver"], "+++--");
    assert_eq!(v["passed"], true);
}

#[test]
fn string_measure_and_lambda_samples() {
    let out = grtame(&["measure", "--cycle", "+++--", "--string", "a2 a1 a0", "--lambda", "1,2,-3/2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let rows = v["results"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    for r in rows {
        assert_eq!(r["measure"], serde_json::json!([1, 2, 3, 4]));
    }
}

#[test]
fn simple_module_measure() {
    let out = grtame(&["measure", "--cycle", "+-", "--string", "e0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"][0]["measure"], serde_json::json!([1]));
}

#[test]
fn malformed_input_exits_2() {
    for args in [
        &["measure", "--cycle", "+x-", "--band", "m=1"][..],
        &["measure", "--cycle", "+-", "--band", "one"],
        &["measure", "--cycle", "+-", "--string", "a7"],
        &["successors", "--cycle", "+-", "--from", "{2,1}"],
        &["verify", "--cycle", "+-", "no_such_property"],
        &["enumerate"],
    ] {
        let out = grtame(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("error"), "{args:?}");
    }
}

#[test]
fn missing_quiver_file_exits_2() {
    let out = grtame(&["enumerate", "--quiver", "/nonexistent/q.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn quiver_document_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k.json");
    fs::write(&path, r#"{"vertices": 2, "arrows": [["a0", 0, 1], ["a1", 0, 1]]}"#).unwrap();
    let out = grtame(&["measure", "--quiver", path.to_str().unwrap(), "--band", "m=2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["results"][0]["measure"], serde_json::json!([1, 2, 4]));

    let line = dir.path().join("a3.json");
    fs::write(&line, r#"{"vertices": 3, "arrows": [["x", 0, 1], ["y", 1, 2]]}"#).unwrap();
    let out = grtame(&["enumerate", "--quiver", line.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"].as_array().unwrap().len(), 6);
}

#[test]
fn reruns_are_byte_identical() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for d in [&a, &b] {
        let out = grtame(&["partition", "--cycle", "++-", "--max-len", "9", "--out", d.path().to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    for f in ["partition.json", "partition.csv"] {
        assert_eq!(fs::read(a.path().join(f)).unwrap(), fs::read(b.path().join(f)).unwrap(), "{f}");
    }
}

#[test]
fn csv_headers_carry_bound_and_status() {
    let d = tempfile::tempdir().unwrap();
    let out = grtame(&[
        "successors",
        "--cycle",
        "+-",
        "--max-len",
        "8",
        "--from",
        "{1,2}",
        "--steps",
        "3",
        "--out",
        d.path().to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!d.path().join("successors.json").exists());
    let text = fs::read_to_string(d.path().join("successors.csv")).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("from,successor,certification,witnesses,bound"));
    assert!(lines.next().unwrap().starts_with("\"[1,2]\",\"[1,2,4]\",certified"));
}

#[test]
fn predecessors_report_on_a32() {
    let out = grtame(&["predecessors", "--cycle", "+++--", "--max-len", "15"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["results"]["h1_certified"], true);
    assert_eq!(v["results"]["tables"].as_array().unwrap().len(), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("BOUNDED"));
}

#[test]
fn verify_all_passes_on_small_orientation() {
    let out = grtame(&["verify", "--cycle", "++-", "all"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["results"].as_array().unwrap().len(), 24);
}

#[test]
fn paper_examples_all_match() {
    let out = grtame(&["paper-examples"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["results"].as_array().unwrap().iter().all(|r| r["matches"] == true));
}
