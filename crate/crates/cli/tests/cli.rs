use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn szeged(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_szeged"))
        .args(args)
        .env_remove("SZEGED_MAX_N")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

/// The document without its timing field.
fn stable(out: &Output) -> Value {
    let mut doc = json(out);
    doc.as_object_mut().unwrap().remove("wall_ms");
    doc
}

fn quarters(v: &Value) -> i64 {
    assert_eq!(v["den"], 4);
    v["num"].as_i64().unwrap()
}

#[test]
fn compute_reports_exact_values() {
    let out = szeged(&["compute", "--g6", "Bw"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    let r = &doc["results"][0];
    assert_eq!(quarters(&r["edge_revised_szeged"]), 27);
    assert_eq!(r["edge_revised_szeged"]["decimal"], "6.75");
    assert_eq!((r["n"].as_u64(), r["m"].as_u64()), (Some(3), Some(3)));
    for field in ["tool_version", "seed", "workers", "wall_ms"] {
        assert!(doc.get(field).is_some(), "missing {field}");
    }

    let out = szeged(&["compute", "--g6", "Cl", "--edges"]);
    let r = &json(&out)["results"][0];
    assert_eq!(quarters(&r["edge_revised_szeged"]), 64);
    assert_eq!(r["wiener"], 8);
    let edges = r["edges"].as_array().unwrap();
    assert_eq!(edges.len(), 4);
    assert!(edges
        .iter()
        .all(|e| e["m_u"] == 1 && e["m_v"] == 1 && e["m_0"] == 2));
}

#[test]
fn compute_reads_files_and_stdin() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("paw.el");
    std::fs::write(&path, "4 4\n0 1\n1 2\n0 2\n0 3\n").unwrap();
    let out = szeged(&[
        "compute",
        "--file",
        path.to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("graph6,n,m,"));
    assert!(lines.next().unwrap().contains(",53,13.25"));

    let mut child = Command::new(env!("CARGO_BIN_EXE_szeged"))
        .args(["compute", "--stdin"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"Bw\nCl\n\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    let values: Vec<i64> = json(&out)["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| quarters(&r["edge_revised_szeged"]))
        .collect();
    assert_eq!(values, vec![27, 64]);
}

#[test]
fn compute_error_exit_codes() {
    assert_eq!(code(&szeged(&["compute", "--file", "missing.el"])), 2);
    assert_eq!(code(&szeged(&["compute", "--g6", "~~~"])), 2);
    // two input sources
    assert_eq!(code(&szeged(&["compute", "--g6", "Bw", "--stdin"])), 2);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("split.el");
    std::fs::write(&path, "3 1\n0 1\n").unwrap();
    assert_eq!(
        code(&szeged(&["compute", "--file", path.to_str().unwrap()])),
        3
    );
}

#[test]
fn build_emits_deterministic_graph6() {
    let out = szeged(&["build", "c1", "--n", "4", "--k", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "Cl\n");

    let paw = stdout(&szeged(&["build", "c0", "--n", "4", "--k", "1"]));
    assert_eq!(
        paw,
        stdout(&szeged(&["build", "c0", "--n", "4", "--k", "1"]))
    );
    let r = &json(&szeged(&["compute", "--g6", paw.trim()]))["results"][0];
    assert_eq!(quarters(&r["edge_revised_szeged"]), 53);

    let out = szeged(&["build", "bundle", "--cycles", "3,3", "--format", "edgelist"]);
    assert!(stdout(&out).starts_with("5 6\n"));

    let out = szeged(&["build", "c1", "--n", "4", "--k", "2"]);
    assert_eq!(code(&out), 4);
    assert!(String::from_utf8_lossy(&out.stderr).contains("3k+1"));
}

#[test]
fn enumerate_streams_graph6() {
    let out = szeged(&["enumerate", "--n", "5", "--k", "1"]);
    assert_eq!(stdout(&out).lines().count(), 5);
    let out = szeged(&["enumerate", "--n", "4", "--k", "1", "--labeled"]);
    assert_eq!(stdout(&out).lines().count(), 15);
    let out = szeged(&["enumerate", "--n", "13", "--k", "1"]);
    assert_eq!(code(&out), 5);
}

#[test]
fn search_reports_minimum_and_second_minimum() {
    let out = szeged(&["search", "--n", "4", "--k", "1", "--second"]);
    assert_eq!(code(&out), 0);
    let r = &json(&out)["reports"][0];
    assert_eq!(quarters(&r["min"]), 53);
    assert_eq!(quarters(&r["second_min"]), 64);

    let out = szeged(&["search", "--n", "5", "--k", "1", "--expect-thm32"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["expectations_met"], true);

    let out = szeged(&["search", "--n", "7", "--format", "csv", "--second"]);
    assert_eq!(stdout(&out).lines().count(), 1 + 4);

    assert_eq!(code(&szeged(&["search", "--n", "11", "--k", "1"])), 5);
}

#[test]
fn cap_override_is_bounded() {
    let run = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_szeged"))
            .args(["search", "--n", "11", "--k", "5"])
            .env("SZEGED_MAX_N", cap)
            .output()
            .unwrap()
    };
    assert_eq!(code(&run("11")), 0);
    assert_eq!(code(&run("13")), 5);
}

#[test]
fn verify_claims() {
    let out = szeged(&["verify", "thm3.2", "--max-n", "7"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["status"], "pass");
    assert!(doc["runs"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["report"]["status"] == "pass"));

    let out = szeged(&["verify", "lemma2.1", "--max-n", "7"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["runs"][0]["report"]["violation_count"], 0);

    let out = szeged(&[
        "verify",
        "thm3.2",
        "--m",
        "15",
        "--k",
        "2",
        "--samples",
        "500",
    ]);
    assert_eq!(code(&out), 0);
    let findings = json(&out)["runs"][0]["report"]["findings"].clone();
    assert!(findings
        .as_array()
        .unwrap()
        .iter()
        .any(|f| f["kind"] == "tie"));

    assert_eq!(code(&szeged(&["verify", "lemma9.9"])), 2);
    assert_eq!(code(&szeged(&["verify", "thm3.2", "--max-n", "12"])), 5);
}

#[test]
fn reruns_reproduce_every_non_timing_field() {
    let args = [
        "verify",
        "lemma4.1",
        "--max-n",
        "6",
        "--samples",
        "200",
        "--seed",
        "7",
    ];
    let first = stable(&szeged(&args));
    assert_eq!(first, stable(&szeged(&args)));
    assert_eq!(first["seed"], 7);

    let mut sequential = stable(&szeged(&[&args[..], &["--workers", "1"]].concat()));
    let mut parallel = stable(&szeged(&[&args[..], &["--workers", "3"]].concat()));
    assert_eq!(sequential["workers"], 1);
    sequential.as_object_mut().unwrap().remove("workers");
    parallel.as_object_mut().unwrap().remove("workers");
    assert_eq!(sequential, parallel);
}
