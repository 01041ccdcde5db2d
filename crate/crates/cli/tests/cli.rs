//! End-to-end tests driving the compiled binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hburch"))
}

fn write_json(dir: &tempfile::TempDir, name: &str, content: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn classify_all_ones_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_json(&dir, "m.json", r#"{"rows": [[1,1,1],[1,1,1]]}"#);
    let out = bin().arg("classify").arg("--matrix").arg(&m).output().unwrap();
    let v = stdout_json(&out);
    let verdict = &v["verdict"];
    assert_eq!(verdict["forced_acm_all"]["holds"], false);
    assert_eq!(verdict["realizable_reduced_connected_nonacm"]["holds"], false);
    assert_eq!(
        verdict["realizable_reduced_connected_nonacm"]["rule"],
        "three-generic-points-exception"
    );
    assert_eq!(verdict["realizable_disconnected_nonacm"]["holds"], true);
    assert_eq!(verdict["buchsbaum_nonacm"]["holds"], false);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_json(&dir, "m.json", r#"{"rows": [[2,3,3],[1,2,2]]}"#);
    let run = || bin().arg("classify").arg("--matrix").arg(&m).output().unwrap().stdout;
    assert_eq!(run(), run());
    let synth = || {
        bin()
            .args(["synthesize", "--goal", "maxdef", "--matrix"])
            .arg(&m)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(synth(), synth());
}

#[test]
fn synthesize_buchsbaum_without_entry_two_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_json(&dir, "m.json", r#"{"rows": [[1,1,1],[1,1,1]]}"#);
    let out = bin()
        .args(["synthesize", "--goal", "buchsbaum", "--matrix"])
        .arg(&m)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "NotRealizable");
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_json(&dir, "m.json", r#"{"rows": [[1,2,3],[1,1,1]]}"#);
    let out = bin().arg("classify").arg("--matrix").arg(&m).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("input error"));
}

#[test]
fn synthesize_then_replay_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_json(&dir, "m.json", r#"{"rows": [[2,2,3],[2,2,3]]}"#);
    let out = bin()
        .args(["synthesize", "--goal", "nonacm", "--mode", "union", "--matrix"])
        .arg(&m)
        .output()
        .unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["verification"]["matches_target"], true);
    let recipe = write_json(&dir, "recipe.json", &v["recipe"].to_string());
    let out = bin()
        .args(["replay", "--recipe"])
        .arg(&recipe)
        .arg("--target")
        .arg(&m)
        .output()
        .unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["report"]["matches_target"], true);
    assert_eq!(v["report"]["degree_consistent"], true);
}

#[test]
fn raw_pipeline_replay() {
    let dir = tempfile::tempdir().unwrap();
    let start = write_json(&dir, "start.json", r#"{"gens": [2,1], "syz": [3], "ambient": 2}"#);
    let pipeline = write_json(
        &dir,
        "pipe.json",
        r#"[{"op": "ci_link", "f": 2, "g": 4, "f_is_min_gen": true, "g_is_min_gen": false}]"#,
    );
    let out = bin()
        .args(["replay", "--start"])
        .arg(&start)
        .arg("--pipeline")
        .arg(&pipeline)
        .output()
        .unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["final"]["gens"], serde_json::json!([3, 2]));
    assert_eq!(v["final"]["syz"], serde_json::json!([5]));
}

#[test]
fn selfcheck_small_enumeration() {
    let out = bin()
        .args(["selfcheck", "--max-t", "2", "--max-entry", "3"])
        .output()
        .unwrap();
    let v = stdout_json(&out);
    assert!(v["oracle_matches"].as_u64().unwrap() > 50);
    assert_eq!(v["oracle_matches"], v["degree_matrices"]);
}

#[test]
fn batch_equals_fold_of_single_invocations() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = write_json(
        &dir,
        "corpus.json",
        r#"{"entries": [
            {"id": "a", "command": "hvector", "payload": {"rows": [[2,4]]}},
            {"id": "b", "command": "bounds", "payload": {"rows": [[1,2,2],[1,2,2]]}},
            {"id": "c", "command": "invert", "payload": {"h": [1,2]}}
        ]}"#,
    );
    let out = bin().arg("batch").arg("--corpus").arg(&corpus).output().unwrap();
    let batch = stdout_json(&out);
    let results = batch["results"].as_array().unwrap();
    assert_eq!(results.len(), 3);
    assert_eq!(
        results.iter().map(|r| r["id"].as_str().unwrap()).collect::<Vec<_>>(),
        vec!["a", "b", "c"]
    );

    // single invocations give the same outputs
    let m = write_json(&dir, "m.json", r#"{"rows": [[2,4]]}"#);
    let single = stdout_json(&bin().arg("hvector").arg("--matrix").arg(&m).output().unwrap());
    assert_eq!(&results[0]["output"], &single);

    let b = write_json(&dir, "b.json", r#"{"rows": [[1,2,2],[1,2,2]]}"#);
    let single = stdout_json(&bin().arg("bounds").arg("--matrix").arg(&b).output().unwrap());
    assert_eq!(&results[1]["output"], &single);

    let h = write_json(&dir, "h.json", r#"{"h": [1,2]}"#);
    let single = stdout_json(&bin().arg("invert").arg("--hvector").arg(&h).output().unwrap());
    assert_eq!(&results[2]["output"], &single);
}

#[test]
fn regression_corpus_matches_expectations() {
    let corpus = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/corpus.json");
    let out = bin().arg("batch").arg("--corpus").arg(&corpus).output().unwrap();
    let v = stdout_json(&out);
    for result in v["results"].as_array().unwrap() {
        assert_eq!(
            result["matches_expected"],
            true,
            "corpus entry {} diverged: {}",
            result["id"],
            result["output"]
        );
    }
}

#[test]
fn batch_rejects_duplicate_ids() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = write_json(
        &dir,
        "corpus.json",
        r#"{"entries": [
            {"id": "dup", "command": "betti", "payload": {"rows": [[2,4]]}},
            {"id": "dup", "command": "betti", "payload": {"rows": [[2,4]]}}
        ]}"#,
    );
    let out = bin().arg("batch").arg("--corpus").arg(&corpus).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_hvector_and_lifting_table() {
    let dir = tempfile::tempdir().unwrap();
    let h = write_json(&dir, "h.json", r#"{"h": [1,2]}"#);
    let out = bin().arg("classify").arg("--hvector").arg(&h).output().unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["verdict"]["connected_available"]["holds"], false);

    let b = write_json(&dir, "b.json", r#"{"gens": [3,3], "syz": [5,5], "ambient": 3}"#);
    let out = bin().arg("classify").arg("--betti").arg(&b).output().unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["verdict"]["forced_acm"]["holds"], false);
    assert_eq!(v["verdict"]["buchsbaum_possible"]["holds"], false);
}
