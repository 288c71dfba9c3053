//! End-to-end runs of the `cutgap` binary: exit codes, output formats, and
//! the documented error paths.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn cutgap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cutgap"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).to_string()
}

fn write(dir: &Path, name: &str, content: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn k4_json() -> String {
    let mut edges = Vec::new();
    for u in 0..4 {
        for v in u + 1..4 {
            edges.push(format!(r#"{{"u":{u},"v":{v},"cost":"1"}}"#));
        }
    }
    format!(r#"{{"n":4,"edges":[{}]}}"#, edges.join(","))
}

#[test]
fn construct_t3_has_nine_entries_six_halves() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("fib3.json");
    let out = cutgap(&["construct", "--t", "3", "--out", out_path.to_str().unwrap()]);
    assert!(out.status.success());
    let body = std::fs::read_to_string(&out_path).unwrap();
    let json: serde_json::Value = serde_json::from_str(&body).unwrap();
    let edges = json["edges"].as_array().unwrap();
    assert_eq!(edges.len(), 9);
    let halves = edges
        .iter()
        .filter(|e| e["x"].as_str() == Some("1/2"))
        .count();
    assert_eq!(halves, 6);
}

#[test]
fn gap_of_t3_prints_nine_eighths() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("fib3.json");
    cutgap(&["construct", "--t", "3", "--out", out_path.to_str().unwrap()]);
    let out = cutgap(&["gap", "--solution", out_path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "9/8");
}

#[test]
fn verify_certifies_constructions_and_refutes_bogus_vectors() {
    let dir = tempfile::tempdir().unwrap();
    let fib = dir.path().join("fib4.json");
    cutgap(&["construct", "--t", "4", "--out", fib.to_str().unwrap()]);
    let ok = cutgap(&["verify", "--solution", fib.to_str().unwrap(), "--k", "2"]);
    assert!(ok.status.success());
    assert!(stdout(&ok).contains("extreme"));

    // A path with unit values violates the leaf cuts at k = 2.
    let bogus = write(
        dir.path(),
        "bogus.json",
        r#"{"n":3,"edges":[{"u":0,"v":1,"x":"1"},{"u":1,"v":2,"x":"1"}]}"#,
    );
    let bad = cutgap(&["verify", "--solution", bogus.to_str().unwrap(), "--k", "2"]);
    assert_eq!(bad.status.code(), Some(1));
    let err = stderr(&bad);
    assert!(err.contains("cut") || err.contains("degree"), "got: {err}");
}

#[test]
fn solve_reports_exact_values_and_transcripts() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "k4.json", &k4_json());
    let cert = dir.path().join("cert.json");
    let out = cutgap(&[
        "solve",
        "--lp",
        "nkb",
        "--k",
        "2",
        "--graph",
        graph.to_str().unwrap(),
        "--certificate",
        cert.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("value 4"));
    let transcript: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(transcript["value"].as_str(), Some("4"));
    assert!(!transcript["active_cuts"].as_array().unwrap().is_empty());
}

#[test]
fn solve_edge_list_format_and_infeasibility() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "disc.txt", "0 1 1\n2 3 1\n");
    let out = cutgap(&[
        "solve",
        "--lp",
        "nk",
        "--k",
        "1",
        "--graph",
        graph.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("infeasible"));
}

#[test]
fn separate_is_clean_on_feasible_solutions() {
    let dir = tempfile::tempdir().unwrap();
    let fib = dir.path().join("fib4.json");
    cutgap(&["construct", "--t", "4", "--out", fib.to_str().unwrap()]);
    let out = cutgap(&["separate", "--solution", fib.to_str().unwrap(), "--k", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "none");
}

#[test]
fn stats_prints_exact_shape() {
    let dir = tempfile::tempdir().unwrap();
    let fib = dir.path().join("fib5.json");
    cutgap(&["construct", "--t", "5", "--out", fib.to_str().unwrap()]);
    let out = cutgap(&["stats", "--solution", fib.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("fractionality 1/5"));
    assert!(text.contains("denominator 5"));
    assert!(text.contains("max-degree 5"));
    assert!(text.contains("vertices 10"));
    assert!(text.contains("support-edges 17"));
}

#[test]
fn lift_round_trip_and_face_vertex() {
    let dir = tempfile::tempdir().unwrap();
    let fib = dir.path().join("fib3.json");
    cutgap(&["construct", "--t", "3", "--out", fib.to_str().unwrap()]);
    let lifted = cutgap(&["lift", "--solution", fib.to_str().unwrap()]);
    assert!(lifted.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&lifted)).unwrap();
    assert_eq!(json["arcs"].as_array().unwrap().len(), 18);

    let extreme = cutgap(&["lift", "--solution", fib.to_str().unwrap(), "--extreme"]);
    assert!(extreme.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&extreme)).unwrap();
    let arcs = json["arcs"].as_array().unwrap();
    assert!(arcs.iter().any(|a| a["y"].as_str() == Some("1/2")));
}

#[test]
fn reduction_pipeline_runs_end_to_end() {
    let dir = tempfile::tempdir().unwrap();
    let sc = write(
        dir.path(),
        "sc.json",
        r#"{"ground":3,"triples":[[0,1,2],[0,1,2]]}"#,
    );
    let pcot = dir.path().join("pcot.json");
    let out = cutgap(&[
        "reduce",
        "setcover-to-pcot",
        "--instance",
        sc.to_str().unwrap(),
        "--out",
        pcot.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&pcot).unwrap()).unwrap();
    assert_eq!(json["tree"]["n"].as_u64(), Some(8));
    assert_eq!(json["pairs"].as_array().unwrap().len(), 6);

    let kecss = cutgap(&[
        "reduce",
        "pcot-to-kecss",
        "--instance",
        pcot.to_str().unwrap(),
        "--k",
        "3",
    ]);
    assert!(kecss.status.success());
    let graph: serde_json::Value = serde_json::from_str(&stdout(&kecss)).unwrap();
    assert_eq!(graph["n"].as_u64(), Some(8));
}

#[test]
fn convert_shrinks_parallel_pairs() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(
        dir.path(),
        "k3.json",
        r#"{"n":3,"edges":[{"u":0,"v":1,"cost":"1"},{"u":0,"v":2,"cost":"1"},{"u":1,"v":2,"cost":"1"}]}"#,
    );
    let multiset = write(
        dir.path(),
        "f.json",
        r#"{"items":[{"edge":0,"mult":2},{"edge":1,"mult":2}]}"#,
    );
    let out = cutgap(&[
        "convert",
        "ecsm-to-ecss",
        "--graph",
        graph.to_str().unwrap(),
        "--multiset",
        multiset.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stderr(&out).contains("cost 4 -> 3"));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["items"].as_array().unwrap().len(), 3);
}

#[test]
fn split_decides_both_ways() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.json", &k4_json());
    let yes = cutgap(&["split", "--graph", k4.to_str().unwrap(), "--a", "1", "--b", "1"]);
    assert!(yes.status.success());
    assert!(stdout(&yes).starts_with("feasible"));

    let mut k33 = Vec::new();
    for u in 0..3 {
        for v in 0..3 {
            k33.push(format!(r#"{{"u":{u},"v":{},"cost":"1"}}"#, 3 + v));
        }
    }
    let k33 = write(
        dir.path(),
        "k33.json",
        &format!(r#"{{"n":6,"edges":[{}]}}"#, k33.join(",")),
    );
    let no = cutgap(&["split", "--graph", k33.to_str().unwrap(), "--a", "1", "--b", "1"]);
    assert!(no.status.success());
    assert_eq!(stdout(&no).trim(), "infeasible");
}

#[test]
fn enumerate_small_counts() {
    let out = cutgap(&["enumerate", "--n", "5", "--min-denominator", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("classes 0"));
}

#[test]
fn report_contains_regression_rows() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = cutgap(&[
        "report",
        "--max-t",
        "4",
        "--enum-max-n",
        "5",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(json["fibonacci"].as_array().unwrap().len(), 2);
    let gap = json["gap"].as_array().unwrap();
    assert_eq!(gap[0]["computed"].as_str(), Some("9/8"));
    assert!(gap.iter().all(|row| row["matches"].as_bool() == Some(true)));
    assert_eq!(
        json["directed_face"][0]["min_positive_arc"].as_str(),
        Some("1/2")
    );
}

#[test]
fn environment_overrides() {
    // CUTGAP_MAX_N lifts the enumeration bound with a loud warning.
    let out = Command::new(env!("CARGO_BIN_EXE_cutgap"))
        .args(["enumerate", "--n", "5"])
        .env("CUTGAP_MAX_N", "7")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stderr(&out).contains("warning"));

    // CUTGAP_SEED steers the fallback objectives of the face-vertex search;
    // the t = 3 answer is seed-independent.
    let dir = tempfile::tempdir().unwrap();
    let fib = dir.path().join("fib3.json");
    cutgap(&["construct", "--t", "3", "--out", fib.to_str().unwrap()]);
    let out = Command::new(env!("CARGO_BIN_EXE_cutgap"))
        .args(["lift", "--solution", fib.to_str().unwrap(), "--extreme"])
        .env("CUTGAP_SEED", "42")
        .output()
        .unwrap();
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(json["arcs"]
        .as_array()
        .unwrap()
        .iter()
        .any(|a| a["y"].as_str() == Some("1/2")));
}

#[test]
fn usage_errors_exit_two() {
    let unknown = cutgap(&["solve", "--nope"]);
    assert_eq!(unknown.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"n":3,"edges":[{"u":0,"v":1,"cost":"1/0"}]}"#,
    );
    let out = cutgap(&[
        "solve",
        "--lp",
        "nk",
        "--k",
        "1",
        "--graph",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("cost"), "got: {}", stderr(&out));

    let missing = cutgap(&["stats", "--solution", "/nonexistent/file.json"]);
    assert_eq!(missing.status.code(), Some(2));

    let bad_lp = cutgap(&["solve", "--lp", "zz", "--k", "1", "--graph", "x.json"]);
    assert_eq!(bad_lp.status.code(), Some(2));
}
