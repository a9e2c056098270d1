//! End-to-end checks of the command-line interface: exit codes, round
//! trips, and report determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_stripmis"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("stripmis-cli-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn gen_parse_round_trip() {
    let path = tmp("random.gr");
    let out = run(&[
        "gen",
        "random",
        "--n",
        "12",
        "--delta",
        "3",
        "--prob",
        "0.5",
        "--seed",
        "7",
        "--weights",
        "1",
        "9",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text1 = std::fs::read_to_string(&path).unwrap();
    // Generating again with identical parameters gives identical bytes.
    let out2 = run(&[
        "gen",
        "random",
        "--n",
        "12",
        "--delta",
        "3",
        "--prob",
        "0.5",
        "--seed",
        "7",
        "--weights",
        "1",
        "9",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert!(out2.status.success());
    let text2 = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text1, text2);
    // And the solver accepts the file.
    let solve = run(&["solve", path.to_str().unwrap()]);
    assert!(solve.status.success());
    let _ = std::fs::remove_file(&path);
}

#[test]
fn solve_matches_oracle_subcommand() {
    let path = tmp("p6.gr");
    std::fs::write(
        &path,
        "p 6 5\nv 1 9\nv 4 9\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n",
    )
    .unwrap();
    let solve = run(&["solve", path.to_str().unwrap(), "--json"]);
    assert!(solve.status.success());
    let solve_json: serde_json::Value = serde_json::from_str(&stdout(&solve)).unwrap();
    assert_eq!(solve_json["result"]["weight"], 18);
    let oracle = run(&["oracle", path.to_str().unwrap(), "--json"]);
    let oracle_json: serde_json::Value = serde_json::from_str(&stdout(&oracle)).unwrap();
    assert_eq!(
        solve_json["result"]["weight"],
        oracle_json["result"]["weight"]
    );
    let _ = std::fs::remove_file(&path);
}

#[test]
fn solve_reports_are_deterministic_modulo_timing() {
    let path = tmp("det.gr");
    std::fs::write(
        &path,
        "p 9 9\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 7\ne 7 8\ne 0 8\n",
    )
    .unwrap();
    let strip_timing = |text: &str| -> serde_json::Value {
        let mut v: serde_json::Value = serde_json::from_str(text).unwrap();
        v.as_object_mut().unwrap().remove("timing_ms");
        v
    };
    let a = run(&["solve", path.to_str().unwrap(), "--json", "--seed", "3"]);
    let b = run(&["solve", path.to_str().unwrap(), "--json", "--seed", "3"]);
    assert_eq!(strip_timing(&stdout(&a)), strip_timing(&stdout(&b)));
    let _ = std::fs::remove_file(&path);
}

#[test]
fn detect_exit_codes() {
    let c6 = tmp("c6.gr");
    std::fs::write(&c6, "p 6 6\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 0 5\n").unwrap();
    let miss = run(&["detect", c6.to_str().unwrap(), "1", "1", "1"]);
    assert_eq!(miss.status.code(), Some(1));
    assert!(stdout(&miss).contains("not found"));
    let claw = tmp("claw.gr");
    std::fs::write(&claw, "p 4 3\ne 0 1\ne 0 2\ne 0 3\n").unwrap();
    let hit = run(&["detect", claw.to_str().unwrap(), "1", "1", "1"]);
    assert_eq!(hit.status.code(), Some(0));
    let _ = std::fs::remove_file(&c6);
    let _ = std::fs::remove_file(&claw);
}

#[test]
fn parse_error_exit_codes() {
    let bad = tmp("bad.gr");
    std::fs::write(&bad, "p 2 1\ne 0 5\n").unwrap();
    let out = run(&["solve", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let missing = run(&["solve", "/definitely/not/there.gr"]);
    assert_eq!(missing.status.code(), Some(2));
    let _ = std::fs::remove_file(&bad);
}

#[test]
fn validate_esd_flow() {
    // The canonical two-strip decomposition of P_4, written by hand in the
    // file format.
    let graph = tmp("vp4.gr");
    std::fs::write(&graph, "p 4 3\ne 0 1\ne 1 2\ne 2 3\n").unwrap();
    let esd = tmp("vp4.esd.json");
    std::fs::write(
        &esd,
        r#"{
  "pattern": { "vertices": [0, 1, 2], "edges": [[0, 1, 0], [1, 2, 1]] },
  "eta": {
    "edge": { "0": [0, 1], "1": [2, 3] },
    "edge_end": { "0/0": [0], "0/1": [1], "1/1": [2], "1/2": [3] },
    "vertex": {},
    "triangle": {}
  }
}"#,
    )
    .unwrap();
    let ok = run(&[
        "validate-esd",
        graph.to_str().unwrap(),
        esd.to_str().unwrap(),
    ]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    assert!(stdout(&ok).contains("valid"));

    // Tameness report: a path pattern has degree-two vertices.
    let tame = run(&[
        "validate-esd",
        graph.to_str().unwrap(),
        esd.to_str().unwrap(),
        "--tame-check",
    ]);
    assert!(stdout(&tame).contains("semi-tame: no"));

    // A corrupted eta is rejected with a named violation and exit 1.
    let corrupt = tmp("vp4-bad.esd.json");
    std::fs::write(
        &corrupt,
        std::fs::read_to_string(&esd)
            .unwrap()
            .replace("\"1\": [2, 3]", "\"1\": [1, 2, 3]"),
    )
    .unwrap();
    let bad = run(&[
        "validate-esd",
        graph.to_str().unwrap(),
        corrupt.to_str().unwrap(),
    ]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("sets-overlap"));

    // Unparseable decomposition file: exit 3.
    let junk = tmp("junk.esd.json");
    std::fs::write(&junk, "{ not json").unwrap();
    let parse = run(&[
        "validate-esd",
        graph.to_str().unwrap(),
        junk.to_str().unwrap(),
    ]);
    assert_eq!(parse.status.code(), Some(3));

    // Single-strip pattern: rejected strictly, accepted with --relaxed.
    let single_graph = tmp("k2.gr");
    std::fs::write(&single_graph, "p 2 1\ne 0 1\n").unwrap();
    let single = tmp("k2.esd.json");
    std::fs::write(
        &single,
        r#"{
  "pattern": { "vertices": [0, 1], "edges": [[0, 1, 0]] },
  "eta": {
    "edge": { "0": [0, 1] },
    "edge_end": { "0/0": [0], "0/1": [1] }
  }
}"#,
    )
    .unwrap();
    let strict = run(&[
        "validate-esd",
        single_graph.to_str().unwrap(),
        single.to_str().unwrap(),
    ]);
    assert_eq!(strict.status.code(), Some(1));
    assert!(stdout(&strict).contains("too-few-pattern-edges"));
    let relaxed = run(&[
        "validate-esd",
        single_graph.to_str().unwrap(),
        single.to_str().unwrap(),
        "--relaxed",
    ]);
    assert_eq!(relaxed.status.code(), Some(0));

    for p in [graph, esd, corrupt, junk, single_graph, single] {
        let _ = std::fs::remove_file(p);
    }
}

#[test]
fn solve_with_esd_file_and_fallthrough() {
    let graph = tmp("sp4.gr");
    std::fs::write(&graph, "p 4 3\ne 0 1\ne 1 2\ne 2 3\n").unwrap();
    let esd = tmp("sp4.esd.json");
    std::fs::write(
        &esd,
        r#"{
  "pattern": { "vertices": [0, 1, 2], "edges": [[0, 1, 0], [1, 2, 1]] },
  "eta": {
    "edge": { "0": [0, 1], "1": [2, 3] },
    "edge_end": { "0/0": [0], "0/1": [1], "1/1": [2], "1/2": [3] }
  }
}"#,
    )
    .unwrap();
    // Force the decomposition case: no separator search, tiny base case.
    let out = run(&[
        "solve",
        graph.to_str().unwrap(),
        "--esd",
        esd.to_str().unwrap(),
        "--d-max",
        "0",
        "--base-case",
        "0",
        "--providers",
        "",
        "--trace",
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("weight: 2"));
    assert!(text.contains("case 2"));

    // A decomposition of the wrong graph: the file provider falls through
    // and the solver still answers (exit 0), honestly reporting fallback.
    let other = tmp("p5.gr");
    std::fs::write(&other, "p 5 4\ne 0 1\ne 1 2\ne 2 3\ne 3 4\n").unwrap();
    let fall = run(&[
        "solve",
        other.to_str().unwrap(),
        "--providers",
        format!("file:{}", esd.to_str().unwrap()).as_str(),
        "--d-max",
        "0",
        "--base-case",
        "0",
        "--trace",
    ]);
    assert!(fall.status.success());
    let fall_text = stdout(&fall);
    assert!(fall_text.contains("weight: 3"));
    assert!(
        fall_text.contains("WARNING"),
        "fallback must be loud:\n{fall_text}"
    );

    // Unreadable decomposition given via --esd: exit 3.
    let gone = run(&[
        "solve",
        graph.to_str().unwrap(),
        "--esd",
        "/no/such.esd.json",
    ]);
    assert_eq!(gone.status.code(), Some(3));

    for p in [graph, esd, other] {
        let _ = std::fs::remove_file(p);
    }
}

#[test]
fn config_error_exit_code() {
    let graph = tmp("cfg.gr");
    std::fs::write(&graph, "p 3 2\ne 0 1\ne 1 2\n").unwrap();
    let bad_c = run(&["solve", graph.to_str().unwrap(), "--c", "1/3"]);
    assert_eq!(bad_c.status.code(), Some(4));
    let bad_provider = run(&["solve", graph.to_str().unwrap(), "--providers", "nonsense"]);
    assert_eq!(bad_provider.status.code(), Some(4));
    let oracle_cap = run(&["oracle", "/dev/null"]);
    assert_eq!(oracle_cap.status.code(), Some(2)); // not a graph file
    let _ = std::fs::remove_file(&graph);
}

#[test]
fn poljak_generation_produces_the_nine_cycle() {
    let k3 = tmp("k3.gr");
    std::fs::write(&k3, "p 3 3\ne 0 1\ne 0 2\ne 1 2\n").unwrap();
    let c9 = tmp("c9.gr");
    let gen = run(&[
        "gen",
        "poljak",
        "--base",
        k3.to_str().unwrap(),
        "-p",
        "1",
        "-o",
        c9.to_str().unwrap(),
    ]);
    assert!(gen.status.success());
    let text = std::fs::read_to_string(&c9).unwrap();
    assert!(
        text.starts_with("p 9 9\n"),
        "expected a 9-vertex cycle:\n{text}"
    );
    let solve = run(&["solve", c9.to_str().unwrap(), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&solve)).unwrap();
    assert_eq!(v["result"]["weight"], 4); // alpha(K_3) + 1 * |E(K_3)|
    let _ = std::fs::remove_file(&k3);
    let _ = std::fs::remove_file(&c9);
}

#[test]
fn solve_agrees_with_oracle_on_a_generated_instance() {
    let path = tmp("n18.gr");
    let gen = run(&[
        "gen",
        "random",
        "--n",
        "18",
        "--delta",
        "4",
        "--prob",
        "0.35",
        "--seed",
        "11",
        "--weights",
        "1",
        "100",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert!(gen.status.success());
    let solve = run(&["solve", path.to_str().unwrap(), "--memo", "65536", "--json"]);
    let oracle = run(&["oracle", path.to_str().unwrap(), "--json"]);
    let sv: serde_json::Value = serde_json::from_str(&stdout(&solve)).unwrap();
    let ov: serde_json::Value = serde_json::from_str(&stdout(&oracle)).unwrap();
    assert_eq!(sv["result"]["weight"], ov["result"]["weight"]);
    let _ = std::fs::remove_file(&path);
}

#[test]
fn bench_runs() {
    let out = run(&["bench", "--p-max", "3", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 3);
    assert!(v["loglog_slope"].as_f64().unwrap() < 4.0);
}

#[test]
fn env_var_enables_trace() {
    let graph = tmp("envtrace.gr");
    std::fs::write(&graph, "p 3 2\ne 0 1\ne 1 2\n").unwrap();
    let out = bin()
        .args(["solve", graph.to_str().unwrap()])
        .env("STRIPMIS_TRACE", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("base case"));
    let _ = std::fs::remove_file(&graph);
}
