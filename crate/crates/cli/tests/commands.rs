use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn edgewise(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgewise"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

fn edge_lines(dot: &str) -> Vec<String> {
    dot.lines()
        .filter(|l| l.contains("->"))
        .map(|l| l.trim().split(" [").next().unwrap().to_string())
        .collect()
}

#[test]
fn segal_interval_dot() {
    let out = edgewise(&[
        "subdivide",
        "--word",
        "Op+Id",
        "--simplex",
        "1",
        "--format",
        "dot",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph"));
    for v in ["\"00\";", "\"01\";", "\"11\";"] {
        assert!(dot.contains(v), "{dot}");
    }
    assert_eq!(edge_lines(&dot), ["\"00\" -> \"01\"", "\"11\" -> \"01\""]);
}

#[test]
fn segal_triangle_dot() {
    let out = edgewise(&[
        "subdivide",
        "--word",
        "Op+Id",
        "--simplex",
        "2",
        "--format",
        "dot",
    ]);
    let dot = stdout(&out);
    let nodes = dot
        .lines()
        .filter(|l| l.trim_end().ends_with("\";"))
        .count();
    assert_eq!(nodes, 6);
    assert_eq!(edge_lines(&dot).len(), 9);
    assert!(dot.contains("/* triangles"));
}

#[test]
fn doubled_identity_has_edge_01_12() {
    let out = edgewise(&[
        "subdivide",
        "--word",
        "Id+Id",
        "--simplex",
        "2",
        "--format",
        "dot",
    ]);
    let edges = edge_lines(&stdout(&out));
    assert_eq!(edges.len(), 9);
    assert!(edges.contains(&"\"01\" -> \"12\"".to_string()));
}

#[test]
fn materialized_json() {
    let out = edgewise(&[
        "subdivide",
        "--word",
        "Op+Id",
        "--simplex",
        "1",
        "--max-dim",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["levels"][0], serde_json::json!(["00", "01", "11"]));
    assert_eq!(v["levels"][1].as_array().unwrap().len(), 5);
    assert!(v["faces"]["1,0"].is_array());
    assert!(v["degeneracies"]["0,0"].is_array());
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let args = [
        "subdivide",
        "--word",
        "Op+Id+Op+Id",
        "--simplex",
        "2",
        "--format",
        "dot",
    ];
    let first = edgewise(&args).stdout;
    assert_eq!(first, edgewise(&args).stdout);
    let path = scratch("e2.dot");
    let path_arg = path.to_str().unwrap();
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path_arg]);
    let out = edgewise(&with_out);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(fs::read(&path).unwrap(), first);
}

#[test]
fn decompose_from_word_and_oracle() {
    let out = edgewise(&["decompose", "--word", "Op+Id"]);
    assert_eq!(stdout(&out), "Op+Id\n");

    let out = edgewise(&["decompose", "--word", "C0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["word"], "C0");
    let path = scratch("c0.json");
    fs::write(&path, serde_json::to_string(&v["oracle"]).unwrap()).unwrap();
    let out = edgewise(&["decompose", "--oracle", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "C0\n");

    let out = edgewise(&["decompose", "--roundtrip", "--word", "Id+C0+Op"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("roundtrip: pass"));
}

#[test]
fn malformed_oracle_exits_4() {
    // Both endpoint images hit the same vertex pair: a loop, not a zigzag.
    let path = scratch("bad.json");
    fs::write(
        &path,
        r#"{"t0":1,"t1":3,"td0":{"dst":3,"values":[0,3]},"td1":{"dst":3,"values":[0,3]},"ts0":{"dst":1,"values":[0,0,1,1]}}"#,
    )
    .unwrap();
    let out = edgewise(&["decompose", "--oracle", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));

    fs::write(&path, r#"{"t0":1,"t1":3,"td0":{"dst":3,"values":[3,0]}}"#).unwrap();
    let out = edgewise(&["decompose", "--oracle", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn check_we_exit_codes() {
    assert_eq!(
        edgewise(&["check-we", "--word", "Op+Id"]).status.code(),
        Some(0)
    );
    assert_eq!(
        edgewise(&["check-we", "--word", "C0"]).status.code(),
        Some(1)
    );
    let out = edgewise(&["check-we", "--word", "Op+Id+Op+Id"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("evidence consistent: yes"));
    let out = edgewise(&["check-we", "--word", "C0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["preserving"], false);
    assert_eq!(v["interval_contractible"], false);
}

#[test]
fn parse_and_limit_errors() {
    assert_eq!(
        edgewise(&["check-we", "--word", "Id+Foo"]).status.code(),
        Some(2)
    );
    assert_eq!(
        edgewise(&["subdivide", "--word", "", "--simplex", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(edgewise(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        edgewise(&["subdivide", "--word", "Id", "--simplex", "4"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        edgewise(&[
            "homology",
            "--word",
            "Id",
            "--simplex",
            "1",
            "--max-dim",
            "5"
        ])
        .status
        .code(),
        Some(3)
    );
    let out = edgewise(&[
        "subdivide",
        "--word",
        "Id",
        "--simplex",
        "4",
        "--unsafe-limits",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn homology_command() {
    let out = edgewise(&[
        "homology",
        "--word",
        "C0+Id",
        "--simplex",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["reduced"]["degrees"][0]["betti"], 1);
    assert_eq!(v["unreduced"]["degrees"][0]["betti"], 2);
    let out = edgewise(&["homology", "--word", "Op+Id", "--simplex", "2"]);
    assert!(stdout(&out).contains("chain ranks: 6 9 4 0"));
}

#[test]
fn selftest_passes_and_catches_a_fault() {
    let out = edgewise(&["selftest", "--max-n", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(!stdout(&out).contains("FAIL"));

    let out = edgewise(&["selftest", "--max-n", "1", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("counterexample"));
}
