//! End-to-end tests of the command-line surface: exit-code contract, report
//! shapes, determinism, and witness round-trips.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_npc-audit"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn gen(dir: &Path, args: &[&str], name: &str) -> PathBuf {
    let path = dir.join(name);
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.push("-o");
    let path_str = path.to_str().unwrap().to_owned();
    full.push(&path_str);
    let out = run(&full);
    assert_eq!(
        code(&out),
        0,
        "gen failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    path
}

#[test]
fn audit_counterexample_edge_links_pass_snpc_fail() {
    let dir = tempfile::tempdir().unwrap();
    let cx4 = gen(dir.path(), &["counterexample", "--n", "4"], "cx4.json");

    let out = run(&["audit", cx4.to_str().unwrap(), "--edge-links"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("PASS edge-links"));

    let out = run(&["audit", cx4.to_str().unwrap(), "--snpc", "--format", "json"]);
    assert_eq!(code(&out), 1);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let checks = report["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 1);
    assert_eq!(checks[0]["id"], "snpc");
    assert_eq!(checks[0]["pass"], false);
    let witness = &checks[0]["witness"];
    assert_eq!(
        witness["proper_links_only"]["witness"]["simplex"],
        serde_json::json!([0, 1, 2])
    );
    assert_eq!(
        witness["proper_links_only"]["witness"]["failure"]["loop"],
        serde_json::json!([3, 4, 5, 6, 7])
    );
}

#[test]
fn audit_c6_k_large_passes() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = gen(dir.path(), &["cycle", "--n", "6"], "c6.json");
    let out = run(&["audit", c6.to_str().unwrap(), "--k-large", "6"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("PASS k-large"));
}

#[test]
fn audit_default_suite_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = gen(dir.path(), &["cycle", "--n", "6"], "c6.json");
    let out = run(&["audit", c6.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    for id in ["flag", "empty-gons", "snpc", "edge-links"] {
        assert!(text.contains(id), "default suite must include {id}");
    }

    let c5 = gen(dir.path(), &["cycle", "--n", "5"], "c5.json");
    assert_eq!(code(&run(&["audit", c5.to_str().unwrap()])), 1);
}

#[test]
fn audit_full_check() {
    let dir = tempfile::tempdir().unwrap();
    let cx4 = gen(dir.path(), &["counterexample", "--n", "4"], "cx4.json");
    // wheel through apex 0 inside counterexample(4): the induced subcomplex
    let wheel = dir.path().join("wheel.json");
    std::fs::write(
        &wheel,
        r#"{"facets":[[0,3,4],[0,4,5],[0,5,6],[0,6,7],[0,3,7]]}"#,
    )
    .unwrap();
    let out = run(&[
        "audit",
        wheel.to_str().unwrap(),
        "--full",
        cx4.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("PASS full"));

    // hollow triangle inside a solid one: not full, witness {0,1,2}
    let solid = dir.path().join("solid.json");
    std::fs::write(&solid, r#"{"facets":[[0,1,2]]}"#).unwrap();
    let hollow = dir.path().join("hollow.json");
    std::fs::write(&hollow, r#"{"facets":[[0,1],[1,2],[0,2]]}"#).unwrap();
    let out = run(&[
        "audit",
        hollow.to_str().unwrap(),
        "--full",
        solid.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 1);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        report["checks"][0]["witness"]["violating_simplex"],
        serde_json::json!([0, 1, 2])
    );
}

#[test]
fn link_metric_json_shape() {
    let dir = tempfile::tempdir().unwrap();
    let cx4 = gen(dir.path(), &["counterexample", "--n", "4"], "cx4.json");
    let out = run(&[
        "link",
        cx4.to_str().unwrap(),
        "--simplex",
        "0,1,2",
        "--metric",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["metric"]["pass"], true);
    assert_eq!(value["metric"]["cycle"], serde_json::json!([3, 4, 5, 6, 7]));
    let girth = value["metric"]["girth"].as_f64().unwrap();
    assert!((girth - 6.590580358264089).abs() < 1e-9);
    let threshold = value["metric"]["threshold"].as_f64().unwrap();
    assert!((threshold - std::f64::consts::TAU).abs() < 1e-15);

    // tetra-fan edge link fails and exits 1
    let fan3 = gen(dir.path(), &["tetra-fan", "--k", "3"], "fan3.json");
    let out = run(&[
        "link",
        fan3.to_str().unwrap(),
        "--simplex",
        "0,1",
        "--metric",
    ]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("fail"));

    // missing simplex: usage/domain error
    let out = run(&["link", cx4.to_str().unwrap(), "--simplex", "3,4,5"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn disk_command_finds_counterexample_wheels() {
    let dir = tempfile::tempdir().unwrap();
    let cx4 = gen(dir.path(), &["counterexample", "--n", "4"], "cx4.json");
    let out = run(&[
        "disk",
        cx4.to_str().unwrap(),
        "--loop",
        "3,4,5,6,7",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["status"], "found");
    assert_eq!(value["area"], 5);
    let solutions = value["solutions"].as_array().unwrap();
    assert_eq!(solutions.len(), 3);
    for s in solutions {
        assert_eq!(s["gauss_bonnet_total"], 6);
        assert_eq!(s["cat0"], false);
        assert_eq!(s["boundary_curvature"], 5);
    }
}

#[test]
fn empty_gon_witness_round_trips_through_disk_search() {
    let dir = tempfile::tempdir().unwrap();
    let oct = gen(dir.path(), &["octahedron"], "oct.json");
    let out = run(&[
        "audit",
        oct.to_str().unwrap(),
        "--empty-gons",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 1);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let witness = &report["checks"][0]["witness"][0];
    assert_eq!(witness["check"], "empty-ngon");
    assert_eq!(witness["n"], 4);
    assert_eq!(witness["loop"], serde_json::json!([0, 2, 1, 3]));

    // an empty square admits no interior-free filling: with --max-interior 0
    // the disk search must come back empty-handed...
    let out = run(&[
        "disk",
        oct.to_str().unwrap(),
        "--loop",
        "0,2,1,3",
        "--max-interior",
        "0",
        "--max-area",
        "8",
    ]);
    assert_eq!(code(&out), 1);
    // ...while allowing an interior vertex finds the wheel fillings of area 4
    let out = run(&[
        "disk",
        oct.to_str().unwrap(),
        "--loop",
        "0,2,1,3",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["area"], 4);
    assert_eq!(value["solutions"].as_array().unwrap().len(), 2);
}

#[test]
fn distance_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = gen(dir.path(), &["cycle", "--n", "5"], "c5.json");
    let out = run(&["distance", c5.to_str().unwrap(), "--from", "0", "--to", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "2");

    let two = dir.path().join("two.json");
    std::fs::write(&two, r#"{"facets":[[0,1,2],[3,4,5]]}"#).unwrap();
    let out = run(&[
        "distance",
        two.to_str().unwrap(),
        "--from",
        "0",
        "--to",
        "4",
    ]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out).trim(), "unreachable");

    let out = run(&[
        "distance",
        two.to_str().unwrap(),
        "--from",
        "0",
        "--to",
        "9",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn malformed_and_unsupported_inputs_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    let out = run(&["audit", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));

    // mixed codimension: a tetrahedron plus a dangling triangle on its edge
    let mixed = dir.path().join("mixed.json");
    std::fs::write(&mixed, r#"{"facets":[[0,1,2,3],[0,1,4]]}"#).unwrap();
    let out = run(&["audit", mixed.to_str().unwrap(), "--edge-links"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("mixed codimension"));

    let out = run(&["gen", "cycle", "--n", "2"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn gen_and_reports_are_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let a = gen(
        dir.path(),
        &[
            "random-flag",
            "--vertices",
            "8",
            "--p",
            "0.5",
            "--seed",
            "11",
        ],
        "a.json",
    );
    let b = gen(
        dir.path(),
        &[
            "random-flag",
            "--vertices",
            "8",
            "--p",
            "0.5",
            "--seed",
            "11",
        ],
        "b.json",
    );
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());

    let out1 = run(&["audit", a.to_str().unwrap(), "--format", "json"]);
    let out2 = run(&["audit", a.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out1.stdout, out2.stdout);
}

#[test]
fn thread_cap_env_var_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let cx4 = gen(dir.path(), &["counterexample", "--n", "4"], "cx4.json");
    let out = bin()
        .args(["audit", cx4.to_str().unwrap(), "--edge-links"])
        .env("NPC_AUDIT_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
}
