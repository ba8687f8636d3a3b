//! End-to-end tests of the `ccc` binary: generation, face reports,
//! colorings, bound sweeps, exit codes, and output determinism.

use std::path::Path;
use std::process::{Command, Output};

fn ccc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ccc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ccc_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ccc"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn gen_and_faces_on_generated_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = ccc_in(dir.path(), &["gen", "platonic", "cube", "--out", "cube.pg"]);
    assert!(out.status.success());

    let faces = ccc_in(dir.path(), &["faces", "cube.pg", "--format", "json"]);
    let v = stdout_json(&faces);
    assert_eq!(v["vertices"], 8);
    assert_eq!(v["delta_star"], 4);
    assert_eq!(v["delta"], 3);
    assert_eq!(v["k_star"], 2);
    assert_eq!(v["t"], 0);
    assert_eq!(v["three_connected_simple"], true);
    assert_eq!(v["face_degrees"].as_array().unwrap().len(), 6);
}

#[test]
fn gen_prism_subdiv_reports_k_star_and_t() {
    let dir = tempfile::tempdir().unwrap();
    assert!(
        ccc_in(dir.path(), &["gen", "prism-subdiv", "2", "--out", "p2.pg"])
            .status
            .success()
    );
    let v = stdout_json(&ccc_in(dir.path(), &["faces", "p2.pg", "--format", "json"]));
    assert_eq!(v["vertices"], 12);
    assert_eq!(v["k_star"], 4);
    assert_eq!(v["t"], 2);
}

#[test]
fn gen_theta_and_regular_subdiv_sizes() {
    let dir = tempfile::tempdir().unwrap();
    assert!(ccc_in(
        dir.path(),
        &["gen", "theta", "2", "3", "4", "--out", "th.pg"]
    )
    .status
    .success());
    let v = stdout_json(&ccc_in(dir.path(), &["faces", "th.pg", "--format", "json"]));
    assert_eq!(v["vertices"], 8);

    assert!(ccc_in(
        dir.path(),
        &["gen", "regular-subdiv", "cube", "1", "--out", "cube1.pg"]
    )
    .status
    .success());
    let v = stdout_json(&ccc_in(
        dir.path(),
        &["faces", "cube1.pg", "--format", "json"],
    ));
    assert_eq!(v["vertices"], 20);
    assert_eq!(v["delta_star"], 8);
}

#[test]
fn color_exact_on_prism_subdiv_1() {
    let dir = tempfile::tempdir().unwrap();
    assert!(
        ccc_in(dir.path(), &["gen", "prism-subdiv", "1", "--out", "p1.pg"])
            .status
            .success()
    );
    let v = stdout_json(&ccc_in(
        dir.path(),
        &["color", "p1.pg", "--method", "exact"],
    ));
    assert_eq!(v["colors_used"], 9);
    assert_eq!(v["ccc_bound"], 9);
    assert_eq!(v["within_ccc_bound"], true);
    assert_eq!(v["verified"], true);
    assert_eq!(v["assignment"].as_object().unwrap().len(), 9);

    let c = stdout_json(&ccc_in(
        dir.path(),
        &["color", "p1.pg", "--method", "constructive"],
    ));
    assert!(c["colors_used"].as_u64().unwrap() <= 9);
    assert_eq!(c["verified"], true);
}

#[test]
fn color_decompose_on_cube_falls_through_to_base_case() {
    let dir = tempfile::tempdir().unwrap();
    assert!(
        ccc_in(dir.path(), &["gen", "platonic", "cube", "--out", "cube.pg"])
            .status
            .success()
    );
    let v = stdout_json(&ccc_in(
        dir.path(),
        &["color", "cube.pg", "--method", "decompose"],
    ));
    assert_eq!(v["colors_used"], 4);
    assert_eq!(v["verified"], true);
    assert_eq!(v["budget_exceeded"], false);
}

#[test]
fn color_constructive_rejects_theta_with_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    assert!(ccc_in(
        dir.path(),
        &["gen", "theta", "2", "2", "2", "--out", "th.pg"]
    )
    .status
    .success());
    let out = ccc_in(dir.path(), &["color", "th.pg", "--method", "constructive"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a simple 3-connected"));
}

#[test]
fn bounds_on_directory_is_deterministic_and_clean() {
    let dir = tempfile::tempdir().unwrap();
    for (family, args, name) in [
        ("prism-subdiv", vec!["1"], "a.pg"),
        ("theta", vec!["2", "3", "4"], "b.pg"),
        ("platonic", vec!["dodecahedron"], "c.pg"),
    ] {
        let mut cmd = vec!["gen", family];
        cmd.extend(args.iter().copied());
        cmd.extend(["--out", name]);
        assert!(ccc_in(dir.path(), &cmd).status.success());
    }
    let run1 = ccc_in(dir.path(), &["bounds", ".", "--format", "csv"]);
    let run2 = ccc_in(dir.path(), &["bounds", ".", "--format", "csv"]);
    assert!(run1.status.success());
    assert_eq!(
        run1.stdout, run2.stdout,
        "sweep output must be byte-identical"
    );
    let csv = String::from_utf8(run1.stdout).unwrap();
    assert!(csv.starts_with("graph_id,delta_star,t,k_star,exact,ccc"));
    assert_eq!(csv.lines().count(), 4);
    assert!(!csv.contains("VIOLATED"));

    let json1 = ccc_in(dir.path(), &["bounds", ".", "--format", "json"]);
    let json2 = ccc_in(dir.path(), &["bounds", ".", "--format", "json"]);
    assert_eq!(json1.stdout, json2.stdout);
}

#[test]
fn parse_errors_exit_1_with_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("bad.pg"),
        "planegraph v1\n2 1\n0: (1,0)\n1: (0,0) (0,0)\n",
    )
    .unwrap();
    let out = ccc_in(dir.path(), &["faces", "bad.pg"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("edge 0"), "stderr: {err}");

    std::fs::write(dir.path().join("worse.pg"), "not a graph\n").unwrap();
    let out = ccc_in(dir.path(), &["faces", "worse.pg"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
}

#[test]
fn usage_errors_exit_1() {
    let out = ccc(&["color", "missing.pg", "--method", "exact"]);
    assert_eq!(out.status.code(), Some(1));
    let out = ccc(&["gen", "nonsense", "--out", "/dev/null"]);
    assert_eq!(out.status.code(), Some(1));
    let out = ccc(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
    let out = ccc(&["bounds", "whatever.pg", "--guard", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("at least 1"));
}

#[test]
fn invalid_embedding_exits_2() {
    // K5 serialized as a rotation system: structurally parseable, but the
    // Euler check fails.
    let dir = tempfile::tempdir().unwrap();
    let mut ids = std::collections::BTreeMap::new();
    let mut e = 0;
    for u in 0..5usize {
        for v in (u + 1)..5 {
            ids.insert((u, v), e);
            e += 1;
        }
    }
    let mut text = String::from("planegraph v1\n5 10\n");
    for u in 0..5usize {
        text.push_str(&format!("{u}:"));
        for v in 0..5usize {
            if u != v {
                text.push_str(&format!(" ({v},{})", ids[&(u.min(v), u.max(v))]));
            }
        }
        text.push('\n');
    }
    std::fs::write(dir.path().join("k5.pg"), text).unwrap();
    let out = ccc_in(dir.path(), &["faces", "k5.pg"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ccc_in(dir.path(), &["color", "k5.pg", "--method", "exact"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn glue_subcommand_produces_valid_two_cut_instance() {
    let dir = tempfile::tempdir().unwrap();
    assert!(ccc_in(
        dir.path(),
        &["gen", "prism-subdiv", "0", "--out", "prism.pg"]
    )
    .status
    .success());
    assert!(ccc_in(
        dir.path(),
        &["gen", "glue", "prism.pg", "0", "1", "prism.pg", "0", "1", "--out", "glued.pg"]
    )
    .status
    .success());
    let v = stdout_json(&ccc_in(
        dir.path(),
        &["faces", "glued.pg", "--format", "json"],
    ));
    assert_eq!(v["vertices"], 10);
    assert_eq!(v["valid"], true);
    assert_eq!(v["two_connected"], true);

    let c = stdout_json(&ccc_in(
        dir.path(),
        &["color", "glued.pg", "--method", "decompose"],
    ));
    assert_eq!(c["verified"], true);
    assert_eq!(c["budget_exceeded"], false);
}

#[test]
fn reduce_reports_structure_and_subdivision_multigraph() {
    let dir = tempfile::tempdir().unwrap();
    assert!(
        ccc_in(dir.path(), &["gen", "prism-subdiv", "2", "--out", "p2.pg"])
            .status
            .success()
    );
    let v = stdout_json(&ccc_in(dir.path(), &["reduce", "p2.pg"]));
    assert_eq!(v["reduced_vertices"], 6);
    assert_eq!(v["reduced_edges"], 9);
    assert_eq!(v["structure"], "SIMPLE_3_CONNECTED");
    assert_eq!(v["faces"], 5);
    let s = &v["subdivision_multigraph"];
    assert_eq!(s["links"].as_array().unwrap().len(), 6);
    assert_eq!(s["max_degree"], 4);
    assert_eq!(s["multiplicity"], 2);
    assert_eq!(s["chromatic_index"], 6);

    assert!(ccc_in(
        dir.path(),
        &["gen", "theta", "2", "2", "2", "--out", "th.pg"]
    )
    .status
    .success());
    let v = stdout_json(&ccc_in(dir.path(), &["reduce", "th.pg"]));
    assert_eq!(v["structure"], "TWO_FACE");
    assert_eq!(v["reduced_vertices"], 2);
    // S is a triangle on the three faces: chromatic index 3.
    assert_eq!(v["subdivision_multigraph"]["chromatic_index"], 3);

    // A cycle has no reduction; that is a domain error, exit 2.
    std::fs::write(
        dir.path().join("cycle.pg"),
        "planegraph v1\n3 3\n0: (1,0) (2,2)\n1: (2,1) (0,0)\n2: (0,2) (1,1)\n",
    )
    .unwrap();
    let out = ccc_in(dir.path(), &["reduce", "cycle.pg"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn subdivide_subcommand_applies_plan() {
    let dir = tempfile::tempdir().unwrap();
    assert!(ccc_in(
        dir.path(),
        &["gen", "subdivide", "cube", "0:2", "--out", "c.pg"]
    )
    .status
    .success());
    let v = stdout_json(&ccc_in(dir.path(), &["faces", "c.pg", "--format", "json"]));
    assert_eq!(v["vertices"], 10);
    assert_eq!(v["t"], 2);
}
