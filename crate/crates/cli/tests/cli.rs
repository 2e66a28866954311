use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::Instant;

use cytop::format::{format_polytope, parse_polytope};
use serde_json::Value;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn cytop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cytop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn analyze_quintic() {
    let r = json(&cytop(&["analyze", path(&data("quintic.txt"))]));
    assert_eq!(r["reflexive"], true);
    assert_eq!(r["hodge"]["h11"], 1);
    assert_eq!(r["hodge"]["h21"], 101);
    assert_eq!(r["hodge"]["euler"], -200);
    let ranks: Vec<u64> = r["homology"].as_array().unwrap().iter().map(|g| g["rank"].as_u64().unwrap()).collect();
    assert_eq!(ranks, vec![1, 0, 1, 204, 1, 0, 1]);
    assert_eq!(r["ktheory"]["k0"]["rank"], 4);
    assert_eq!(r["ktheory"]["k1"]["rank"], 204);
    assert_eq!(r["polar_vertices"].as_array().unwrap().len(), 5);
}

#[test]
fn analyze_cube_census() {
    let start = Instant::now();
    let r = json(&cytop(&["analyze", path(&data("cube4.txt"))]));
    assert!(start.elapsed().as_secs_f64() < 1.0);
    let f = &r["faces"];
    assert_eq!((f["vertices"].as_u64(), f["edges"].as_u64(), f["two_faces"].as_u64(), f["facets"].as_u64()),
        (Some(16), Some(32), Some(24), Some(8)));
    assert_eq!(r["strata"]["two_faces"].as_array().unwrap().len(), 24);
}

#[test]
fn report_echo_round_trips() {
    let r = json(&cytop(&["analyze", path(&data("cube4.txt"))]));
    let vertices: Vec<Vec<i64>> = serde_json::from_value(r["input"]["vertices"].clone()).unwrap();
    let reparsed = parse_polytope(&format_polytope(&vertices)).unwrap();
    assert_eq!(reparsed.vertices, vertices);
    let original = parse_polytope(&std::fs::read_to_string(data("cube4.txt")).unwrap()).unwrap();
    let mut a = original.vertices.clone();
    let mut b = vertices;
    a.sort();
    b.sort();
    assert_eq!(a, b);
}

#[test]
fn summary_line() {
    let out = cytop(&["analyze", "--summary", path(&data("quintic.txt"))]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1);
    assert!(text.contains("h11=1 h21=101"));
}

#[test]
fn exit_codes() {
    let out = cytop(&["analyze", path(&data("nonreflexive.txt"))]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("not reflexive"));

    let garbage = temp_file("4 5\n1 0 0 0 x\n");
    assert_eq!(cytop(&["analyze", path(garbage.path())]).status.code(), Some(1));
    assert_eq!(cytop(&["analyze", "/nonexistent/file"]).status.code(), Some(1));

    let out = cytop(&["analyze", path(&data("quintic.txt")), "--nef", path(&data("bad.nef"))]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("condition (2)"));

    // A valid partition with the wrong number of parts for the dimension.
    let two_parts = temp_file("0 1\n2 3 4\n");
    let out = cytop(&["analyze", path(&data("quintic.txt")), "--nef", path(two_parts.path())]);
    assert_eq!(out.status.code(), Some(3));

    let square = temp_file("2 4\n1 1 -1 -1\n1 -1 1 -1\n");
    let corner = temp_file("0\n1 2 3\n");
    let out = cytop(&["analyze", path(square.path()), "--nef", path(corner.path())]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("condition (4)"));
}

#[test]
fn complete_intersection_report() {
    let r = json(&cytop(&["analyze", path(&data("simplex5.txt")), "--nef", path(&data("bicubic.nef"))]));
    assert!(r["hodge"].is_null());
    assert!(r["ktheory"].is_null());
    assert!(r["homology"][3]["rank"].is_null());
    assert_eq!(r["homology"][2]["rank"], 1);
    assert_eq!(r["partition"]["ample"], serde_json::json!([true, true]));
    assert_eq!(r["faces"]["facets"], 6);
}

#[test]
fn batch_preserves_order_and_mirror_pairs() {
    let out = cytop(&["batch", path(&data("pair.txt"))]);
    assert!(out.status.success());
    let lines: Vec<Value> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 2);
    let (a, b) = (&lines[0]["report"]["hodge"], &lines[1]["report"]["hodge"]);
    assert_eq!(a["h11"], b["h21"]);
    assert_eq!(a["h21"], b["h11"]);
    assert_eq!(lines[0]["record"], 0);
    assert_eq!(lines[1]["record"], 1);
}

#[test]
fn batch_parallelism_is_byte_identical() {
    let mut text = String::new();
    for name in ["quintic.txt", "cube4.txt", "mirror_quintic.txt", "nonreflexive.txt"] {
        text.push_str(&std::fs::read_to_string(data(name)).unwrap());
    }
    text.push_str("3 4\n1 0 0 -1\n0 1 0 -1\n0 0 1 -1\n");
    let file = temp_file(&text);
    for summary in [false, true] {
        let mut args = vec!["batch", path(file.path())];
        if summary {
            args.push("--summary");
        }
        let one = cytop(&[args.as_slice(), &["-j", "1"]].concat());
        let many = cytop(&[args.as_slice(), &["-j", "4"]].concat());
        assert!(one.status.success());
        assert_eq!(one.stdout, many.stdout);
        assert_eq!(String::from_utf8_lossy(&one.stdout).lines().count(), 5);
    }
}

#[test]
fn batch_empty_file() {
    let empty = temp_file("");
    let out = cytop(&["batch", path(empty.path())]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
}

#[test]
fn batch_isolates_malformed_records() {
    let quintic = std::fs::read_to_string(data("quintic.txt")).unwrap();
    let text = format!("{quintic}4 5\n1 0 0 0 -1\n0 1 zz 0 -1\n0 0 1 0 -1\n0 0 0 1 -1\n{quintic}");
    let file = temp_file(&text);
    let out = cytop(&["batch", path(file.path()), "--summary"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].contains("h11=1"));
    assert!(lines[1].contains("error"));
    assert!(lines[2].contains("h11=1"));
}

#[test]
fn face_lab_reports() {
    let r = json(&cytop(&["face-lab", path(&data("cube4.txt")), "--face", "0"]));
    let t = &r["triangulation"];
    assert_eq!(t["shelling"], serde_json::json!([1, 6, 1]));
    assert_eq!(t["b2_formula"], 6);
    assert_eq!(t["b2_agrees"], true);
    assert_eq!(t["dual_complex"]["sigma2_contractible"], true);
    assert_eq!(t["dual_complex"]["sigma1_trees"], true);

    let r = json(&cytop(&["face-lab", path(&data("quintic.txt")), "--face", "2"]));
    assert_eq!(r["triangulation"]["shelling"], serde_json::json!([0, 0, 1]));
    assert_eq!(r["triangulation"]["b2_formula"], 0);

    let r = json(&cytop(&["face-lab", path(&data("mirror_quintic.txt")), "--face", "1", "--flips", "50", "--seed", "17"]));
    assert_eq!(r["flipped"]["b2_unchanged"], true);
    assert_eq!(r["flipped"]["triangulation"]["b2_formula"], r["triangulation"]["b2_formula"]);

    let out = cytop(&["face-lab", path(&data("quintic.txt")), "--face", "10"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn polar_round_trip() {
    let out = cytop(&["polar", path(&data("mirror_quintic.txt"))]);
    assert!(out.status.success());
    let mut back = parse_polytope(&String::from_utf8(out.stdout).unwrap()).unwrap().vertices;
    let mut original = parse_polytope(&std::fs::read_to_string(data("quintic.txt")).unwrap()).unwrap().vertices;
    back.sort();
    original.sort();
    assert_eq!(back, original);
    assert_eq!(cytop(&["polar", path(&data("nonreflexive.txt"))]).status.code(), Some(2));
}
