use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use skewtilt::graph::replay;
use skewtilt::triang::{fv_arrow, fv_under};
use skewtilt::wire::{WireFlip, WirePseudoTri, WireReport};
use skewtilt::PseudoTri;

fn skewtilt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewtilt")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_tri(dir: &Path, name: &str, t: &PseudoTri) -> String {
    let p = dir.join(name);
    fs::write(&p, serde_json::to_string(&WirePseudoTri::from(t)).unwrap()).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn map_pair_to_extension_bundle() {
    let o = skewtilt(&["map", "--n", "4", "--arc", r#"{"type":"pair","i":0,"k":2}"#]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("E_{O(-x3)}<x3>"));
}

#[test]
fn map_line_bundle_to_half() {
    let o = skewtilt(&["map", "--n", "4", "--sheaf", "O(x1-x2+2*x3)"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("Half(1,2,+)"));
    assert_eq!(lines.next(), Some(r#"{"type":"half","cross":1,"index":2,"sign":"+"}"#));
}

#[test]
fn malformed_input_exits_2() {
    let o = skewtilt(&["map", "--n", "4", "--arc", r#"{"type":"pair","i":0}"#]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    let o = skewtilt(&["map", "--n", "4", "--sheaf", "O(x7)"]);
    assert_eq!(o.status.code(), Some(2));
    let o = skewtilt(&["check", "/nonexistent/file.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_generator() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_tri(dir.path(), "a.json", &fv_arrow(2, 0, 0).unwrap());
    let o = skewtilt(&["check", &f]);
    assert_eq!(o.status.code(), Some(0));
    let r: WireReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(r.ok);
    assert_eq!(r.arcs, 5);
}

#[test]
fn check_rejects_incompatible_set_with_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    let body = r#"{"n":2,"arcs":[{"type":"half","cross":1,"index":0,"sign":"+"},{"type":"half","cross":1,"index":3,"sign":"+"}]}"#;
    fs::write(&p, body).unwrap();
    let o = skewtilt(&["check", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let r: WireReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!r.ok);
    assert!(!r.violations.is_empty());
}

#[test]
fn flip_twice_restores_file() {
    let dir = tempfile::tempdir().unwrap();
    let t = fv_arrow(3, 1, -1).unwrap();
    let f = write_tri(dir.path(), "t.json", &t);
    let original = fs::read_to_string(&f).unwrap();
    for arc in t.arcs() {
        let arc_json = serde_json::to_string(&skewtilt::wire::WireSkewCurve::from(arc)).unwrap();
        let o = skewtilt(&["flip", &f, "--arc", &arc_json]);
        assert_eq!(o.status.code(), Some(0));
        let w: WireFlip = serde_json::from_str(&stdout(&o)).unwrap();
        let g = dir.path().join("g.json");
        fs::write(&g, serde_json::to_string(&w.tri).unwrap()).unwrap();
        let added = serde_json::to_string(&w.added).unwrap();
        let o = skewtilt(&["flip", g.to_str().unwrap(), "--arc", &added]);
        assert_eq!(o.status.code(), Some(0));
        let back: WireFlip = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(serde_json::to_string(&back.tri).unwrap(), original);
    }
}

#[test]
fn flip_of_non_member_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_tri(dir.path(), "t.json", &fv_arrow(2, 0, 0).unwrap());
    let o = skewtilt(&["flip", &f, "--arc", r#"{"type":"pair","i":1,"k":1}"#]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn path_between_generators_is_legal() {
    let dir = tempfile::tempdir().unwrap();
    let a = fv_arrow(3, 1, -1).unwrap();
    let b = fv_under(3, -1, 1).unwrap();
    let fa = write_tri(dir.path(), "a.json", &a);
    let fb = write_tri(dir.path(), "b.json", &b);
    let o = skewtilt(&["path", &fa, &fb]);
    assert_eq!(o.status.code(), Some(0));
    let flips: Vec<WireFlip> = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!flips.is_empty());
    let mut t = a;
    for w in &flips {
        let removed = w.removed.decode(3).unwrap();
        let r = skewtilt::flip::flip(&t, &removed).unwrap();
        assert_eq!(WireFlip::from(&r), *w);
        t = r.new_tri;
    }
    assert_eq!(t, b);
    let steps: Vec<_> = flips
        .iter()
        .map(|w| skewtilt::graph::Step { removed: w.removed.decode(3).unwrap(), added: w.added.decode(3).unwrap() })
        .collect();
    assert!(replay(&fv_arrow(3, 1, -1).unwrap(), &steps).is_ok());
}

#[test]
fn shift_by_minus_x3_then_x3() {
    let dir = tempfile::tempdir().unwrap();
    let t = fv_under(4, 1, -1).unwrap();
    let f = write_tri(dir.path(), "t.json", &t);
    let o = skewtilt(&["shift", &f, "-x3"]);
    assert_eq!(o.status.code(), Some(0));
    let g = dir.path().join("s.json");
    fs::write(&g, stdout(&o)).unwrap();
    let o = skewtilt(&["shift", g.to_str().unwrap(), "x3"]);
    let w: WirePseudoTri = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(w.decode().unwrap(), t);
}

#[test]
fn enumerate_and_graph() {
    let o = skewtilt(&["enumerate", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 54);
    for l in out.lines() {
        let w: WirePseudoTri = serde_json::from_str(l).unwrap();
        w.decode().unwrap();
    }
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("g.dot");
    let csv = dir.path().join("g.csv");
    let o = skewtilt(&["graph", "--n", "2", "--dot", dot.to_str().unwrap(), "--csv", csv.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(fs::read_to_string(&dot).unwrap().starts_with("graph tilting_n2 {"));
    assert!(fs::read_to_string(&csv).unwrap().starts_with("kind,id,other,label"));
}

#[test]
fn commands_are_deterministic() {
    let a = skewtilt(&["enumerate", "--n", "3"]);
    let b = skewtilt(&["enumerate", "--n", "3"]);
    assert_eq!(a.stdout, b.stdout);
    let a = skewtilt(&["graph", "--n", "2"]);
    let b = skewtilt(&["graph", "--n", "2"]);
    assert_eq!(a.stdout, b.stdout);
}
