use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn knotinv(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_knotinv"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str], stdin: &str) -> Value {
    serde_json::from_str(&stdout(&knotinv(args, stdin))).unwrap()
}

fn piped(construct: &[&str], then: &[&str]) -> Value {
    let pd = stdout(&knotinv(construct, ""));
    json(then, &pd)
}

#[test]
fn trefoil_invariants_through_a_pipe() {
    let v = piped(&["construct", "torus2", "3"], &["invariants"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["determinant"]["re"], -3);
    assert_eq!(v["determinant"]["im"], 0);
    assert_eq!(v["signature"], -2);
    assert_eq!(v["conway"]["text"], "1 + z^2");
}

#[test]
fn turks_head_five() {
    assert_eq!(piped(&["construct", "turkshead", "5"], &["invariants"])["det_abs"], 121);
}

#[test]
fn unknot_lattice_word() {
    let v = json(&["lattice", "validate", "x y X Y"], "");
    assert_eq!(v["ok"], true);
    assert_eq!(v["edges"], 4);
}

#[test]
fn lattice_trefoil_from_stdin() {
    let v = json(&["lattice", "validate"], "x^2 z^3 y^2 X z^-2 Y^3 z x^2 y^2 X^3 Y Z^2\n");
    assert_eq!(v["edges"], 24);
    assert_eq!(v["det_abs"], 3);
    let r = json(&["lattice", "reduce", "x^3 y^2 X^3 Y^2"], "");
    assert_eq!(r["area"], 6);
    assert_eq!(r["steps"].as_array().unwrap().len(), 5);
    assert_eq!(r["steps"][4]["area"], 1);
}

#[test]
fn every_input_format() {
    let braid = json(&["invariants", "--format", "braid", "braid 2: 1 1 1"], "");
    let graph = json(&["invariants", "--format", "graph"], "v 2\ne 0 1 +\ne 0 1 +\ne 0 1 +\nrot 0: 0 1 2\nrot 1: 2 1 0\n");
    let lattice = json(&["invariants", "--format", "lattice", "x^2 z^3 y^2 X z^-2 Y^3 z x^2 y^2 X^3 Y Z^2"], "");
    for v in [&braid, &graph, &lattice] {
        assert_eq!(v["det_abs"], 3);
        assert_eq!(v["signature"].as_i64().unwrap().abs(), 2);
    }
}

#[test]
fn other_subcommands() {
    let pd = stdout(&knotinv(&["construct", "4_1"], ""));
    let g = json(&["goeritz"], &pd);
    assert_eq!(g["signature"], 0);
    assert_eq!(g["determinant"]["re"], 5);
    let s = json(&["seifert"], &pd);
    assert_eq!(s["conway"]["text"], "1 - z^2");
    let b = json(&["bracket"], &pd);
    assert_eq!(b["determinant"]["re"], 5);
    let sig = json(&["signature", "--function"], &pd);
    assert_eq!(sig["function"]["interval_values"], serde_json::json!([0]));
    let q = json(&["qa"], &pd);
    assert_eq!(q["status"], "certified");
    let tree = json(&["graph", "v 2\ne 0 1 +\ne 0 1 +\ne 0 1 -"], "");
    assert_eq!(tree["spanning_trees"], 3);
    assert_eq!(tree["medial_pd"], Value::Null);
    let table = stdout(&knotinv(&["--table", "invariants"], &pd));
    assert!(table.lines().any(|l| l.starts_with("det_abs") && l.ends_with(" 5")));
}

#[test]
fn errors_exit_with_two() {
    for (args, stdin) in [
        (&["nonsense"][..], ""),
        (&["invariants"][..], "X(1,2,3"),
        (&["lattice", "validate", "x y"][..], ""),
        (&["construct", "no_such_knot"][..], ""),
        (&["signature", "--psi", "0,0"][..], "X(2,2,1,1)"),
    ] {
        let o = knotinv(args, stdin);
        assert_eq!(o.status.code(), Some(2), "{:?}", args);
        assert!(!o.stderr.is_empty());
    }
}
