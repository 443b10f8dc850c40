use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    let v = serde_json::from_slice(&out.stdout).expect("valid json");
    (out.status.code().unwrap(), v)
}

#[test]
fn word_commands() {
    assert_eq!(stdout(&["word", "classify", "LSLLS"]), "hyperbolic trace=3\n");
    assert_eq!(stdout(&["word", "matrix", "LSLLS"]), "2,1;1,1\n");
    assert_eq!(stdout(&["word", "normal", "SSLLL"]), "1\n");
    assert_eq!(stdout(&["word", "normal", "--cyclic", "SLSLL"]), "LSLLS\n");
    assert_eq!(stdout(&["word", "normal", "1,1;0,1"]), "LS\n");
}

#[test]
fn form_commands() {
    assert_eq!(stdout(&["form", "class-number", "12"]), "2\n");
    assert_eq!(stdout(&["form", "of-word", "LSLLS"]), "(1,-1,-1) disc=5\n");
    assert_eq!(stdout(&["form", "pell", "13"]), "t=11 u=3\n");
    assert_eq!(stdout(&["form", "to-word", "1,1,-1"]), "LLSLS\n");
    assert_eq!(stdout(&["form", "minimum", "-2,5,6"]), "1\n");
    assert!(stdout(&["form", "represents", "1,1,-1", "11"]).starts_with("yes "));
    assert_eq!(stdout(&["form", "represents", "1,1,-1", "2"]), "no\n");
}

#[test]
fn graph_and_cark_commands() {
    let fold = stdout(&["graph", "fold", "LSLLS"]);
    assert!(fold.contains("edges 4\n"), "{fold}");
    assert!(fold.contains("generators LSLLS\n"), "{fold}");
    let p = stdout(&["graph", "passport", "gamma:2"]);
    assert!(p.contains("monodromy order 6\n"), "{p}");
    assert_eq!(stdout(&["cark", "of-word", "LSLLS"]), "PM\n");
    assert_eq!(stdout(&["cark", "reciprocal", "PPM"]), "false\n");
    assert!(stdout(&["cark", "svg", "PM"]).starts_with("<?xml"));
}

#[test]
fn json_outputs_are_versioned() {
    let (code, v) = json(&["form", "minimum", "1,0,-2"]);
    assert_eq!(code, 0);
    assert_eq!(v["schemaVersion"], 1);
    assert_eq!(v["minimum"], 1);
    let (code, v) = json(&["graph", "passport", "gamma0:11"]);
    assert_eq!(code, 0);
    assert_eq!(v["schemaVersion"], 1);
}

#[test]
fn parse_errors_exit_one_and_name_the_token() {
    let out = run(&["word", "classify", "LXS"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains('X'));
    let out = run(&["form", "reduce", "1,2,banana"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("banana"));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn domain_errors_exit_two_with_distinct_codes() {
    let cases: &[(&[&str], &str)] = &[
        (&["form", "pell", "9"], "SquareDiscriminant"),
        (&["form", "reduce", "2,0,2"], "BadDiscriminant"),
        (&["form", "reduce", "2,2,2"], "BadDiscriminant"),
        (&["form", "reduce", "2,0,-6"], "NotPrimitive"),
        (&["form", "compose", "1,0,-3", "1,1,-1"], "DiscriminantMismatch"),
        (&["form", "represents", "1,1,-1", "0"], "ZeroTarget"),
        (&["cark", "of-word", "LS"], "NotHyperbolic"),
        (&["graph", "congruence", "gamma0", "0"], "BadLevel"),
        (&["--limit", "10", "form", "class-number", "1000"], "LimitExceeded"),
    ];
    for (args, expected) in cases {
        let (code, v) = json(args);
        assert_eq!(code, 2, "{args:?}");
        assert_eq!(v["error"]["code"], *expected, "{args:?}: {v}");
        assert_eq!(v["schemaVersion"], 1);
        let text = run(args);
        assert_eq!(text.status.code(), Some(2));
        assert!(!text.stderr.is_empty());
    }
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        &["graph", "dot", "gamma0:7"][..],
        &["--json", "graph", "passport", "gamma1:9"],
        &["cark", "svg", "PPMM"],
        &["--json", "form", "cycle", "1,0,-7"],
        &["--jobs", "3", "form", "class-number", "4000"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
    assert_eq!(
        stdout(&["--jobs", "4", "form", "class-number", "4000"]),
        stdout(&["--jobs", "1", "form", "class-number", "4000"])
    );
}
