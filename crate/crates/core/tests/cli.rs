//! The binary: exit codes, outputs, and byte-identical reruns.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ordgroupoid"))
}

fn corpus(file: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus").join(file)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn check_and_props_on_brandt() {
    let b2 = corpus("brandt2.cayley");
    let o = run(&["semigroup", "check", b2.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let json = scratch("b2-props.json");
    let o = run(&["semigroup", "props", b2.to_str().unwrap(), "--json", json.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    let flags = &report["result"]["flags"];
    assert_eq!(flags["E_unitary"], false);
    assert_eq!(flags["zero_E_unitary"], true);
    assert_eq!(flags["L"], true);
    assert_eq!(flags["LC"], true);
    assert_eq!(report["ok"], true);
}

#[test]
fn input_errors_exit_two() {
    let text = std::fs::read_to_string(corpus("brandt2.cayley"))
        .unwrap()
        .replace("0   e11 e12 0   0", "0   e11 e12 e22 0");
    let bad = scratch("corrupt.cayley");
    std::fs::write(&bad, text).unwrap();
    let o = run(&["semigroup", "check", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not associative: (1*1)*3"));

    let typo = scratch("typo.cayley");
    std::fs::write(&typo, "elements: a\ntable:\nb\n").unwrap();
    let o = run(&["semigroup", "order", typo.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("3:1: unknown element `b`"));

    let graph = scratch("bad.graph");
    std::fs::write(&graph, "edge e v w\nedge f w w\n").unwrap();
    let o = run(&["graph", "check", graph.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("RNotOnto(v)"));

    assert_eq!(run(&["semigroup", "check", "/no/such/file"]).status.code(), Some(2));
    assert_eq!(run(&["semigroup", "nonsense", "x"]).status.code(), Some(2));
}

#[test]
fn violations_exit_one() {
    let sink = corpus("sink2.graph");
    let json = scratch("unstable.json");
    let o = run(&["graph", "ideals", sink.to_str().unwrap(), "--max-len", "0", "--json", json.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report["result"]["error"], "not stabilized");
    assert!(report["result"]["at_next"].is_array());
}

#[test]
fn graph_examples() {
    let o = run(&["graph", "hs-lattice", corpus("o2.graph").to_str().unwrap()]);
    assert!(stdout(&o).contains("2 hereditary saturated sets"));
    let o = run(&["graph", "hs-lattice", corpus("sink2.graph").to_str().unwrap()]);
    assert!(stdout(&o).contains("3 hereditary saturated sets"));
    let o = run(&["graph", "ideals", corpus("o2.graph").to_str().unwrap(), "--max-len", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("bijection ok") && out.contains("every cycle has an exit: true"), "{out}");
}

#[test]
fn verdicts_and_assumption_flag() {
    let z2 = corpus("z2_with_zero.cayley");
    let o = run(&["semigroup", "simplicity", z2.to_str().unwrap()]);
    assert!(stdout(&o).contains("verdict: CONDITIONAL"));
    let o = run(&["semigroup", "simplicity", z2.to_str().unwrap(), "--assume-essentially-principal"]);
    assert!(stdout(&o).contains("verdict: SIMPLE"));
    let o = run(&["graph", "ideals", corpus("loop.graph").to_str().unwrap()]);
    assert!(stdout(&o).contains("verdict: CONDITIONAL"));
}

#[test]
fn corpus_matrix() {
    let o = run(&["--corpus"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(!out.contains("FAIL"), "{out}");
    assert!(out.contains("brandt2_twice"));
}

#[test]
fn reruns_are_byte_identical() {
    let json = [scratch("a.json"), scratch("b.json")];
    let dot = [scratch("a.dot"), scratch("b.dot")];
    let cases: Vec<(&str, &str, &str)> = vec![
        ("semigroup", "groupoid", "sym_inverse_monoid2.cayley"),
        ("semigroup", "ideals", "brandt2_twice.cayley"),
        ("graph", "ideals", "sink2.graph"),
    ];
    for (kind, action, file) in cases {
        let path = corpus(file);
        for k in 0..2 {
            let o = run(&[kind, action, path.to_str().unwrap(), "--json", json[k].to_str().unwrap(), "--dot", dot[k].to_str().unwrap()]);
            assert_eq!(o.status.code(), Some(0), "{kind} {action} {file}");
        }
        assert_eq!(std::fs::read(&json[0]).unwrap(), std::fs::read(&json[1]).unwrap(), "{file}");
        assert_eq!(std::fs::read(&dot[0]).unwrap(), std::fs::read(&dot[1]).unwrap(), "{file}");
    }
}
