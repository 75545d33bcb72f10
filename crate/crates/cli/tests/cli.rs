use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn cdgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cdgraph"))
        .args(args)
        .env_remove("CDGRAPH_ENUMERATION_BOUND")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn first_error_line(o: &Output) -> String {
    String::from_utf8(o.stderr.clone())
        .unwrap()
        .lines()
        .next()
        .unwrap_or_default()
        .to_string()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn corpus_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn degrees_of_table_one_group() {
    let o = cdgraph(&[
        "degrees",
        "DirectProduct(Sym(3),Alt(4))",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["command"], "degrees");
    assert_eq!(v["input"]["spec"], "DirectProduct(Sym(3),Alt(4))");
    assert_eq!(v["result"]["cd"], serde_json::json!([1, 2, 3, 6]));
    assert_eq!(v["result"]["order"], 72);
}

#[test]
fn degrees_text_lists_the_multiset() {
    let o = cdgraph(&["degrees", "--spec", "Sym(3)"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("degrees: 1^2 2\n"), "{out}");
    assert!(out.contains("cd: {1,2}\n"));
    assert!(out.contains("rho: {2}\n"));
    assert!(out.contains("solvable: yes\n"));
    assert!(out.contains("derived length: 2\n"));
}

#[test]
fn non_solvable_group_has_no_derived_length() {
    let o = cdgraph(&["degrees", "Alt(5)"]);
    let out = stdout(&o);
    assert!(out.contains("solvable: no\n"));
    assert!(out.contains("derived length: -\n"));
}

#[test]
fn invalid_parameter_is_an_input_error() {
    let o = cdgraph(&["degrees", "Sym(0)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(first_error_line(&o).starts_with("error: input: "));
    assert!(o.stdout.is_empty());
}

#[test]
fn malformed_spec_is_a_parse_error() {
    let o = cdgraph(&["degrees", "Sym(3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(first_error_line(&o).starts_with("error: parse: "));
}

#[test]
fn enumeration_bound_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_cdgraph"))
        .args(["degrees", "Sym(4)"])
        .env("CDGRAPH_ENUMERATION_BOUND", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(first_error_line(&o).starts_with("error: too-large: "));
}

#[test]
fn path_in_dot() {
    let o = cdgraph(&["graph", "--set", "12,15", "--kind", "B", "--format", "dot"]);
    assert!(o.status.success());
    let dot = stdout(&o);
    assert!(dot.starts_with("graph B {"));
    assert_eq!(dot.matches("label=").count(), 5);
    assert_eq!(dot.matches(" -- ").count(), 4);
    assert_eq!(dot.matches("shape=circle").count(), 3);
    assert_eq!(dot.matches("shape=box").count(), 2);
    for edge in ["p2 -- n12", "p3 -- n12", "p3 -- n15", "p5 -- n15"] {
        assert!(dot.contains(edge), "{edge}");
    }
}

#[test]
fn four_cycle_in_json() {
    let o = cdgraph(&["graph", "--set", "6,12", "--kind", "B", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["result"]["shape"], "cycle:4");
    assert_eq!(v["result"]["edges"].as_array().unwrap().len(), 4);
    assert_eq!(v["input"]["set"], serde_json::json!([6, 12]));
}

#[test]
fn prime_graph_of_thirty_is_a_triangle() {
    let o = cdgraph(&[
        "graph", "--set", "30", "--kind", "Delta", "--format", "json",
    ]);
    let v = json(&o);
    assert_eq!(v["result"]["primes"], serde_json::json!([2, 3, 5]));
    assert_eq!(
        v["result"]["edges"],
        serde_json::json!([[2, 3], [2, 5], [3, 5]])
    );
}

#[test]
fn graph_from_a_group() {
    let o = cdgraph(&[
        "graph",
        "--spec",
        "ExtraspecialSemidirect(7,3)",
        "--format",
        "json",
    ]);
    let v = json(&o);
    assert_eq!(v["result"]["shape"], "path:5");
    assert_eq!(v["result"]["numbers"], serde_json::json!([3, 6, 14]));
}

#[test]
fn degree_one_is_dropped_from_sets() {
    let a = cdgraph(&["graph", "--set", "1,12,15", "--format", "json"]);
    let b = cdgraph(&["graph", "--set", "12,15", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn empty_set_gives_empty_graph() {
    let o = cdgraph(&["classify", "--set", "1"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("shape: empty\n"));
}

#[test]
fn usage_errors() {
    for args in [
        vec!["graph", "--set", "6", "--kind", "Zeta"],
        vec!["graph", "--set", "6", "--format", "svg"],
        vec!["graph", "--set", "6", "--spec", "Sym(3)"],
        vec!["graph", "--set", "6,x"],
        vec!["classify", "--set", "6", "--format", "dot"],
        vec!["degrees"],
        vec!["frobnicate"],
    ] {
        let o = cdgraph(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(
            first_error_line(&o).starts_with("error: usage: "),
            "{args:?}"
        );
    }
}

#[test]
fn classify_with_claims() {
    let ok = cdgraph(&[
        "classify",
        "--set",
        "9,10,16",
        "--claim",
        "union_paths:3,1&components:2",
    ]);
    assert_eq!(ok.status.code(), Some(0));
    let bad = cdgraph(&[
        "classify", "--set", "6,12", "--claim", "path:4", "--format", "json",
    ]);
    assert_eq!(bad.status.code(), Some(1));
    let v = json(&bad);
    assert_eq!(v["status"], "fail");
    assert_eq!(v["result"]["shape"], "cycle:4");
    assert_eq!(
        v["result"]["failed_predicates"],
        serde_json::json!(["path:4"])
    );
}

#[test]
fn shipped_corpus_passes() {
    let o = cdgraph(&["verify"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.trim_end().ends_with("passed, 0 failed"), "{out}");
    assert!(!out.contains("FAIL"));
}

#[test]
fn falsified_claim_fails() {
    let f = corpus_file(
        "name=s3 | source=Sym(3) | cd=1,2 | shape=path:1 | cite=-\n\
         name=s4 | source=Sym(4) | cd=1,2,3,4 | shape=path:1 | cite=-\n",
    );
    let o = cdgraph(&["verify", "--corpus", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out
        .lines()
        .any(|l| l.starts_with("PASS") && l.contains("s3")));
    assert!(out
        .lines()
        .any(|l| l.starts_with("FAIL") && l.contains("s4")));
    assert!(out.contains("1 passed, 1 failed"));
}

#[test]
fn missing_corpus_file() {
    let o = cdgraph(&["verify", "--corpus", "/definitely/not/here.txt"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(first_error_line(&o).starts_with("error: io: "));
}

#[test]
fn malformed_corpus() {
    let f = corpus_file("# ok\nname=x | source=recorded | cd=2,3 | shape=path:2 | cite=-\n");
    let o = cdgraph(&["verify", "--corpus", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(first_error_line(&o).starts_with("error: corpus: corpus line 2"));
}

#[test]
fn report_file_matches_json_output() {
    let f =
        corpus_file("name=m10 | source=recorded | cd=1,9,10,16 | shape=components:2 | cite=-\n");
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let corpus = f.path().to_str().unwrap();
    let o = cdgraph(&[
        "verify",
        "--corpus",
        corpus,
        "--report",
        report.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let written = std::fs::read(&report).unwrap();
    assert_eq!(written, o.stdout);
    let v = json(&o);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["result"]["entries"][0]["recorded_only"], true);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let f = corpus_file(
        "name=a | source=AffineFrobenius(7,6) | cd=1,6 | shape=kmn:2,1 | cite=-\n\
         name=b | source=recorded | cd=1,6,12 | shape=cycle:4 | cite=-\n",
    );
    let corpus = f.path().to_str().unwrap();
    let runs: [&[&str]; 4] = [
        &["degrees", "PSL2(7)", "--format", "json"],
        &[
            "graph",
            "--set",
            "30,42,70,105",
            "--kind",
            "Gamma",
            "--format",
            "dot",
        ],
        &["classify", "--spec", "Sym(4)", "--format", "json"],
        &["verify", "--corpus", corpus, "--format", "json"],
    ];
    for args in runs {
        let first = cdgraph(args);
        let second = cdgraph(args);
        assert!(first.status.success(), "{args:?}");
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}
