use std::path::Path;
use std::process::{Command, Output};

fn oddeven(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oddeven"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).expect("utf-8")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

const CYCLIC: &str = r#"{"X": ["x1", "x2"], "Y": ["y1", "y2"],
  "arcs": [["x1", "y1"], ["y1", "x2"], ["x2", "y2"], ["y2", "x1"]]}"#;
const ACYCLIC: &str = r#"{"X": ["x1", "x2"], "Y": ["y1", "y2"],
  "arcs": [["x1", "y1"], ["x1", "y2"], ["x2", "y2"], ["y1", "x2"]]}"#;

#[test]
fn goldbach_connect_reports_the_range() {
    let out = oddeven(&["goldbach", "connect", "--max", "100"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "connected: 7..100\n");
}

#[test]
fn smallest_hamiltonian_cycle() {
    let out = oddeven(&["hamiltonian", "--n", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "cycle: 4,2,8,6\n");
    // statistics stay off stdout
    assert!(String::from_utf8_lossy(&out.stderr).contains("nodes expanded"));
}

#[test]
fn appendix_flags_row_56() {
    let out = oddeven(&["appendix", "validate"]);
    assert_eq!(code(&out), 2);
    let text = stdout(&out);
    assert!(text.contains("n=56: INVALID, duplicate vertex 14 at position 6"));
    assert!(text.ends_with("27 valid, 1 flagged (n=56)\n"));
}

#[test]
fn appendix_file_option() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "good.txt", "n: 4, cycle: 4, 2, 8, 6, 4\n");
    let out = oddeven(&["appendix", "validate", "--file", &good]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "n=4: valid\n1 valid, 0 flagged\n");
    let bad = write(dir.path(), "bad.txt", "n: 4 cycle 4 2\n");
    assert_eq!(code(&oddeven(&["appendix", "validate", "--file", &bad])), 3);
}

#[test]
fn usage_errors_exit_1() {
    for args in [
        &["frobnicate"][..],
        &["hamiltonian"],
        &["goldbach", "connect"],
        &["sieve", "--bound", "ten"],
        &["sieve", "--bound", "10", "--format", "yaml"],
        // rejected by the library rather than the parser
        &["hamiltonian", "--n", "5"],
        &["goldbach", "connect", "--max", "3"],
        // a format the command cannot produce
        &["goldbach", "connect", "--max", "10", "--format", "dot"],
    ] {
        let out = oddeven(args);
        assert_eq!(code(&out), 1, "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(code(&oddeven(&["--help"])), 0);
    assert_eq!(code(&oddeven(&["--version"])), 0);
}

#[test]
fn io_and_malformed_input_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("absent.json").display().to_string();
    assert_eq!(code(&oddeven(&["bitournament", "check", &missing])), 3);
    let broken = write(dir.path(), "broken.json", "{\"X\": [");
    assert_eq!(code(&oddeven(&["embed", &broken])), 3);
    let unknown = write(dir.path(), "unknown.json", r#"{"X": ["a"], "Y": ["b"], "edges": []}"#);
    assert_eq!(code(&oddeven(&["bitournament", "label", &unknown])), 3);
}

#[test]
fn bitournament_commands() {
    let dir = tempfile::tempdir().unwrap();
    let cyclic = write(dir.path(), "cyclic.json", CYCLIC);
    let acyclic = write(dir.path(), "acyclic.json", ACYCLIC);

    let out = oddeven(&["bitournament", "check", &cyclic]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("directed 4-cycle: x1 -> y1 -> x2 -> y2\n"));
    assert!(stdout(&out).contains("equivalence: consistent\n"));

    let out = oddeven(&["bitournament", "label", &acyclic, "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["reproduces"], true);
    let labels = &v["labels"];
    // every arc ascends
    for (u, w) in [("x1", "y1"), ("x1", "y2"), ("x2", "y2"), ("y1", "x2")] {
        assert!(labels[u].as_u64() < labels[w].as_u64(), "{u} -> {w}");
    }

    let out = oddeven(&["bitournament", "label", &cyclic]);
    assert_eq!(stdout(&out), "no monotone labeling: x1 -> y1 -> x2 -> y2\n");

    // not a bitournament: x2 and y2 are not joined
    let partial = write(dir.path(), "partial.json", r#"{"X": ["x1", "x2"], "Y": ["y1", "y2"], "arcs": [["x1", "y1"]]}"#);
    let out = oddeven(&["bitournament", "check", &partial]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("bitournament: no\n"));
}

#[test]
fn embed_writes_a_document() {
    let dir = tempfile::tempdir().unwrap();
    let cyclic = write(dir.path(), "cyclic.json", CYCLIC);
    let target = dir.path().join("embedding.json");
    let out = oddeven(&["embed", &cyclic, "--format", "json", "--output", &target.display().to_string()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(v["X"], serde_json::json!(["x1", "x2"]));
    assert_eq!(v["map"].as_array().unwrap().len(), 4);
    assert_eq!(v["check"]["underlying_isomorphic"], true);
    assert_eq!(v["check"]["oriented_isomorphic"], false);

    let out = oddeven(&["embed", &cyclic, "--x-order", "x2,x1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("x1 -> 10000 (b_2)\nx2 -> 100 (b_0)\n"), "{}", stdout(&out));
    assert_eq!(code(&oddeven(&["embed", &cyclic, "--x-order", "x9"])), 1);
}

#[test]
fn oddeven_formats() {
    let args = ["oddeven", "build", "--vertices", "0,2,4,6,8", "--odd", "3,5"];
    let csv = oddeven(&[&args[..], &["--format", "csv", "--layout", "flat"]].concat());
    assert_eq!(code(&csv), 0);
    assert_eq!(stdout(&csv).lines().next(), Some(",0,2,4,6,8"));

    let dot = oddeven(&[&args[..], &["--format", "dot"]].concat());
    assert!(stdout(&dot).starts_with("digraph odd_even {"));
    assert!(stdout(&dot).contains("0 -> 6 [label=\"3,3\"];"));

    let json = oddeven(&[&args[..], &["--format", "json"]].concat());
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["arcs"], serde_json::json!([[0, 6], [2, 8]]));

    let out = oddeven(&["oddeven", "build", "--vertices", "0,2", "--odd", "3", "--primes", "7"]);
    assert_eq!(code(&out), 1, "odd-set sources are exclusive");
}

#[test]
fn theorem_checks_exit_2_only_on_violation() {
    let out = oddeven(&["oddeven", "con1", "--vertices", "0,6", "--odd", "3"]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).contains("violated: yes"));
    assert_eq!(code(&oddeven(&["oddeven", "con1", "--vertices", "2,4,8", "--primes", "7"])), 0);
    assert_eq!(code(&oddeven(&["oddeven", "con2", "--m", "8", "--primes", "13", "--with-one"])), 0);
    assert_eq!(code(&oddeven(&["oddeven", "uni", "--a", "8", "--b", "3"])), 0);
    assert_eq!(code(&oddeven(&["oddeven", "uni", "--a", "6", "--b", "5", "--start", "zero"])), 0);
}

#[test]
fn goldbach_subcommands() {
    let out = oddeven(&["goldbach", "kronecker", "--gap", "2", "--n", "20"]);
    assert_eq!(stdout(&out), "gap 2, n 20: 4 pairs\n(3, 5) -> 8\n(5, 7) -> 12\n(11, 13) -> 24\n(17, 19) -> 36\n");
    let out = oddeven(&["goldbach", "partitions", "--v", "10"]);
    assert_eq!(stdout(&out), "10 = 3 + 7 = 5 + 5\ncount: 2\n");
    let out = oddeven(&["goldbach", "pi", "--n", "100"]);
    assert!(stdout(&out).starts_with("pi(100) = 25 = d_100(0) + 1"));
    let out = oddeven(&["goldbach", "degrees", "--n", "4", "--format", "csv"]);
    assert_eq!(
        stdout(&out),
        "vertex,in_degree,out_degree,degree\n0,0,1,1\n2,0,1,1\n4,0,0,0\n6,1,0,1\n8,1,0,1\n"
    );
    let out = oddeven(&["goldbach", "indep", "--k", "2"]);
    assert!(stdout(&out).contains("members: 722,724\n"));
    assert_eq!(code(&out), 0);
    let out = oddeven(&["goldbach", "inequality", "--r", "3", "--n", "10", "--m", "2"]);
    assert_eq!(code(&out), 0);
    let out = oddeven(&["goldbach", "graph", "--n", "4", "--starred", "--format", "dot"]);
    assert!(stdout(&out).starts_with("digraph goldbach_4 {"));
    assert_eq!(stdout(&out).matches("->").count(), 4);
    let out = oddeven(&["goldbach", "kmn", "--n", "60", "--s", "2", "--t", "4", "--lemmas"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("lemma d6: edges [(0, 6)]"));
    assert_eq!(code(&oddeven(&["goldbach", "maillet", "--max", "30", "--bound", "50"])), 0);
    assert_eq!(code(&oddeven(&["goldbach", "indegree", "--max", "200"])), 0);
}

#[test]
fn output_is_byte_identical_across_runs_and_thread_counts() {
    for args in [
        &["hamiltonian", "--sweep", "20", "--path"][..],
        &["goldbach", "pi", "--n", "2000", "--all", "--format", "json"],
        &["goldbach", "inequality", "--sweep", "40", "--format", "json"],
        &["goldbach", "degrees", "--n", "50", "--format", "json"],
    ] {
        let first = oddeven(&[args, &["--threads", "1"]].concat());
        assert_eq!(code(&first), 0, "{args:?}");
        let again = oddeven(&[args, &["--threads", "1"]].concat());
        let wide = oddeven(&[args, &["--threads", "4"]].concat());
        assert_eq!(first.stdout, again.stdout, "{args:?}");
        assert_eq!(first.stdout, wide.stdout, "{args:?}");
    }
}

#[test]
fn sieve_lists_primes() {
    let out = oddeven(&["sieve", "--bound", "30", "--list"]);
    assert_eq!(stdout(&out), "pi(30) = 10\n2,3,5,7,11,13,17,19,23,29\n");
}
