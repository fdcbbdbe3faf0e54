//! End-to-end tests of the `dbal` binary: flag handling, report content,
//! and the exit-code contract (0 success, 1 counterexample, 2 input error,
//! 3 hypothesis not applicable).

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn dbal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dbal"))
        .args(args)
        .output()
        .expect("spawning dbal")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is utf-8")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("process not killed by a signal")
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

#[test]
fn analyze_complete_graph_is_highly_balanced() {
    let out = dbal(&["analyze", "--g6", "Bw"]);
    assert_eq!(exit_code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("3 vertices, 3 edges"), "{text}");
    assert!(text.contains("highly distance-balanced: yes"), "{text}");
}

#[test]
fn analyze_path_reports_its_profile() {
    let out = dbal(&["analyze", "--family", "path", "--n", "4"]);
    assert_eq!(exit_code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("l=1: not balanced"), "{text}");
    assert!(text.contains("l=2: not balanced"), "{text}");
    assert!(text.contains("l=3: balanced"), "{text}");
    assert!(text.contains("highly distance-balanced: no"), "{text}");
}

#[test]
fn analyze_wheel_reports_join_classification_in_json() {
    let out = dbal(&["analyze", "--family", "wheel", "--n", "6", "--format", "json"]);
    assert_eq!(exit_code(&out), 0, "{}", stderr(&out));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["diameter"], 2);
    assert_eq!(report["join_classification"], "nonregular-join-of-regulars");
    assert_eq!(report["balance_profile"][1]["balanced"], true);
    assert_eq!(report["balance_profile"][0]["balanced"], false);
}

#[test]
fn analyze_reads_edge_list_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("square.edges");
    fs::write(&path, "4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    let out = dbal(&["analyze", "--edges", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("highly distance-balanced: yes"));
}

#[test]
fn analyze_writes_reports_to_out_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = dbal(&[
        "analyze",
        "--family",
        "C5",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).is_empty());
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["highly_distance_balanced"], true);
}

#[test]
fn analyze_rejects_disconnected_graphs_with_exit_3() {
    let out = dbal(&["analyze", "--family", "empty:3"]);
    assert_eq!(exit_code(&out), 3);
    assert!(stderr(&out).contains("disconnected"), "{}", stderr(&out));
}

#[test]
fn analyze_rejects_bad_input_with_exit_2() {
    let out = dbal(&["analyze", "--g6", "##"]);
    assert_eq!(exit_code(&out), 2);
    let out = dbal(&["analyze", "--family", "heptagon", "--n", "7"]);
    assert_eq!(exit_code(&out), 2);
    // No source at all is a usage error; clap also exits 2.
    let out = dbal(&["analyze"]);
    assert_eq!(exit_code(&out), 2);
}

// ---------------------------------------------------------------------------
// product
// ---------------------------------------------------------------------------

#[test]
fn product_builds_the_three_cube() {
    let out = dbal(&["product", "cartesian", "K2", "C4"]);
    assert_eq!(exit_code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("8 vertices, 12 edges, diameter 3"), "{text}");
    assert!(text.contains("matches BFS on all 64 ordered pairs"), "{text}");
}

#[test]
fn product_writes_graph6_to_out_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("corona.g6");
    let out = dbal(&["product", "corona", "K2", "K1", "--out", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0, "{}", stderr(&out));
    let line = fs::read_to_string(&path).unwrap();
    // The file round-trips through analyze as a path on four vertices.
    let out = dbal(&["analyze", "--g6", line.trim()]);
    let text = stdout(&out);
    assert!(text.contains("4 vertices, 3 edges"), "{text}");
    assert!(text.contains("l=3: balanced"), "{text}");
}

#[test]
fn product_accepts_kind_aliases_and_json() {
    let out = dbal(&["product", "lex", "K1", "C5", "--format", "json"]);
    assert_eq!(exit_code(&out), 0, "{}", stderr(&out));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["kind"], "lexicographic");
    // K1[H] is H unchanged.
    assert_eq!(report["product"]["n"], 5);
    assert_eq!(report["product"]["m"], 5);
    assert_eq!(report["distance_formula"]["ok"], true);
}

#[test]
fn product_enforces_the_budget_with_exit_2() {
    let out = dbal(&["product", "lexicographic", "K8", "K8", "--budget", "60"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("--budget"), "{}", stderr(&out));
}

#[test]
fn product_rejects_unknown_kinds_and_bad_factors() {
    let out = dbal(&["product", "tensor", "K2", "K2"]);
    assert_eq!(exit_code(&out), 2);
    let out = dbal(&["product", "cartesian", "K2", "nonsense"]);
    assert_eq!(exit_code(&out), 2);
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

#[test]
fn verify_single_instance_passes_on_a_balanced_case() {
    let out = dbal(&["verify", "--check", "lex-3.2", "--g", "P4", "--h", "K2", "--l", "3"]);
    assert_eq!(exit_code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("lex-3.2"), "{text}");
    assert!(text.contains("ok (predicted true, observed true)"), "{text}");
    assert!(text.contains("total: 1 checked, 0 skipped, 0 failed"), "{text}");
}

#[test]
fn verify_crosses_graph_files_in_single_instance_mode() {
    let dir = tempfile::tempdir().unwrap();
    let gs = dir.path().join("gs.g6");
    // P4 and C6 both have diameter >= 3.
    let p4 = dbal_core::graph::Family::Path(4).build().unwrap();
    let c6 = dbal_core::graph::Family::Cycle(6).build().unwrap();
    let lines = format!(
        "{}\n{}\n",
        dbal_core::to_graph6(&p4).unwrap(),
        dbal_core::to_graph6(&c6).unwrap()
    );
    fs::write(&gs, lines).unwrap();
    let out = dbal(&[
        "verify", "--check", "lex-3.2", "--g", gs.to_str().unwrap(), "--h", "K2", "--l", "3",
    ]);
    assert_eq!(exit_code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("total: 2 checked, 0 skipped, 0 failed"), "{text}");
}

#[test]
fn verify_single_instance_skips_exit_3() {
    // lex-3.2 concerns l >= 3 only; at l = 1 every instance is skipped.
    let out = dbal(&["verify", "--check", "lex-3.2", "--g", "K3", "--h", "K2", "--l", "1"]);
    assert_eq!(exit_code(&out), 3, "{}", stderr(&out));
    assert!(stdout(&out).contains("SKIP"), "{}", stdout(&out));
}

#[test]
fn verify_empty_source_checks_nothing_and_succeeds() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.g6");
    fs::write(&empty, "# nothing here\n").unwrap();
    let out = dbal(&[
        "verify", "--check", "lex-3.2", "--g", empty.to_str().unwrap(), "--h", "K2",
    ]);
    assert_eq!(exit_code(&out), 0, "{}", stderr(&out));
    assert!(
        stdout(&out).contains("total: 0 checked, 0 skipped, 0 failed"),
        "{}",
        stdout(&out)
    );
}

#[test]
fn verify_sweep_reports_zero_failures_in_json() {
    let out = dbal(&[
        "verify", "--check", "cor-4.2", "--sweep", "connected:n<=4", "--format", "json",
    ]);
    assert_eq!(exit_code(&out), 0, "{}", stderr(&out));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        report["command"],
        "dbal verify --check cor-4.2 --sweep connected:n<=4"
    );
    assert_eq!(report["summary"]["failed"], 0);
    assert!(report["summary"]["checked"].as_u64().unwrap() > 0);
    assert_eq!(report["instances"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_text_and_json_agree_on_verdicts() {
    let args = ["verify", "--check", "prop-6.1", "--g", "C5"];
    let text_run = dbal(&args);
    let json_run = dbal(&[&args[..], &["--format", "json"]].concat());
    assert_eq!(exit_code(&text_run), 0);
    assert_eq!(exit_code(&json_run), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&json_run)).unwrap();
    let checked = report["summary"]["checked"].as_u64().unwrap();
    let failed = report["summary"]["failed"].as_u64().unwrap();
    assert!(
        stdout(&text_run).contains(&format!("total: {checked} checked, 0 skipped, {failed} failed")),
        "{}",
        stdout(&text_run)
    );
}

#[test]
fn verify_rejects_bad_selections_with_exit_2() {
    let out = dbal(&["verify", "--check", "thm-9.9", "--g", "K3"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("unknown check id"), "{}", stderr(&out));

    let out = dbal(&["verify", "--check", "lex-3.2", "--sweep", "bogus:n<=3"]);
    assert_eq!(exit_code(&out), 2);

    // Sweep and explicit inputs are mutually exclusive.
    let out = dbal(&[
        "verify", "--check", "lex-3.2", "--sweep", "G:n<=4", "--g", "P4",
    ]);
    assert_eq!(exit_code(&out), 2);

    // Cartesian checks need --n in single-instance mode.
    let out = dbal(&["verify", "--check", "thm-5.2", "--h", "C5"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("requires"), "{}", stderr(&out));
}

#[test]
fn verify_never_balanced_band_passes_both_ways() {
    // thm-4.4ii predicts "not balanced" throughout its band; a passing
    // run prints negative predictions that agree with observation.
    let out = dbal(&["verify", "--check", "thm-4.4ii", "--g", "P4", "--h", "K2"]);
    assert_eq!(exit_code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("ok (predicted false, observed false)"), "{text}");
    assert!(!text.contains("FAIL"), "{text}");
}

#[test]
fn verify_honors_the_jobs_flag_and_env() {
    let out = dbal(&[
        "verify", "--check", "prop-6.1", "--sweep", "connected:n<=4", "--jobs", "2", "--format",
        "json",
    ]);
    assert_eq!(exit_code(&out), 0, "{}", stderr(&out));
    let via_env = Command::new(env!("CARGO_BIN_EXE_dbal"))
        .args(["verify", "--check", "prop-6.1", "--sweep", "connected:n<=4", "--format", "json"])
        .env("DBAL_JOBS", "2")
        .output()
        .expect("spawning dbal");
    assert_eq!(exit_code(&via_env), 0);
    // Identical selection => identical report, apart from the wall clock.
    assert_eq!(
        strip_wall_time(&stdout(&out)),
        strip_wall_time(&stdout(&via_env))
    );
}

#[test]
fn verify_writes_reports_to_out_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = dbal(&[
        "verify",
        "--check",
        "prop-6.1",
        "--g",
        "P4",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).is_empty());
    assert!(Path::new(&path).exists());
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["summary"]["failed"], 0);
    assert_eq!(report["instances"].as_array().unwrap().len(), 3);
}

fn strip_wall_time(json: &str) -> String {
    json.lines()
        .filter(|l| !l.contains("wall_time_ms"))
        .collect::<Vec<_>>()
        .join("\n")
}
