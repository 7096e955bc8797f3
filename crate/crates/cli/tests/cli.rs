use std::io::Write;
use std::process::{Command, Output, Stdio};

fn ngbounds(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ngbounds"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

// CS(5,3): vertices 0..3 independent, 3 and 4 adjacent to everything
const SPLIT_5_3: &str = "DF{";

#[test]
fn split_graph_fixture_is_complete_split() {
    let o = ngbounds(&["family", "--kind", "complete_split", "--params", "5,3"]);
    assert_eq!(stdout(&o).lines().next(), Some(SPLIT_5_3));
}

#[test]
fn clean_scan_exits_zero() {
    let o = ngbounds(&["scan", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("VIOLATIONS: 0\n"));
}

#[test]
fn conjecture_violation_exits_two() {
    // a negative tolerance turns CONJ2_F1 equality into a violation
    let o = ngbounds(&["check", "--g6", SPLIT_5_3, "--bounds", "CONJ2_F1", "--tol", "-0.5"]);
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    assert!(text.contains("\"bound\":\"CONJ2_F1\"") && text.contains("\"holds\":false"));
}

#[test]
fn conjecture_dependent_side_exits_two() {
    // K5 meets the conditional upper side of THM_SPLUS_SUM with equality
    let o = ngbounds(&["check", "--g6", "D~{", "--bounds", "THM_SPLUS_SUM", "--tol", "-0.5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn theorem_violation_exits_three() {
    let o = ngbounds(&["scan", "--n", "3", "--bounds", "STANLEY,CONJ2_F1", "--tol", "-100"]);
    assert_eq!(o.status.code(), Some(3));
    let text = stdout(&o);
    assert!(text.ends_with("VIOLATIONS: 16\n"), "{text}");
}

#[test]
fn operational_errors_exit_one() {
    for args in [
        vec!["scan", "--n", "9"],
        vec!["scan", "--input", "/nonexistent/graphs.g6"],
        vec!["check", "--g6", "Bx"],
        vec!["check", "--g6", "Dhc", "--bounds", "NOT_A_BOUND"],
        vec!["scan", "--n", "4", "--report", "/nonexistent/dir/report.csv", "--format", "csv"],
    ] {
        let o = ngbounds(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("error: "));
    }
}

#[test]
fn malformed_corpus_line_is_located() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.g6");
    std::fs::write(&path, "Dhc\nC~\nBx\n").unwrap();
    let o = ngbounds(&["scan", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("bad.g6:3"));
}

#[test]
fn stdin_source() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ngbounds"))
        .args(["scan", "--stdin", "--bounds", "THM_RANDIC", "--format", "jsonl", "--all-rows"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    // header line then K(2,3)
    child.stdin.take().unwrap().write_all(b">>graph6<<DFw\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let line = stdout(&o);
    assert!(line.contains("\"equality\":true"), "{line}");
}

#[test]
fn report_file_formats() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("r.csv");
    let o = ngbounds(&[
        "scan", "--family", "paley(5)", "--family", "paley:13", "--bounds", "CONJ5_CONF,NY_ENERGY", "--all-rows",
        "--format", "csv", "--report", csv.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "bound,g6,lhs,rhs,slack,holds,equality,skipped,reason");
    assert_eq!(lines.len(), 5);
    assert!(lines[1..].iter().all(|l| l.contains(",true,true,false,")));

    let empty = dir.path().join("empty.csv");
    ngbounds(&["scan", "--n", "3", "--format", "csv", "--report", empty.to_str().unwrap()]);
    assert_eq!(std::fs::read_to_string(&empty).unwrap().lines().count(), 1);
}

#[test]
fn summary_omits_worker_count() {
    let o = ngbounds(&["scan", "--n", "4", "--jobs", "3", "--bounds", "TERPAI"]);
    let text = stdout(&o);
    assert!(text.starts_with("command: ngbounds scan --n 4 --bounds TERPAI\n"), "{text}");
}

#[test]
fn family_prints_invariants() {
    let o = ngbounds(&["family", "--kind", "cycle", "--params", "5"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("Dhc"));
    let inv: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(inv["m"], 5);
    assert_eq!(inv["chi"], 3);
    assert!((inv["randic"].as_f64().unwrap() - 2.5).abs() < 1e-12);
    assert_eq!(ngbounds(&["family", "--kind", "paley", "--params", "7"]).status.code(), Some(1));
}

#[test]
fn search_is_reproducible() {
    let args = ["search", "--objective", "MU_NG_SUM", "--n", "6", "--seed", "9", "--restarts", "3", "--steps", "40"];
    let a = ngbounds(&args);
    let b = ngbounds(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let r: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(r["objective"], "MU_NG_SUM");
    assert_eq!(r["seed"], 9);
    assert!(r["best_value"].as_f64().unwrap() >= r["seeded_value"].as_f64().unwrap());
}

#[test]
fn subgraph_scan_reports_pairs_with_mode() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pair.g6");
    // first pair found in the 9-vertex corpus
    std::fs::write(&path, "HUxvuzy\nC~\n").unwrap();
    for mode in ["edge", "full"] {
        let o = ngbounds(&["subgraph-scan", "--input", path.to_str().unwrap(), "--mode", mode]);
        assert_eq!(o.status.code(), Some(0));
        let text = stdout(&o);
        assert_eq!(text.lines().count(), 1, "{text}");
        let p: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
        assert_eq!(p["mode"], mode);
        assert_eq!(p["subgraph6"], "HUxVuzy");
        assert!(p["s_plus_subgraph"].as_f64().unwrap() > p["s_plus"].as_f64().unwrap() + 1e-9);
    }
}
