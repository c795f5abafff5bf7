use std::io::Write;
use std::process::{Command, Output, Stdio};

fn cdcrit(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cdcrit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<serde_json::Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn gen_families() {
    let o = cdcrit(&["gen", "--family", "g3", "--params", "3"], "");
    assert!(o.status.success());
    let g = cdcrit::from_graph6(stdout(&o).trim().as_bytes()).unwrap();
    assert_eq!(g.n(), 12);
    let o = cdcrit(&["gen", "--family", "g2", "--params", "3,0,1,1"], "");
    assert_eq!(stdout(&o).trim(), stdout(&cdcrit(&["gen", "--family", "g2", "--params", "3"], "")).trim());
    let o = cdcrit(&["gen", "--family", "g1", "--params", "1"], "");
    assert!(!o.status.success());
}

#[test]
fn invariants_from_stdin_and_file() {
    let o = cdcrit(&["invariants"], ">>graph6<<Dhc\n\nC~\n");
    assert!(o.status.success());
    let lines = json_lines(&o);
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["kappa"], 2);
    assert_eq!(lines[0]["gamma_c"], 3);
    assert_eq!(lines[1]["omega"], 4);

    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "Dhc").unwrap();
    let o = cdcrit(&["invariants", "--file", f.path().to_str().unwrap()], "");
    assert_eq!(json_lines(&o).len(), 1);

    let o = cdcrit(&["invariants"], "Dh\n");
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
}

#[test]
fn check_critical_reports_errors_as_data() {
    let o = cdcrit(&["check-critical", "--k", "3"], "Dhc\nA?\n");
    let lines = json_lines(&o);
    assert_eq!(lines[0]["maximal"], true);
    assert!(lines[1]["error"].is_string());
    assert!(!o.status.success());
}

#[test]
fn enumerate_counts() {
    let count = |args: &[&str]| stdout(&cdcrit(args, "")).lines().count();
    assert_eq!(count(&["enumerate", "--n", "5", "--connected"]), 21);
    assert_eq!(count(&["enumerate", "--n", "4"]), 11);
    assert_eq!(count(&["enumerate", "--n", "5", "--critical-k", "3"]), 1);
    assert!(!cdcrit(&["enumerate", "--n", "8"], "").status.success());
}

#[test]
fn verify_theorems_outputs() {
    let o = cdcrit(&["verify-theorems", "--suite", "T3.3,C4.10", "--n", "5"], "");
    assert!(o.status.success());
    let lines = json_lines(&o);
    let summaries: Vec<_> = lines.iter().filter_map(|l| l.get("summary")).collect();
    assert_eq!(summaries.len(), 2);
    assert_eq!(summaries[0]["theorem_id"], "T3.3");
    assert_eq!(summaries[0]["graphs_checked"], 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("T3.3"));

    let o = cdcrit(&["verify-theorems", "--suite", "nope", "--n", "3"], "");
    assert!(!o.status.success());
}

#[test]
fn reports_are_byte_identical_across_thread_counts() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_cdcrit"))
            .args(["verify-theorems", "--n", "6"])
            .env("CDCRIT_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn conjecture_exits_zero() {
    let o = cdcrit(&["conjecture"], "Dhc\n");
    assert!(o.status.success());
    let lines = json_lines(&o);
    assert_eq!(lines.last().unwrap()["summary"]["graphs_checked"], 1);
}
