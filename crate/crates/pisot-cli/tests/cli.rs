//! Integration tests of the `pisot` binary surface: argument handling,
//! output formats, exit codes, and the journal's configuration guard.
//! Heavy end-to-end checks live in the acceptance test; everything here
//! finishes in seconds.

use std::path::Path;
use std::process::{Command, Output};

fn pisot() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pisot"))
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn enumerate_writes_record_lines() {
    let dir = tempfile::tempdir().unwrap();
    let out_file = dir.path().join("d3.txt");
    let out = pisot()
        .args(["enumerate", "--degree", "3", "--interval", "1", "2", "--out"])
        .arg(&out_file)
        .output()
        .unwrap();
    assert!(out.status.success(), "stderr: {}", stderr_of(&out));
    assert!(stdout_of(&out).contains("wrote 4 records"));
    let contents = std::fs::read_to_string(&out_file).unwrap();
    let lines: Vec<&str> = contents.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines.contains(&"3 1 0 -1 -1 | 1.324717957245"));
    for line in lines {
        pisot_cli::format::parse_record_line(line).unwrap();
    }
}

#[test]
fn enumerate_rejects_inverted_intervals() {
    let dir = tempfile::tempdir().unwrap();
    let out = pisot()
        .args(["enumerate", "--degree", "3", "--interval", "2", "1", "--out"])
        .arg(dir.path().join("x.txt"))
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(stderr_of(&out).contains("bad interval"));
}

#[test]
fn check_prints_verdict_lines_for_all_applicable_relations() {
    let out = pisot()
        .args(["check", "--poly", "1 0 -1 -1", "--relation", "all"])
        .output()
        .unwrap();
    assert!(out.status.success(), "stderr: {}", stderr_of(&out));
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    // Degree 3: only the two three-term relations apply.
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], "3 1 0 -1 -1");
    assert!(lines[1].starts_with("sum3zero 1 "));
    assert!(lines[1].ends_with(" 1 2 3"));
    assert_eq!(lines[2], "eqsum2 0 - -");
}

#[test]
fn check_emits_the_json_mirror() {
    let out = pisot()
        .args([
            "check",
            "--poly",
            "1 -2 0 1 -1",
            "--relation",
            "paireq",
            "--json",
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "stderr: {}", stderr_of(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["poly"], "4 1 -2 0 1 -1");
    assert_eq!(v["degree"], 4);
    let verdicts = v["verdicts"].as_array().unwrap();
    assert_eq!(verdicts.len(), 1);
    assert_eq!(verdicts[0]["relation"], "paireq");
    assert_eq!(verdicts[0]["holds"], true);
    assert_eq!(
        verdicts[0]["witness"],
        serde_json::json!([1, 2, 3, 4])
    );
}

#[test]
fn check_rejects_unknown_relations_and_thin_degrees() {
    let out = pisot()
        .args(["check", "--poly", "1 0 -1 -1", "--relation", "nonsense"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(stderr_of(&out).contains("unknown relation"));

    let out = pisot()
        .args(["check", "--poly", "1 0 -1 -1", "--relation", "paireq"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(stderr_of(&out).contains("degree below the relation arity"));
}

#[test]
fn tiny_pipeline_finds_the_three_term_solution() {
    let dir = tempfile::tempdir().unwrap();
    let out = pisot()
        .args(["pipeline", "--family", "three", "--max-degree", "4", "--jobs", "2", "--out"])
        .arg(dir.path())
        .output()
        .unwrap();
    assert!(out.status.success(), "stderr: {}", stderr_of(&out));
    assert!(stdout_of(&out).contains("sum3zero: 1 survivor(s), 1 solution(s) [3 1 0 -1 -1]"));
    for artifact in [
        "report.json",
        "counts.csv",
        "timings.json",
        "three/journal.txt",
        "three/records/d03.txt",
        "three/records/d04.txt",
        "three/solutions-sum3zero.txt",
        "three/survivors-eqsum2.txt",
    ] {
        assert!(
            dir.path().join(artifact).exists(),
            "missing artifact {artifact}"
        );
    }
    let report = std::fs::read_to_string(dir.path().join("report.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&report).unwrap();
    assert_eq!(v["families"]["three"]["counts"]["3"], 4);
    assert_eq!(v["families"]["three"]["counts"]["4"], 4);
    assert_eq!(
        v["families"]["three"]["solutions"]["sum3zero"],
        serde_json::json!(["3 1 0 -1 -1"])
    );
}

#[test]
fn journal_guard_rejects_config_changes() {
    let dir = tempfile::tempdir().unwrap();
    let run = |max: &str| -> Output {
        pisot()
            .args(["pipeline", "--family", "three", "--max-degree", max, "--out"])
            .arg(dir.path())
            .output()
            .unwrap()
    };
    assert!(run("3").status.success());
    let second = run("4");
    assert!(!second.status.success());
    assert!(stderr_of(&second).contains("different configuration"));
}

#[test]
fn workers_come_from_the_environment_when_unflagged() {
    let dir = tempfile::tempdir().unwrap();
    let out = pisot()
        .args(["pipeline", "--family", "three", "--max-degree", "3", "--out"])
        .arg(dir.path())
        .env("PISOT_WORKERS", "2")
        .output()
        .unwrap();
    assert!(out.status.success(), "stderr: {}", stderr_of(&out));
    let timings = std::fs::read_to_string(dir.path().join("timings.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&timings).unwrap();
    assert_eq!(v["workers"], 2);

    let bad = pisot()
        .args(["pipeline", "--family", "three", "--max-degree", "3", "--out"])
        .arg(dir.path().join("unused"))
        .env("PISOT_WORKERS", "zero")
        .output()
        .unwrap();
    assert!(!bad.status.success());
    assert!(stderr_of(&bad).contains("PISOT_WORKERS"));
}

#[test]
fn verify_paper_passes_at_desk_scale_and_reports_checks() {
    let dir = tempfile::tempdir().unwrap();
    let out = pisot()
        .args(["verify-paper", "--max-degree", "4", "--jobs", "2", "--out"])
        .arg(dir.path())
        .output()
        .unwrap();
    let text = stdout_of(&out);
    assert!(
        out.status.success(),
        "stdout: {text}\nstderr: {}",
        stderr_of(&out)
    );
    assert!(text.contains("PASS: degree-3 record list (4 records, exact match)"));
    assert!(text.contains("PASS: three-family degree-3 count (4)"));
    assert!(text.contains("PASS: three-family degree-4 count (4)"));
    assert!(text.contains("PASS: four-family degree-4 count (43)"));
    assert!(text.contains("PASS: sum3zero solution set (three-family) (3 1 0 -1 -1)"));
    assert!(text.contains("PASS: paireq solution set (four-family) (4 1 -2 0 1 -1)"));
    assert!(text.contains("PASS: eqsum3 solution set (four-family) (empty as expected)"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_paper_needs_a_sensible_degree() {
    let out = pisot()
        .args(["verify-paper", "--max-degree", "2"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(stderr_of(&out).contains("at least 3"));
}

/// Shard files written by one run parse back and survive a second merge:
/// this drives the record-file parser over a realistic corpus.
#[test]
fn shard_files_round_trip_through_resume() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["pipeline", "--family", "three", "--max-degree", "5", "--out"];
    let first = pisot().args(args).arg(dir.path()).output().unwrap();
    assert!(first.status.success(), "stderr: {}", stderr_of(&first));
    let report1 = std::fs::read(dir.path().join("report.json")).unwrap();
    let records1 = std::fs::read(dir.path().join("three/records/d05.txt")).unwrap();

    let second = pisot().args(args).arg(dir.path()).output().unwrap();
    assert!(second.status.success(), "stderr: {}", stderr_of(&second));
    let report2 = std::fs::read(dir.path().join("report.json")).unwrap();
    let records2 = std::fs::read(dir.path().join("three/records/d05.txt")).unwrap();
    assert_eq!(report1, report2);
    assert_eq!(records1, records2);
    assert!(Path::new(&dir.path().join("three/shards")).read_dir().unwrap().count() > 0);
}
