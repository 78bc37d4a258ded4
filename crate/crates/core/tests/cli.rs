use std::process::{Command, Output};

use fractional_szilard::app::{read_csv, SweepStatus};

fn fqhe(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fqhe")).args(args).output().expect("spawn fqhe")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn validate_passes() {
    let out = fqhe(&["validate"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(!stdout(&out).contains("FAIL"));
}

#[test]
fn spectrum_lists_levels() {
    let out = fqhe(&["spectrum", "--alpha", "1.5", "--a-nm", "10", "--n-max", "3", "--divided"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,energy_J,degeneracy");
    assert_eq!(lines.len(), 4);
    assert!(lines[1..].iter().all(|l| l.ends_with(",2")));
}

#[test]
fn cycle_reports_work() {
    let out = fqhe(&["cycle", "--alpha", "2", "--a-nm", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let line = text.lines().find(|l| l.starts_with("work_over_kTh")).unwrap();
    let value: f64 = line.split(" = ").nth(1).unwrap().parse().unwrap();
    assert!((value - 0.5 * std::f64::consts::LN_2).abs() < 1e-12);
    assert!(text.contains("efficiency = 5.0000000000000000e-1"));
}

#[test]
fn out_of_range_parameters_exit_with_two() {
    assert_eq!(fqhe(&["spectrum", "--alpha", "2.5", "--a-nm", "1"]).status.code(), Some(2));
    assert_eq!(fqhe(&["cycle", "--alpha", "2", "--a-nm", "1", "--th-k", "1", "--tc-k", "2"]).status.code(), Some(2));
    assert_eq!(
        fqhe(&["partition", "--alpha", "2", "--a-nm", "1", "--temp-k", "1", "--tolerance", "0.1"]).status.code(),
        Some(2)
    );
}

#[test]
fn term_cap_exits_with_one() {
    let out = fqhe(&["partition", "--alpha", "2", "--a-nm", "300", "--temp-k", "1", "--max-terms", "10"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn sweep_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("cfg.json");
    let csv = dir.path().join("out.csv");
    std::fs::write(&config, r#"{"a_list_nm": [1, 20, 100], "alpha_list": [2.0, 1.5]}"#).unwrap();
    let out = fqhe(&["sweep", "--config", config.to_str().unwrap(), "--out", csv.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let rows = read_csv(&csv).unwrap();
    assert_eq!(rows.len(), 6);
    assert_eq!(rows[3].alpha, 1.5);
    assert!(rows.iter().all(|r| r.status != SweepStatus::TruncationFailed));
}

#[test]
fn bad_config_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("cfg.json");
    std::fs::write(&config, r#"{"alpha_list": [2.0, 2.5]}"#).unwrap();
    let out = fqhe(&["sweep", "--config", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("alpha_list[1]"));

    std::fs::write(&config, r#"{"alpha": [2.0]}"#).unwrap();
    assert_eq!(fqhe(&["sweep", "--config", config.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(fqhe(&["sweep", "--config", "/nonexistent/cfg.json"]).status.code(), Some(2));
}
