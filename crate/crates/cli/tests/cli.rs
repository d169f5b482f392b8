use std::process::{Command, Output};

fn rankvar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rankvar")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn verify_main_passes_and_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("main.json");
    let out = rankvar(&["verify", "--suite", "main", "--p", "3", "--k", "2", "--e", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["counters"]["points"], 81);
    assert!(v.get("elapsed").is_none());
}

#[test]
fn verify_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ann.csv");
    let out = rankvar(&["verify", "--suite", "annihilation", "--p", "3", "--k", "2", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("suite,check,pass,detail\n"));
    assert_eq!(text.lines().count(), 3);
}

#[test]
fn scan_reports_are_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    for format in ["json", "csv"] {
        let a = dir.path().join(format!("a.{format}"));
        let b = dir.path().join(format!("b.{format}"));
        for path in [&a, &b] {
            let out = rankvar(&[
                "scan", "--module", "D1", "--p", "3", "--k", "3", "--e", "2", "--samples", "40", "--seed", "9", "--format", format,
                "--out", path.to_str().unwrap(),
            ]);
            assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
        }
        assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    }
    let csv = std::fs::read_to_string(dir.path().join("a.csv")).unwrap();
    assert_eq!(csv.lines().count(), 41);
}

#[test]
fn exhaustive_scan_of_the_main_module() {
    let out = rankvar(&["scan", "--module", "D(p-1)", "--p", "3", "--k", "2", "--e", "2", "--exhaustive", "--intersection"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["records"].as_array().unwrap().len(), 81);
    assert_eq!(v["verdicts"]["membership_matches_predicate"], true);
    assert_eq!(v["verdicts"]["predicate"], "p_k = 0");
    assert_eq!(v["verdicts"]["claimed_complexity"], 1);
}

#[test]
fn orbit_reduced_scan_is_smaller() {
    let out = rankvar(&["scan", "--module", "specht", "--p", "3", "--k", "2", "--e", "2", "--orbit-reduce"]);
    assert_eq!(out.status.code(), Some(0));
    let n = json(&out)["records"].as_array().unwrap().len();
    assert!(n < 81 && n > 1);
}

#[test]
fn module_build_prints_summary() {
    let out = rankvar(&["module", "build", "--p", "3", "--k", "2", "--which", "Dr", "--r", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["dim"], 6);
    assert_eq!(v["generators_commute"], true);
    assert_eq!(v["generator_orders"], serde_json::json!([3, 3]));
}

#[test]
fn generic_reports_certificate() {
    let out = rankvar(&["generic", "--module", "D1", "--p", "3", "--k", "2", "--trials", "6", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["certificate"]["jordan_type"], serde_json::json!([3, 1]));
    assert_eq!(v["certificate"]["unanimous"], true);
}

#[test]
fn repring_reports_both_paths() {
    let out = rankvar(&["repring", "--p", "7", "ext", "--a", "5", "--r", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["agree"], true);
    assert_eq!(v["matrix_path"], v["gaussian_path"]);
    let out = rankvar(&["repring", "--p", "5", "tensor", "--a", "3,1", "--b", "5"]);
    assert_eq!(json(&out)["matrix_path"], serde_json::json!([5, 5, 5, 5]));
}

#[test]
fn lr_verify_exit_codes() {
    let ok = rankvar(&["lr", "verify", "--p", "5", "--m", "2", "--b-range", "3..5", "--case", "2"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["all_equal"], true);
    let bad = rankvar(&["lr", "verify", "--p", "5", "--m", "3", "--b-range", "4..6", "--case", "2"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(!json(&bad)["records"][0]["oracle_set"].as_array().unwrap().is_empty());
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(rankvar(&["verify", "--suite", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(rankvar(&["scan", "--module", "X", "--p", "3", "--k", "2"]).status.code(), Some(2));
    assert_eq!(rankvar(&["module", "build", "--p", "3", "--k", "2", "--which", "Dr"]).status.code(), Some(2));
    assert_eq!(rankvar(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn guardrails_exit_3() {
    let out = rankvar(&["verify", "--suite", "main", "--p", "11", "--k", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("p <= 7"));
    assert_eq!(rankvar(&["scan", "--module", "D1", "--p", "3", "--k", "5"]).status.code(), Some(3));
    assert_eq!(rankvar(&["scan", "--module", "D1", "--p", "3", "--k", "2", "--e", "4"]).status.code(), Some(3));
}

#[test]
fn unwritable_output_exits_4() {
    let out = rankvar(&["verify", "--suite", "lr-example", "--out", "/nonexistent-dir/report.json"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn traceability_lists_every_suite() {
    let out = rankvar(&["traceability"]);
    let text = String::from_utf8(out.stdout).unwrap();
    for suite in ["main", "corollary", "d1-generic", "specht-variety", "rank-laws", "lr-sources", "intersection"] {
        assert!(text.contains(&format!("| `{suite}` |")), "{suite}");
    }
    assert!(text.starts_with("| Suite |"));
}
