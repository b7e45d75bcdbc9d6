use spin_young::cli::{exit_code_for, run_cli};
use spin_young::report::ReportBuilder;

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut full = vec!["spin-young"];
    full.extend_from_slice(args);
    let code = run_cli(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn verify_small_rank_succeeds() {
    let (code, out, _) = run(&["verify", "--k", "3"]);
    assert_eq!(code, 0);
    let reports: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(reports.as_array().is_some_and(|a| !a.is_empty()));
}

#[test]
fn verify_text_lines() {
    let (code, out, _) = run(&["verify", "--lambda", "2,1", "--format", "text"]);
    assert_eq!(code, 0);
    assert!(out.lines().all(|l| l.starts_with("PASS") || l.starts_with("SKIPPED")), "{out}");
    assert!(out.contains("spin_specht"));
}

#[test]
fn argument_errors_exit_two() {
    assert_eq!(run(&["verify"]).0, 2);
    assert_eq!(run(&["bogus"]).0, 2);
    assert_eq!(run(&["verify", "--k", "3", "--lambda", "2,1"]).0, 2);
    assert_eq!(run(&["verify", "--lambda", "2,2"]).0, 2);
    let (code, _, err) = run(&["verify", "--k", "7"]);
    assert_eq!(code, 2);
    assert!(err.contains("--allow-large"));
    assert_eq!(run(&["verify", "--k", "3", "--format", "csv"]).0, 2);
    assert_eq!(run(&["decompose", "--n", "3", "--k", "2"]).0, 2);
    assert_eq!(run(&["element", "--kind", "tau", "--k", "3"]).0, 2);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}

#[test]
fn element_kappa_single_row() {
    let (code, out, _) = run(&["element", "--kind", "kappa", "--lambda", "2", "--print"]);
    assert_eq!(code, 0);
    assert_eq!(out, "kappa[1,2] = 2 * perm(1 2)\n");
}

#[test]
fn element_json() {
    let (code, out, _) = run(&["element", "--kind", "jm", "--k", "2", "--m", "1", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["name"], "pi_1");
    assert_eq!(v[0]["element"], "0");
}

#[test]
fn decompose_csv() {
    let (code, out, _) = run(&["decompose", "--n", "2", "--k", "3", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("lambda,dim_M,dim_R,g,delta,dim_qspan"));
    assert!(out.contains("\"3\","));
    assert!(out.contains("\"2,1\","));
}

#[test]
fn out_writes_file() {
    let path = std::env::temp_dir().join(format!("spin-young-cli-{}.txt", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = run(&["relations", "--k", "3", "--format", "text", "--out", p]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(written.contains("tau_relations"));
}

#[test]
fn failed_report_exit_code() {
    let mut r = ReportBuilder::new("synthetic");
    r.fail("forced", "detail");
    assert_eq!(exit_code_for(&[r.finish()]), 1);
    assert_eq!(exit_code_for(&[ReportBuilder::new("ok").finish()]), 0);
}
