use std::process::{Command, Output};

use brieskorn::formats::ScriptJson;
use brieskorn::report::{CsvRow, VerificationReport};

fn brieskorn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brieskorn")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn info_reports_invariants() {
    let o = brieskorn(&["info", "2", "7", "19"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("signature    -6"));
    assert!(text.contains("mubar        0"));

    let o = brieskorn(&["info", "2", "3", "7", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["mubar"], 1);
    assert_eq!(v["casson"], -1);
    assert_eq!(v["plumbing"]["weights"], serde_json::json!([-1, -2, -3, -7]));
}

#[test]
fn info_rejects_bad_triples() {
    for args in [["info", "2", "4", "6"], ["info", "0", "3", "5"], ["info", "-2", "3", "5"]] {
        let o = brieskorn(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
    let o = brieskorn(&["info", "2", "4", "6"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not coprime"));
}

#[test]
fn info_casson_is_opt_in_elsewhere() {
    let plain: serde_json::Value = serde_json::from_str(&stdout(&brieskorn(&["info", "2", "5", "7", "--json"]))).unwrap();
    assert!(plain["casson"].is_null());
    let with: serde_json::Value =
        serde_json::from_str(&stdout(&brieskorn(&["info", "2", "5", "7", "--json", "--casson"]))).unwrap();
    assert!(with["casson"].is_i64());
}

#[test]
fn info_dot_export() {
    let o = brieskorn(&["info", "2", "3", "5", "--dot"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("graph plumbing {"));
    assert_eq!(text.matches(" -- ").count(), 7);
}

#[test]
fn family_csv_has_one_passing_row_per_member() {
    let o = brieskorn(&["family", "thm1-even2", "1", "10", "--csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("family,n,p,q,r,vertices,det,neg_def,signature,wu_square,mubar,pass"));
    let rows: Vec<CsvRow> = brieskorn::report::from_csv(&text).unwrap();
    assert_eq!(rows.len(), 10);
    assert!(rows.iter().all(|r| r.pass));
    assert_eq!(rows.iter().map(|r| r.n).collect::<Vec<_>>(), (1..=10).collect::<Vec<_>>());
}

#[test]
fn family_json_round_trips() {
    let o = brieskorn(&["family", "al-2", "1", "9", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let reports: Vec<VerificationReport> = serde_json::from_str(&text).unwrap();
    assert_eq!(reports.iter().map(|r| r.n).collect::<Vec<_>>(), vec![1, 3, 5, 7, 9]);
    assert!(reports.iter().all(|r| r.mubar != 0));
    assert_eq!(serde_json::to_string_pretty(&reports).unwrap().trim_end(), text.trim_end());
}

#[test]
fn family_usage_errors() {
    assert_eq!(brieskorn(&["family", "nosuch", "1", "2"]).status.code(), Some(2));
    assert_eq!(brieskorn(&["family", "thm1-even2", "5", "1"]).status.code(), Some(2));
    assert_eq!(brieskorn(&["family", "thm1-even2", "x", "1"]).status.code(), Some(2));
    assert_eq!(brieskorn(&["bogus"]).status.code(), Some(2));
}

#[test]
fn family_with_replay() {
    let o = brieskorn(&["family", "thm2-3c", "1", "4", "--replay"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("script=ok").count(), 4);
}

#[test]
fn caption_discrepancy_is_noted() {
    let o = brieskorn(&["family", "thm2-2c", "1", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Σ(2,7,44)"));
}

#[test]
fn generated_script_replays() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.json");
    let p = path.to_str().unwrap();
    let o = brieskorn(&["gen-script", "thm1-even2", "3", "-o", p]);
    assert_eq!(o.status.code(), Some(0));
    let o = brieskorn(&["replay", p]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));

    let o = brieskorn(&["replay", p, "--trace"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(!lines.is_empty());
    for (i, l) in lines.iter().enumerate() {
        assert_eq!(l["step"], i);
        assert_eq!(l["legal"], true);
        assert_eq!(l["det"].as_i64().unwrap().abs(), 1);
        assert!(l["op"].is_string());
    }
}

#[test]
fn perturbed_expectation_fails_replay() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.json");
    let p = path.to_str().unwrap();
    assert_eq!(brieskorn(&["gen-script", "thm1-even2", "3", "-o", p]).status.code(), Some(0));
    let mut s: ScriptJson = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    s.expect.matrix[0][0] += 1;
    std::fs::write(&path, serde_json::to_string(&s).unwrap()).unwrap();
    let o = brieskorn(&["replay", p]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("final state differs"));
}

#[test]
fn illegal_step_fails_replay() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.json");
    let text = r#"{"name":"bad","initial":{"labels":["a"],"matrix":[[-2]]},
        "moves":[{"op":"blowdown","component":"a"}],"expect":{"labels":[],"matrix":[]}}"#;
    std::fs::write(&path, text).unwrap();
    let o = brieskorn(&["replay", path.to_str().unwrap(), "--trace"]);
    assert_eq!(o.status.code(), Some(1));
    let line: serde_json::Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    assert_eq!(line["legal"], false);
}

#[test]
fn truncated_script_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.json");
    let p = path.to_str().unwrap();
    assert_eq!(brieskorn(&["gen-script", "thm2-2a", "2", "-o", p]).status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::write(&path, &text[..text.len() / 2]).unwrap();
    assert_eq!(brieskorn(&["replay", p]).status.code(), Some(3));
}

#[test]
fn missing_script_file_is_a_usage_error() {
    assert_eq!(brieskorn(&["replay", "/nonexistent/script.json"]).status.code(), Some(2));
}

#[test]
fn gen_script_rejects_inadmissible_members() {
    assert_eq!(brieskorn(&["gen-script", "al-2", "2"]).status.code(), Some(2));
    let o = brieskorn(&["gen-script", "thm2-single13", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let s: ScriptJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(s.expect.matrix, vec![vec![1]]);
}
