use std::process::{Command, Output};

use bm_core::algebra::rat;
use bm_core::report::{CheckReport, Verdict};

fn bm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bm")).args(args).output().expect("run bm")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json_lines(o: &Output) -> Vec<serde_json::Value> {
    String::from_utf8(o.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn row_briggs_exits_zero() {
    let o = bm(&["verify", "--property", "briggs", "--family", "row", "--m-max", "50"]);
    assert_eq!(code(&o), 0);
    let lines = json_lines(&o);
    assert_eq!(lines.len(), 49);
    assert!(lines.iter().all(|l| l["verdict"] == "holds-strictly"));
}

#[test]
fn transposed_reversal_at_zero_is_expected() {
    let o = bm(&["verify", "--property", "briggs", "--family", "transposed", "--i", "0", "--m-max", "50"]);
    assert_eq!(code(&o), 0);
    let lines = json_lines(&o);
    assert_eq!(lines[0]["verdict"], "violated");
    assert!(lines[0]["note"].as_str().unwrap().starts_with("expected violated"));
}

#[test]
fn unexpected_violation_exits_one() {
    let table = std::env::temp_dir().join(format!("bm-empty-expected-{}.json", std::process::id()));
    std::fs::write(&table, "[]").unwrap();
    let o = bm(&[
        "verify", "--property", "briggs", "--family", "transposed", "--i", "0", "--m-max", "20",
        "--expected", table.to_str().unwrap(),
    ]);
    std::fs::remove_file(&table).ok();
    assert_eq!(code(&o), 1);
}

#[test]
fn inconclusive_exits_two() {
    let o = bm(&["criteria", "--which", "thm41", "--i", "1", "--n-max", "30", "--mode", "two-log-convex"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn certificate_by_name() {
    let o = bm(&["certs", "--name", "B0-decomposition"]);
    assert_eq!(code(&o), 0);
    let r: CheckReport = serde_json::from_slice(o.stdout.trim_ascii_end()).unwrap();
    assert_eq!(r.verdict, Verdict::HoldsStrictly);
}

#[test]
fn usage_errors_exit_three() {
    assert_eq!(code(&bm(&["verify", "--property", "nope"])), 3);
    assert_eq!(code(&bm(&["frobnicate"])), 3);
    assert_eq!(code(&bm(&["certs", "--name", "no-such-certificate"])), 3);
    assert_eq!(code(&bm(&["verify", "--property", "briggs", "--family", "transposed", "--m-max", "20"])), 3);
    assert_eq!(code(&bm(&["--help"])), 0);
}

#[test]
fn csv_rows_match_json_lines() {
    let args = ["bounds", "--which", "sandwich", "--m-max", "25"];
    let json = json_lines(&bm(&args));
    let csv_out = bm(&[&args[..], &["--format", "csv"]].concat());
    let mut rd = csv::Reader::from_reader(csv_out.stdout.as_slice());
    assert_eq!(rd.records().count(), json.len());
    assert_eq!(json.len(), (2..=25).map(|m| m - 1).sum::<usize>());
}

#[test]
fn witness_rationals_parse_back() {
    let o = bm(&["verify", "--property", "briggs", "--family", "transposed", "--i", "0", "--m-max", "12"]);
    let r: CheckReport = serde_json::from_slice(o.stdout.trim_ascii_end()).unwrap();
    let raw: serde_json::Value = serde_json::from_slice(o.stdout.trim_ascii_end()).unwrap();
    assert!(!r.witnesses.is_empty());
    for (w, v) in r.witnesses.iter().zip(raw["witnesses"].as_array().unwrap()) {
        assert_eq!(rat::parse(v["lhs"].as_str().unwrap()).unwrap(), w.lhs);
        assert_eq!(rat::parse(v["rhs"].as_str().unwrap()).unwrap(), w.rhs);
    }
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let args = ["criteria", "--which", "sunzhao", "--i-max", "3", "--n-max", "20"];
    let a = Command::new(env!("CARGO_BIN_EXE_bm")).args(args).env("BM_THREADS", "1").output().unwrap();
    let b = Command::new(env!("CARGO_BIN_EXE_bm")).args(args).env("BM_THREADS", "4").output().unwrap();
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn compute_matches_recurrences() {
    let closed = bm(&["compute", "--m-max", "12"]);
    let rec = json_lines(&bm(&["compute", "--m-max", "12", "--method", "rec-m"]));
    let closed = json_lines(&closed);
    assert_eq!(closed.len(), 91);
    for (a, b) in closed.iter().zip(&rec) {
        assert_eq!(a["value"], b["value"]);
    }
    let one = json_lines(&bm(&["compute", "--i", "1", "--m", "3"]));
    assert_eq!(one[0]["value"], "43/4");
}

#[test]
fn elem_sym_oracle_reports_without_counterexample() {
    let o = bm(&["verify", "--property", "elem-sym", "--trials", "200"]);
    assert_eq!(code(&o), 0);
    let lines = json_lines(&o);
    assert_eq!(lines.len(), 2);
    assert!(lines.iter().all(|l| l["verdict"] == "holds-strictly"));
}
