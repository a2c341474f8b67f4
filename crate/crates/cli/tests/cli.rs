use std::process::{Command, Output};

use mayachar::fock::character_of;
use mayachar::partition::partitions;
use mayachar_cli::{
    brauer_report, format_table, parse_partition, spin_report, symmetric_report, walled_report,
    Format, TableReport,
};
use proptest::prelude::*;

fn mayachar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mayachar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn column(report: &TableReport, label: &str) -> Vec<String> {
    let j = report.columns.iter().position(|c| c == label).unwrap();
    report.values.iter().map(|r| r[j].clone()).collect()
}

#[test]
fn single_value() {
    let out = mayachar(&["char", "--lambda", "5,1", "--mu", "2,1,1,1,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "3");
}

#[test]
fn multiplicative_input() {
    let out = mayachar(&["char", "--lambda", "4^2", "--mu", "2 1^6"]);
    assert_eq!(stdout(&out).trim(), "4");
}

#[test]
fn phi_image() {
    let out = mayachar(&["phi", "--m", "2", "--k", "1", "--lambda", "4,2,2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "+(2,1,1,1,1) -(2,2,1,1)");
    let out = mayachar(&[
        "phi", "--m", "2", "--k", "1", "--lambda", "4,2,2", "--format", "json",
    ]);
    let terms: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(terms[0]["partition"], "2,1,1,1,1");
    assert_eq!(terms[1]["coefficient"], "-1");
}

#[test]
fn verify_exits_cleanly() {
    let out = mayachar(&["verify", "--theorem", "main", "--max-size", "10"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("0 counterexamples"));
    let out = mayachar(&[
        "verify",
        "--theorem",
        "walled",
        "--max-size",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["theorem"], "walled");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["char", "--lambda", "2,3", "--mu", "1"],
        vec!["char", "--lambda", "2", "--mu", "1"],
        vec!["char-table", "--group", "walled", "--n", "3"],
        vec!["char-table", "--group", "sym"],
        vec!["char", "--lambda", "2", "--mu", "2", "--kappa", "1"],
        vec!["verify", "--theorem", "nope", "--max-size", "3"],
        vec!["verify", "--theorem", "main"],
        vec!["char", "--group", "brauer", "--lambda", "1", "--mu", "2"],
    ] {
        let out = mayachar(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn thread_cap_is_validated() {
    let out = Command::new(env!("CARGO_BIN_EXE_mayachar"))
        .args(["degrees", "--n", "3"])
        .env("MAYACHAR_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_mayachar"))
        .args(["degrees", "--n", "3"])
        .env("MAYACHAR_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn small_symmetric_tables() {
    let s4 = symmetric_report(4).unwrap();
    assert_eq!(column(&s4, "1,1,1,1"), ["1", "3", "2", "3", "1"]);
    let s6 = symmetric_report(6).unwrap();
    let mut col: Vec<i64> = column(&s6, "2,1,1,1,1")
        .iter()
        .map(|x| x.parse().unwrap())
        .collect();
    col.sort();
    let mut expected = vec![1, 3, 2, 3, 1, 0, -1, -3, -2, -3, -1];
    expected.sort();
    assert_eq!(col, expected);
    let s0 = symmetric_report(0).unwrap();
    assert_eq!(s0.values, vec![vec!["1".to_string()]]);
}

#[test]
fn table_cells_match_library() {
    let report = symmetric_report(7).unwrap();
    let labels = partitions(7);
    for (i, lam) in labels.iter().enumerate() {
        for (j, mu) in labels.iter().enumerate() {
            assert_eq!(
                report.values[i][j],
                character_of(lam, mu).unwrap().to_string()
            );
        }
    }
    let out = mayachar(&[
        "char-table",
        "--group",
        "sym",
        "--n",
        "7",
        "--format",
        "json",
    ]);
    let parsed: TableReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed, report);
}

#[test]
fn csv_quotes_labels() {
    let mut buf = Vec::new();
    format_table(&symmetric_report(3).unwrap(), Format::Csv, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    assert_eq!(text.lines().next().unwrap(), r#""","3","2,1","1,1,1""#);
    assert_eq!(text.lines().nth(2).unwrap(), r#""2,1","-1","0","2""#);
}

#[test]
fn text_table_is_aligned() {
    let mut buf = Vec::new();
    format_table(&symmetric_report(3).unwrap(), Format::Text, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let widths: Vec<usize> = text.lines().map(|l| l.chars().count()).collect();
    assert!(widths.windows(2).all(|w| w[0] == w[1]), "{text}");
}

#[test]
fn other_tables() {
    let spin = spin_report(5).unwrap();
    assert_eq!(spin.rows, ["5", "4,1", "3,2"]);
    assert_eq!(spin.columns, ["5", "3,1,1", "1,1,1,1,1"]);
    let brauer = brauer_report(3).unwrap();
    assert_eq!(brauer.rows, ["3", "2,1", "1,1,1", "1"]);
    assert_eq!(column(&brauer, "1,1,1"), ["1", "2", "1", "3"]);
    let walled = walled_report(2, 1).unwrap();
    assert_eq!(walled.rows.last().unwrap(), "1;∅");
}

#[test]
fn partition_parsing() {
    assert_eq!(parse_partition("4,2,2").unwrap().parts(), &[4, 2, 2]);
    assert_eq!(
        parse_partition("4^2 3 1^3").unwrap().parts(),
        &[4, 4, 3, 1, 1, 1]
    );
    assert!(parse_partition("2,3").is_err());
    assert!(parse_partition("2,0").is_err());
    assert!(parse_partition("3^x").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn json_round_trip(n in 0u32..7, kind in 0usize..3) {
        let report = match kind {
            0 => symmetric_report(n),
            1 => spin_report(n),
            _ => brauer_report(n),
        }
        .unwrap();
        let mut buf = Vec::new();
        format_table(&report, Format::Json, &mut buf).unwrap();
        let back: TableReport = serde_json::from_slice(&buf).unwrap();
        prop_assert_eq!(back, report);
    }
}
