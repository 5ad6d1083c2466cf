use std::process::{Command, Output};

fn lcdbch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lcdbch"))
        .args(args)
        .env_remove("LCDBCH_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn csv_rows(o: &Output) -> Vec<Vec<String>> {
    stdout(o)
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(String::from).collect())
        .collect()
}

#[test]
fn cosets_flag_exceptions() {
    let o = lcdbch(&["cosets", "--q", "3", "--m", "5", "--range", "1:54", "--format", "csv"]);
    assert!(o.status.success());
    let rows = csv_rows(&o);
    assert_eq!(rows.len(), 54);
    let flagged: Vec<&str> = rows.iter().filter(|r| r[4] == "true").map(|r| r[0].as_str()).collect();
    assert_eq!(flagged, ["28", "29", "37", "46"]);
    assert!(rows.iter().any(|r| r[0] == "28" && r[1] == "10"));
}

#[test]
fn cosets_half_size_and_empty_range() {
    let o = lcdbch(&["cosets", "--q", "2", "--m", "4", "--range", "5:5", "--format", "csv"]);
    assert_eq!(csv_rows(&o), vec![vec!["5", "5", "2", "true", "false"]]);
    let o = lcdbch(&["cosets", "--q", "2", "--m", "4", "--range", "5:4", "--format", "csv"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "s,leader,size,is_leader,exception\n");
    let o = lcdbch(&["cosets", "--q", "2", "--m", "4", "--range", "1:x"]);
    assert!(!o.status.success());
}

#[test]
fn construct_examples() {
    let o = lcdbch(&[
        "construct",
        "--family",
        "lcd-a",
        "--q",
        "5",
        "--m",
        "2",
        "--u",
        "1",
        "--distance",
        "auto",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(
        (v["n"].as_u64(), v["k"].as_u64(), v["distance"]["exact"].as_u64()),
        (Some(24), Some(9), Some(12))
    );

    let o = lcdbch(&["construct", "--family", "narrow", "--q", "2", "--m", "5", "--u", "1"]);
    assert!(stdout(&o).contains("[31, 11, ≥"), "{}", stdout(&o));
    let o = lcdbch(&[
        "construct",
        "--family",
        "narrow",
        "--q",
        "2",
        "--m",
        "5",
        "--u",
        "1",
        "--distance",
        "auto",
    ]);
    assert!(stdout(&o).contains("[31, 11, 11]"));

    let o = lcdbch(&[
        "construct",
        "--family",
        "lcd-b",
        "--q",
        "3",
        "--m",
        "3",
        "--delta",
        "4",
        "--distance",
        "auto",
        "--check",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("[26, 13, 8]"));
}

#[test]
fn designed_distance_convention() {
    let by_delta = lcdbch(&[
        "construct",
        "--family",
        "lcd-a",
        "--q",
        "4",
        "--m",
        "4",
        "--delta",
        "9",
        "--format",
        "csv",
    ]);
    let by_designed = lcdbch(&[
        "construct",
        "--family",
        "lcd-a",
        "--q",
        "4",
        "--m",
        "4",
        "--designed",
        "17",
        "--format",
        "csv",
    ]);
    assert_eq!(stdout(&by_delta), stdout(&by_designed));
    assert_eq!(csv_rows(&by_delta)[0][6], "195");
}

#[test]
fn gate_violations_name_the_hypothesis() {
    let o = lcdbch(&["construct", "--family", "lcd-b", "--q", "2", "--m", "4", "--delta", "9"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("δ <"), "{err}");
    let o = lcdbch(&["construct", "--family", "narrow", "--q", "6", "--m", "2", "--delta", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_sweeps() {
    let o = lcdbch(&["verify", "--max-qm", "243", "--binary-max-m", "8", "--format", "csv"]);
    assert!(o.status.success());
    let row = &csv_rows(&o)[0];
    assert!(row[0].parse::<u64>().unwrap() > 100);
    assert_eq!(row[4], "0");

    let o = lcdbch(&["verify", "--theorem", "thm-gene", "--q", "2", "--m", "5:13"]);
    assert!(o.status.success(), "{}", stdout(&o));

    let o = lcdbch(&["verify", "--q", "4:3", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["checked"], 0);

    let o = lcdbch(&["verify", "--theorem", "no-such-theorem"]);
    assert!(!o.status.success());
}

#[test]
fn tables() {
    let o = lcdbch(&["table", "--kind", "designed-qt", "--q", "3", "--m", "5", "--format", "csv"]);
    let nkd: Vec<(String, String, String)> = csv_rows(&o)
        .into_iter()
        .map(|r| (r[3].clone(), r[6].clone(), r[8].clone()))
        .collect();
    let want = [("242", "241", "2"), ("242", "221", "8"), ("242", "161", "26")];
    assert_eq!(nkd, want.map(|(a, b, c)| (a.into(), b.into(), c.into())));

    let o = lcdbch(&[
        "table",
        "--kind",
        "designed-qt",
        "--q",
        "2",
        "--m",
        "7",
        "--t",
        "2:4",
        "--format",
        "csv",
    ]);
    let nk: Vec<(String, String)> = csv_rows(&o).into_iter().map(|r| (r[3].clone(), r[6].clone())).collect();
    assert_eq!(
        nk,
        [("127", "113"), ("127", "85"), ("127", "29")].map(|(a, b)| (a.into(), b.into()))
    );

    let o = lcdbch(&["table", "--kind", "designed-qt", "--q", "4", "--m", "2:1", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 1);

    let o = lcdbch(&["table", "--kind", "mindis", "--m", "5:13", "--format", "csv"]);
    let rows = csv_rows(&o);
    assert!(rows.iter().filter(|r| r[1] == "3").all(|r| r[6] == "6"));
}

#[test]
fn golden_table_matches_fixture() {
    let o = lcdbch(&["table", "--kind", "golden", "--format", "csv"]);
    let fixture = include_str!("../../core/tests/data/golden.csv");
    assert_eq!(stdout(&o), fixture);
}

#[test]
fn distance_and_threads() {
    let o = Command::new(env!("CARGO_BIN_EXE_lcdbch"))
        .args([
            "distance", "--family", "lcd-a", "--q", "4", "--m", "4", "--u", "1", "--format", "json",
        ])
        .env("LCDBCH_THREADS", "1")
        .output()
        .unwrap();
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(
        (v["n"].as_u64(), v["k"].as_u64(), v["exact"].as_u64()),
        (Some(255), Some(195), Some(17))
    );
    assert_eq!(v["method"], "WITNESS");

    let o = lcdbch(&[
        "distance",
        "--family",
        "melas",
        "--q",
        "2",
        "--m",
        "5",
        "--threads",
        "2",
        "--format",
        "csv",
    ]);
    assert!(o.status.success());
    assert_eq!(csv_rows(&o)[0][5], "6");

    let o = lcdbch(&["distance", "--family", "melas", "--q", "2", "--m", "5", "--threads", "0"]);
    assert_eq!(o.status.code(), Some(2));
}
