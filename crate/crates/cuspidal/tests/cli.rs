use std::process::{Command, Output};

use cuspidal::distribution::Report;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cuspidal"))
        .args(args)
        .env("LC_ALL", "C")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const TABLE_D5: &str = r" d |  ν | type of cusp            | -N(t)
 5 |  1 | [4]                     | 0
 5 |  1 | [2_6]                   | 0
 5 |  2 | [3,2] , [2_2]           | 0
 5 |  2 | [3] , [2_3]             | 2t
 5 |  2 | [2_2] , [2_4]           | 2t
 5 |  3 | [3] , [2_2] , [2]       | 2t
 5 |  3 | [2_2] , [2_2] , [2_2]   | 6t
 5 |  4 | [2_3] , [2] , [2] , [2] | 8t
";

#[test]
fn table_d5_text() {
    let o = run(&["table", "--d", "5", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), TABLE_D5);
    assert_eq!(
        stdout(&run(&["table", "--d", "5", "--format", "text"])),
        TABLE_D5
    );
}

#[test]
fn table_json_lines_parse() {
    let o = run(&["table", "--d", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let reports: Vec<Report> = stdout(&o)
        .lines()
        .map(|l| Report::from_json(l).unwrap())
        .collect();
    assert_eq!(reports.len(), 10);
    for (line, r) in stdout(&o).lines().zip(&reports) {
        assert_eq!(r.to_json_line(), line);
    }
}

#[test]
fn analyze_two_cusps_json() {
    let o = run(&[
        "analyze",
        "--degree",
        "6",
        "--cusp",
        "newton:(4,5)",
        "--cusp",
        "newton:(2,9)",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["N_coeffs"], serde_json::json!(["0", "-1", "-1", "0"]));
    assert_eq!(v["N"]["text"], "-t-t^2");
    assert_eq!(v["conjecture_holds"], true);
    assert_eq!(v["R_is_zero"], false);
    let report = Report::from_json(&text).unwrap();
    assert_eq!(report.to_json() + "\n", text);
}

#[test]
fn analyze_sw_is_exact() {
    let o = run(&["analyze", "--degree", "5", "--cusp", "newton:(4,5)"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["sw"]["K2s"], "-44");
    assert_eq!(v["sw"]["pg"], "10");
    assert_eq!(v["sw"]["sw_value"], "9/2");
}

#[test]
fn analyze_mixed_grammar() {
    let o = run(&[
        "analyze",
        "--degree",
        "5",
        "--cusp",
        "mult:[3]",
        "--cusp",
        "mult:[2x3]",
        "--format",
        "text",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("N(t) = -2t"), "{text}");
    let o = run(&[
        "analyze",
        "--degree",
        "5",
        "--cusp",
        "gens:[4,5]",
        "--format",
        "text",
    ]);
    assert!(stdout(&o).contains("N(t) = 0"));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("cuspidal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = run(&[
        "analyze",
        "--degree",
        "4",
        "--cusp",
        "mult:[3]",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let report = Report::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report.d, 4);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_two() {
    let o = run(&["analyze", "--degree", "0", "--cusp", "mult:[3]"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--degree"));
    let o = run(&[
        "analyze", "--degree", "5", "--cusp", "mult:[3]", "--bogus", "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--bogus"));
    assert_eq!(run(&["table", "--d", "8"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn computation_errors_exit_one() {
    let o = run(&["analyze", "--degree", "5", "--cusp", "newton:(4,6)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("[InvalidPairs]"), "{}", stderr(&o));
    let o = run(&["family", "one-pair", "--case", "c", "--param", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("[InvalidParam]"));
}

#[test]
fn search_includes_counterexamples() {
    let o = run(&[
        "search",
        "--dmax",
        "12",
        "--filters",
        "semicontinuity,distribution",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let find = |d: u64, a: u64, b: u64| {
        rows.iter()
            .find(|r| r["d"] == d && r["a"] == a && r["b"] == b)
            .unwrap()
    };
    assert_eq!(find(5, 3, 7)["N"], "-t");
    let r = find(11, 4, 31);
    assert_eq!(r["semicontinuity_ok"], true);
    assert_eq!(r["distribution_ok"], false);
    assert_eq!(r["first_failing_l"], 4);
    assert!(rows.iter().all(|r| r["orevkov_ok"].is_null()));
}

#[test]
fn family_verbs() {
    let o = run(&["family", "orevkov", "--j", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let r = Report::from_json(&stdout(&o)).unwrap();
    assert_eq!((r.d, r.r_is_zero), (55, Some(true)));

    let o = run(&[
        "family",
        "kashiwara",
        "--sign",
        "-",
        "--ell",
        "0",
        "--lambda",
        "1",
        "--member",
        "sp",
        "--verify",
        "--format",
        "text",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("routes agree: true"));

    let o = run(&[
        "family", "lz", "--p", "3", "--q", "2", "--floors", "2", "--verify",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["d"], 6);
    assert_eq!(v["identity_holds"], true);
    assert_eq!(v["L2"]["num"], serde_json::json!([30, 6]));

    for args in [
        &["family", "ams", "--floors", "3,2"][..],
        &["family", "one-pair", "--case", "e"],
        &["family", "tono1", "--a", "3", "--s", "1"],
        &["family", "tono2", "--n", "2", "--s", "half"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let r = Report::from_json(&stdout(&o)).unwrap();
        assert_eq!(r.r_is_zero, Some(true), "{args:?}");
    }
}

#[test]
fn check_small_grid_passes() {
    let o = run(&["check", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.lines().all(|l| l.starts_with("ok")));
    assert!(text.contains("table d=5: 8 rows"));
}
