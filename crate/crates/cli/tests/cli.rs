use std::process::{Command, Output};

use double_hurwitz::hurwitz::SeriesTable;

fn dhurwitz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dhurwitz"))
        .args(args)
        .env_remove("DHURWITZ_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_plain() {
    let o = dhurwitz(&["compute", "--genus", "0", "--alpha", "3", "--beta", "1,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "6");
    let o = dhurwitz(&["compute", "--genus", "1", "--alpha", "2", "--beta", "2"]);
    assert_eq!(stdout(&o).trim(), "1/2");
}

#[test]
fn compute_json_schema() {
    let o = dhurwitz(&[
        "compute", "--genus", "0", "--alpha", "3,8", "--beta", "7,4", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(sorted, ["alpha", "beta", "genus", "method", "r", "value"]);
    assert_eq!(v["genus"], 0);
    assert_eq!(v["alpha"], serde_json::json!([8, 3]));
    assert_eq!(v["beta"], serde_json::json!([7, 4]));
    assert_eq!(v["r"], 2);
    assert_eq!(v["value"], "16/1");
}

#[test]
fn methods_agree() {
    let mut values = Vec::new();
    for method in ["brute", "character", "auto"] {
        let o = dhurwitz(&[
            "compute", "--genus", "1", "--alpha", "2,2,1", "--beta", "3,2", "--method", method,
            "--format", "json",
        ]);
        assert_eq!(o.status.code(), Some(0), "{method}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        values.push(v["value"].as_str().unwrap().to_string());
    }
    assert!(values.iter().all(|v| *v == values[0]), "{values:?}");
}

#[test]
fn csv_has_header_and_row() {
    let o = dhurwitz(&[
        "compute", "--genus", "0", "--alpha", "2,1", "--beta", "2,1", "--format", "csv",
    ]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("genus,alpha,beta,r,value,method"));
    assert!(lines.next().unwrap().starts_with("0,2 1,2 1,2,4/1,"));
}

#[test]
fn precondition_exit_code() {
    let o = dhurwitz(&[
        "compute", "--genus", "0", "--alpha", "2", "--beta", "1,1,1", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["error"], "size_mismatch");
    let o = dhurwitz(&[
        "compute", "--genus", "1", "--alpha", "2,2,1", "--beta", "3,2", "--method", "closed",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = dhurwitz(&["compute", "--genus", "0", "--alpha", "x", "--beta", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn resource_exit_code() {
    let o = dhurwitz(&[
        "compute",
        "--genus",
        "2",
        "--alpha",
        "3,2",
        "--beta",
        "4,1",
        "--method",
        "brute",
        "--work-limit",
        "10",
    ]);
    assert_eq!(o.status.code(), Some(3));
    let o = dhurwitz(&[
        "ray", "--genus", "1", "--alpha", "3,1", "--beta", "2,2", "--t-max", "5",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_suites() {
    let o = dhurwitz(&["verify", "--suite", "all", "--dmax", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    let o = dhurwitz(&[
        "verify", "--suite", "join-cut", "--dmax", "4", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.as_array().unwrap().iter().all(|r| r["failed"] == 0));
    let o = dhurwitz(&["verify", "--suite", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn symbol_both_ways() {
    let o = dhurwitz(&["symbol", "--genus", "1", "--k", "0", "--b", "2"]);
    assert_eq!(stdout(&o).trim(), "1/24, 1/24");
    let o = dhurwitz(&["symbol", "--genus", "0", "--k", "0", "--b", "0,0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn ray_fit() {
    let o = dhurwitz(&[
        "ray", "--genus", "0", "--alpha", "2,1", "--beta", "2,1", "--t-max", "6", "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["degree"], 1);
    assert_eq!(v["leading"], "4/1");
    assert_eq!(v["values"][5], "24/1");
}

#[test]
fn table_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let o = dhurwitz(&[
        "table",
        "--dmax",
        "3",
        "--rmax",
        "4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let table = SeriesTable::from_json(&text, false).unwrap();
    assert_eq!((table.d_max(), table.r_max()), (3, 4));
}

#[test]
fn cache_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_dhurwitz"))
            .args([
                "compute",
                "--genus",
                "0",
                "--alpha",
                "3,2",
                "--beta",
                "4,1",
                "--method",
                "character",
            ])
            .env("DHURWITZ_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    assert_eq!(first.status.code(), Some(0));
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert!(!files.is_empty());
    let second = run();
    assert_eq!(stdout(&first), stdout(&second));
    assert!(String::from_utf8_lossy(&second.stderr).contains("loaded"));
}
