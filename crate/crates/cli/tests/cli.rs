use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn weyl_dl(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weyl-dl"))
        .arg("--cache-dir")
        .arg(cache)
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&weyl_dl(dir.path(), &["table", "A", "2"])), 0);
    assert_eq!(code(&weyl_dl(dir.path(), &["table", "E", "8"])), 2);
    assert_eq!(code(&weyl_dl(dir.path(), &["table", "D", "3"])), 2);
    assert_eq!(code(&weyl_dl(dir.path(), &["table", "C", "2"])), 2);
    assert_eq!(code(&weyl_dl(dir.path(), &["table", "Q", "2"])), 2);
    assert_eq!(code(&weyl_dl(dir.path(), &["--format", "xml", "table", "A", "2"])), 2);
    assert_eq!(code(&weyl_dl(dir.path(), &["verify", "A"])), 2);
    assert_eq!(code(&weyl_dl(dir.path(), &["verify", "all", "3"])), 2);
    let out = weyl_dl(dir.path(), &["--max-order", "100", "table", "A", "5"]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("100"));
}

#[test]
fn json_report_shape() {
    let dir = tempfile::tempdir().unwrap();
    let out = weyl_dl(dir.path(), &["--format", "json", "dl", "A", "2"]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in ["cartan", "classes", "irreducibles", "checks"] {
        assert!(v[key].is_array(), "{key} missing");
    }
    assert_eq!(v["cartan"][0]["order"], "6");
    assert_eq!(v["cartan"][0]["matrix"][0][1], "-1");
    let sizes: Vec<&str> = v["classes"].as_array().unwrap().iter().map(|c| c["size"].as_str().unwrap()).collect();
    assert_eq!(sizes, ["1", "3", "2"]);
    let irr = v["irreducibles"].as_array().unwrap();
    assert_eq!(irr[0]["label"], "(3)");
    assert_eq!(irr[0]["dl_image"], "(1,1,1)");
    assert_eq!(irr[2]["values"], serde_json::json!(["2", "0", "-1"]));
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    // no bare JSON numbers anywhere
    fn no_numbers(v: &Value) -> bool {
        match v {
            Value::Number(_) => false,
            Value::Array(a) => a.iter().all(no_numbers),
            Value::Object(o) => o.values().all(no_numbers),
            _ => true,
        }
    }
    assert!(no_numbers(&v));
}

#[test]
fn text_pairing_line() {
    let dir = tempfile::tempdir().unwrap();
    let out = weyl_dl(dir.path(), &["dl", "A", "2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("pairing: (3) ↔ (1,1,1); (2,1) fixed"), "{text}");
    assert!(text.contains("convention: trivial character labelled (3)"));
}

#[test]
fn csv_table_header() {
    let dir = tempfile::tempdir().unwrap();
    let out = weyl_dl(dir.path(), &["--format", "csv", "table", "A", "2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    // labels containing commas are quoted
    assert_eq!(text, "irreducible,e,s2,s1*s2\n(3),1,1,1\n\"(1,1,1)\",1,-1,1\n\"(2,1)\",2,0,-1\n");
}

#[test]
fn verify_single_type() {
    let dir = tempfile::tempdir().unwrap();
    let out = weyl_dl(dir.path(), &["--format", "csv", "verify", "B", "3"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("group,check,passed,detail\n"));
    assert!(text.lines().skip(1).all(|l| l.starts_with("B3,") && l.contains(",true,")));
}

#[test]
fn cache_is_reused_and_survives_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let first = weyl_dl(dir.path(), &["--format", "json", "table", "B", "3"]);
    let entry = dir.path().join("B3-c0-v1.json");
    assert!(entry.exists());
    let saved = fs::read(&entry).unwrap();

    let second = weyl_dl(dir.path(), &["--format", "json", "table", "B", "3"]);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(fs::read(&entry).unwrap(), saved);

    // a truncated file is a miss; the table is recomputed and the entry rewritten
    fs::write(&entry, &saved[..saved.len() / 2]).unwrap();
    let third = weyl_dl(dir.path(), &["--format", "json", "table", "B", "3"]);
    assert_eq!(code(&third), 0);
    assert_eq!(first.stdout, third.stdout);
    assert_eq!(fs::read(&entry).unwrap(), saved);

    // a well-formed file with a wrong value is caught by the integrity check
    let tampered = String::from_utf8(saved.clone()).unwrap().replacen("\"-1\"", "\"-2\"", 1);
    fs::write(&entry, tampered).unwrap();
    let fourth = weyl_dl(dir.path(), &["--format", "json", "table", "B", "3"]);
    assert_eq!(first.stdout, fourth.stdout);
    assert_eq!(fs::read(&entry).unwrap(), saved);
}

#[test]
fn seed_does_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let a = weyl_dl(dir.path(), &["--seed", "1", "table", "D", "4"]);
    let other = tempfile::tempdir().unwrap();
    let b = weyl_dl(other.path(), &["--seed", "99", "table", "D", "4"]);
    assert_eq!(a.stdout, b.stdout);
}
