use std::process::{Command, Output};

use serde_json::Value;

fn qsign(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsign"))
        .args(args)
        .env_remove("QSIGN_PRECISION")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = qsign(&all);
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn predict_reports_pattern_and_onset() {
    let out = qsign(&["predict", "--p", "7", "--i", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("pattern 7/+0-+-00"), "{text}");
    assert!(text.contains("N = 3 (holds for n >= 4)"), "{text}");

    let v = json(&["predict", "--p", "13", "--i", "2"]);
    assert_eq!(v["result"]["pattern"]["onset"], 31);
    assert_eq!(v["spec"], "2^1 13^-1");
}

#[test]
fn census_csv_matches_the_table() {
    let out = qsign(&[
        "census", "--spec", "2^5 7^-1", "--m", "7", "--K", "7142", "--format", "csv",
    ]);
    assert!(out.status.success());
    let expected = "residue,negative,zero,positive\n\
                    0,0,0,7142\n\
                    1,7141,1,0\n\
                    2,3319,504,3319\n\
                    3,7141,1,0\n\
                    4,3285,507,3350\n\
                    5,3279,509,3354\n\
                    6,0,0,7142\n";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn verify_exit_status_follows_the_verdict() {
    let out = qsign(&[
        "verify", "--spec", "2^1 5^-1", "--p", "5", "--i", "2", "--T", "5000",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("PASS (0 violations)"));

    let out = qsign(&[
        "verify",
        "--spec",
        "2^1 5^-1",
        "--pattern",
        "-0+0+",
        "--T",
        "100",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("n=0 expected - got +"));
}

#[test]
fn json_reports_carry_metadata() {
    let v = json(&[
        "verify",
        "--spec",
        "1^4 2^2 4^-2",
        "--pattern",
        "+-0+--0+",
        "--onset",
        "0",
        "--T",
        "800",
    ]);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "verify");
    assert_eq!(v["spec"], "1^4 2^2 4^-2");
    assert_eq!(v["horizon"], 800);
    assert_eq!(v["params"]["onset"], 0);
    assert_eq!(v["params"]["T"], 800);
    assert_eq!(v["result"]["verdict"], "pass");
}

#[test]
fn expand_is_exact_and_honours_the_env_default() {
    let v = json(&["expand", "--spec", "1^-1", "--T", "60"]);
    assert_eq!(v["result"]["coefficients"][60], "966467");

    let out = Command::new(env!("CARGO_BIN_EXE_qsign"))
        .args(["expand", "--spec", "1^1", "--format", "csv"])
        .env("QSIGN_PRECISION", "7")
        .output()
        .unwrap();
    assert_eq!(
        stdout(&out),
        "n,coefficient\n0,1\n1,-1\n2,-1\n3,0\n4,0\n5,1\n6,0\n7,1\n"
    );
}

#[test]
fn dissect_prints_components_and_verdict() {
    let out = qsign(&["dissect", "--m", "5", "--T", "300", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let offsets: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(2).unwrap())
        .collect();
    assert_eq!(offsets, ["0", "2", "1", "12", "5"]);

    let v = json(&["dissect", "--M", "7", "--j", "3", "--m", "8", "--T", "200"]);
    assert_eq!(v["result"]["reassembles"], true);
    assert_eq!(v["result"]["components"].as_array().unwrap().len(), 8);
}

#[test]
fn detect_flags_sporadic_zeros() {
    let out = qsign(&[
        "detect",
        "--spec",
        "2.5^1 3.5^1 1.5^-1 4.5^-1",
        "--m",
        "5",
        "--T",
        "3000",
    ]);
    let text = stdout(&out);
    assert!(text.starts_with("detected 5/++--- for n > -1"), "{text}");
    assert!(text.contains("residue 4: zero at n = 4, 9"));
}

#[test]
fn batch_commands_pass_in_declaration_order() {
    let out = qsign(&["corpus", "--T", "1500"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let names: Vec<&str> = text.lines().filter_map(|l| l.split(' ').nth(1)).collect();
    assert_eq!(names[0], "period8");
    assert!(text.ends_with("7/7 passed\n"));

    let out = qsign(&["catalog", "--T", "1000", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1 + 18);
    assert!(text.lines().skip(1).all(|l| l.contains(",PASS,0")));
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("catalog.json");
    let path_str = path.to_str().unwrap();
    let a = qsign(&[
        "catalog", "--T", "600", "--format", "json", "--output", path_str,
    ]);
    assert!(a.status.success());
    assert!(a.stdout.is_empty());
    let first = std::fs::read(&path).unwrap();
    qsign(&[
        "catalog", "--T", "600", "--format", "json", "--output", path_str,
    ]);
    assert_eq!(std::fs::read(&path).unwrap(), first);
}

#[test]
fn bad_input_is_a_diagnostic_not_a_panic() {
    for args in [
        &["predict", "--p", "9", "--i", "2"][..],
        &["expand", "--spec", "1^x"],
        &["dissect", "--m", "6"],
        &["verify", "--spec", "1^1", "--pattern", "+x"],
    ] {
        let out = qsign(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert!(err.starts_with("error: "), "{args:?}: {err}");
    }
    let err = String::from_utf8(qsign(&["predict", "--p", "9", "--i", "2"]).stderr).unwrap();
    assert!(err.contains("`p`"));
    assert_eq!(
        qsign(&["census", "--spec", "1^1", "--m", "7"])
            .status
            .code(),
        Some(2)
    );
}
