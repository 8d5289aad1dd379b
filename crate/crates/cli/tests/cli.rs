use std::process::{Command, Output};

use serde_json::{json, Value};

fn rsbf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rsbf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr_line(out: &Output) -> String {
    let s = String::from_utf8(out.stderr.clone()).unwrap();
    assert_eq!(s.lines().count(), 1, "stderr should be one line: {s:?}");
    s.trim_end().to_string()
}

#[test]
fn verify_n4_passes() {
    let out = rsbf(&["verify", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["square_identity"]["holds"], true);
    assert_eq!(v["trace"]["direct"], 8);
    assert_eq!(v["trace"]["via_sigma_sums"], 8);
    assert_eq!(v["eigen"]["positive"], 4);
    assert_eq!(v["eigen"]["negative"], 2);
    assert_eq!(v["oracle"]["agree"], true);
}

#[test]
fn verify_selected_checks_only() {
    let out = rsbf(&["verify", "--n", "5", "--trace", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "check,passed\ntrace,true\n"
    );
}

#[test]
fn verify_small_n_skips_eigen_by_default() {
    let out = rsbf(&["verify", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_json(&out).get("eigen").is_none());
    let explicit = rsbf(&["verify", "--n", "2", "--eigen"]);
    assert_eq!(explicit.status.code(), Some(2));
}

#[test]
fn eigen_n5() {
    let out = rsbf(&["eigen", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_json(&out),
        json!({"n": 5, "g": 8, "trace": 0, "positive": 4, "negative": 4})
    );
}

#[test]
fn eigen_beyond_enumeration_budget() {
    // closed forms only; no enumeration needed
    let out = rsbf(&["eigen", "--n", "30", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("n,g,trace,positive,negative\n30,"));
}

#[test]
fn spectrum_csv_default() {
    let out = rsbf(&["spectrum", "--n", "4", "--function", "000110"]);
    assert_eq!(out.status.code(), Some(0));
    let values: Vec<i64> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(values, [4, 4, 4, -4, -4, 4]);
}

#[test]
fn spectrum_from_file_and_truth_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.txt");
    // x1x3 + x2x4 as a 16-entry truth table
    let tt: String = (0u32..16)
        .map(|x| {
            let b = |i: u32| (x >> (4 - i)) & 1;
            if (b(1) & b(3)) ^ (b(2) & b(4)) == 1 {
                '1'
            } else {
                '0'
            }
        })
        .collect();
    std::fs::write(&path, format!("{tt}\n")).unwrap();
    let arg = format!("@{}", path.display());
    let from_file = rsbf(&[
        "spectrum",
        "--n",
        "4",
        "--function",
        &arg,
        "--format",
        "json",
    ]);
    assert_eq!(from_file.status.code(), Some(0));
    let v = stdout_json(&from_file);
    assert_eq!(v[3], json!({"representative": "0101", "walsh_value": -4}));

    let from_orbits = rsbf(&[
        "spectrum",
        "--n",
        "4",
        "--function",
        "000110",
        "--format",
        "json",
    ]);
    assert_eq!(v, stdout_json(&from_orbits));
}

#[test]
fn spectrum_rejects_non_invariant_table() {
    let out = rsbf(&["spectrum", "--n", "3", "--function", "01000000"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_line(&out).starts_with("error: input: truth table is not rotation invariant"));
    let bad_len = rsbf(&["spectrum", "--n", "4", "--function", "0101"]);
    assert_eq!(bad_len.status.code(), Some(2));
}

#[test]
fn orbits_json() {
    let out = rsbf(&["orbits", "--n", "4"]);
    let v = stdout_json(&out);
    assert_eq!(v["g"], 6);
    let reps: Vec<&str> = v["orbits"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| o["representative"].as_str().unwrap())
        .collect();
    assert_eq!(reps, ["0000", "0001", "0011", "0101", "0111", "1111"]);
    assert!(v["orbits"][0].get("elements").is_none());
    let with = stdout_json(&rsbf(&["orbits", "--n", "4", "--elements"]));
    assert_eq!(with["orbits"][3]["elements"], json!(["0101", "1010"]));
}

#[test]
fn matrix_csv_and_json() {
    let out = rsbf(&["matrix", "--n", "4", "--format", "csv"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "1,1,1,1,1,1\n4,2,0,0,-2,-4\n4,0,0,-4,0,4\n2,0,-2,2,0,2\n4,-2,0,0,2,-4\n1,-1,1,1,-1,1\n"
    );
    let v = stdout_json(&rsbf(&["matrix", "--n", "3"]));
    assert_eq!(v["n"], 3);
    assert_eq!(v["representatives"], json!(["000", "001", "011", "111"]));
    assert_eq!(v["matrix"].as_array().unwrap().len(), 4);
}

#[test]
fn bent_search_matches_golden_and_is_thread_independent() {
    let golden: Value =
        serde_json::from_str(include_str!("../../core/tests/golden/bent_n4.json")).unwrap();
    let one = rsbf(&["bent-search", "--n", "4", "--exhaustive", "--threads", "1"]);
    let many = rsbf(&["bent-search", "--n", "4", "--exhaustive", "--threads", "4"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(stdout_json(&one), golden);

    let six_a = rsbf(&["bent-search", "--n", "6", "--exhaustive", "--threads", "1"]);
    let six_b = rsbf(&["bent-search", "--n", "6", "--exhaustive", "--threads", "3"]);
    assert_eq!(six_a.stdout, six_b.stdout);
    assert_eq!(stdout_json(&six_a)["bent_count"], 48);
}

#[test]
fn bent_search_odd_and_sampled() {
    let odd = stdout_json(&rsbf(&["bent-search", "--n", "5", "--exhaustive"]));
    assert_eq!(odd["bent_count"], 0);
    assert_eq!(odd["reason"], "no bent functions for odd n");

    let args = ["bent-search", "--n", "6", "--sample", "500", "--seed", "42"];
    let a = rsbf(&args);
    let b = rsbf(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = stdout_json(&a);
    assert_eq!(v["mode"], "sampled");
    assert_eq!(v["seed"], 42);
    assert_eq!(v["functions_tested"], 500);
}

#[test]
fn budget_errors_exit_3() {
    let out = rsbf(&["bent-search", "--n", "8", "--exhaustive"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr_line(&out).starts_with("error: budget:"));
    let enumerate = rsbf(&["orbits", "--n", "25"]);
    assert_eq!(enumerate.status.code(), Some(3));
    let oracle = rsbf(&["oracle", "--n", "17"]);
    assert_eq!(oracle.status.code(), Some(3));
}

#[test]
fn max_n_override_raises_caps() {
    let blocked = rsbf(&["verify", "--n", "15", "--square"]);
    assert_eq!(blocked.status.code(), Some(3));
    let allowed = rsbf(&["verify", "--n", "15", "--trace", "--max-n-override", "15"]);
    assert_eq!(allowed.status.code(), Some(0));
    assert_eq!(stdout_json(&allowed)["trace"]["direct"], 0);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["orbits"][..],
        &["orbits", "--n", "4", "--bogus"],
        &["frobnicate"],
        &["bent-search", "--n", "4"],
        &["matrix", "--n", "4", "--format", "xml"],
        &["eigen", "--n", "0"],
    ] {
        let out = rsbf(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(stderr_line(&out).starts_with("error: "), "{args:?}");
    }
}

#[test]
fn oracle_command() {
    let v = stdout_json(&rsbf(&["oracle", "--n", "4"]));
    assert_eq!(v["g"], 6);
    assert_eq!(v["trace"], 8);
    let sums: Vec<i64> = v["sigma_sums"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["value"].as_i64().unwrap())
        .collect();
    assert_eq!(sums, [0, 8, 16, 8]);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("eigen.json");
    let out = rsbf(&["eigen", "--n", "6", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["positive"], 8);
    assert_eq!(v["negative"], 6);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["verify", "--n", "6", "--format", "pretty"];
    assert_eq!(rsbf(&args).stdout, rsbf(&args).stdout);
}
