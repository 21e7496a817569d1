use std::process::Command;

fn qschur(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qschur")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn dim_prints_the_matrix_count() {
    let (code, out) = qschur(&["dim", "--m", "1", "--n", "1", "--r", "3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("12\n"));
    let (_, out) = qschur(&["dim", "--m", "2", "--n", "0", "--r", "3"]);
    assert!(out.starts_with("20\n"));
}

#[test]
fn verify_emits_the_json_schema() {
    let (code, out) = qschur(&["verify", "--m", "1", "--n", "1", "--r", "3", "--suite", "vanishing", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    for e in v.as_array().unwrap() {
        let keys: Vec<&String> = e.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["anchor", "check", "detail", "status"]);
        assert_eq!(e["status"], "pass");
    }
}

#[test]
fn failing_checks_give_exit_one() {
    let (code, out) = qschur(&["verify", "--m", "2", "--n", "0", "--r", "6", "--suite", "brauer"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL brauer.rbar3_1.product_formula"));
}

#[test]
fn bad_input_gives_exit_two() {
    assert_eq!(qschur(&["dim", "--m", "1", "--n", "1", "--r", "2", "--l", "4"]).0, 2);
    assert_eq!(qschur(&["verify", "--m", "2", "--n", "2", "--r", "11"]).0, 2);
    assert_eq!(qschur(&["verify", "--m", "1", "--n", "1", "--r", "2", "--suite", "nope"]).0, 2);
}

#[test]
fn classify_lists_labels() {
    let (code, out) = qschur(&["classify", "--m", "2", "--n", "1", "--r", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("|P_r| = 4"));
    let (_, out) = qschur(&["classify", "--m", "1", "--n", "1", "--r", "2"]);
    assert!(out.contains("|P_r| = 2"));
}
