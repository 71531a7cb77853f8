use assert_cmd::Command;
use serde_json::{json, Value};

fn hecke(args: &[&str]) -> (i32, Value, String) {
    let out = Command::cargo_bin("hecke").unwrap().args(args).output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let value = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), value, String::from_utf8(out.stderr).unwrap())
}

#[test]
fn hooks_of_three_two() {
    let (code, v, _) = hecke(&["compute", "hooks", "--shape", "3,2"]);
    assert_eq!(code, 0);
    assert_eq!(v, json!({"hooks": [4, 3, 1, 2, 1], "product": 24, "dim": 5}));
}

#[test]
fn h_of_single_boxes() {
    let (code, v, _) = hecke(&["compute", "h", "--lambda", "1", "--mu", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v, json!({"num": [-1, 1], "den": [1, 1]}));
}

#[test]
fn r_gamma_and_point_evaluation() {
    let (code, v, _) = hecke(&["compute", "r-gamma", "--lambda", "1,1", "--mu", "1", "--a", "1,2"]);
    assert_eq!(code, 0);
    assert_eq!(v, json!({"num": [-2, 1], "den": [-1, 1]}));
    let (code, v, _) = hecke(&["compute", "r-gamma", "--lambda", "1,1", "--mu", "1", "--a", "1,2", "--u", "5/2"]);
    assert_eq!(code, 0);
    assert_eq!(v, json!({"u": "5/2", "value": "1/3"}));
}

#[test]
fn r_delta_prop4_and_r_theta() {
    let (_, v, _) = hecke(&["compute", "r-delta", "--lambda", "1,1", "--mu", "1", "--b", "1"]);
    assert_eq!(v, json!({"num": [1, 1], "den": [-1, 1]}));
    let (_, v, _) = hecke(&["compute", "prop4-rhs", "--lambda", "1", "--mu", "1"]);
    assert_eq!(v, json!({"num": [-1, 0, 1], "den": [0, 0, 1]}));
    let (_, v, _) = hecke(&["compute", "r-theta", "--lambda", "2", "--m", "1"]);
    assert_eq!(v, json!({"num": [2, 1], "den": [1, 1]}));
}

#[test]
fn dset_example_excludes_zero() {
    let (code, v, _) = hecke(&["compute", "dset", "--lambda", "8,3,2,1", "--mu", "6,4,4"]);
    assert_eq!(code, 0);
    let points: Vec<i64> = v["points"].as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect();
    assert!(!points.is_empty() && !points.contains(&0));
}

#[test]
fn matrix_element_of_a_row() {
    let (code, v, _) = hecke(&["compute", "F", "--tableau", "1,2"]);
    assert_eq!(code, 0);
    assert_eq!(v["terms"], json!([{"perm": "1,2", "coeff": "1"}, {"perm": "2,1", "coeff": "1"}]));
}

#[test]
fn usage_and_precondition_exit_codes() {
    assert_eq!(hecke(&["compute", "h", "--lambda", "1,2", "--mu", "1"]).0, 2);
    assert_eq!(hecke(&["compute", "h", "--lambda", "1"]).0, 2);
    assert_eq!(hecke(&["compute", "nothing"]).0, 2);
    assert_eq!(hecke(&["verify", "theorem9"]).0, 2);
    let (code, _, err) = hecke(&["compute", "r-gamma", "--lambda", "1,1", "--mu", "1", "--a", "1,3"]);
    assert_eq!(code, 3);
    assert_eq!(err.lines().count(), 1);
    assert_eq!(hecke(&["verify", "theorem1", "--max-size", "7"]).0, 3);
    assert_eq!(hecke(&["compute", "r-theta", "--lambda", "2,1", "--m", "2"]).0, 3);
}

#[test]
fn verify_theorem1_small() {
    let (code, v, err) = hecke(&["verify", "theorem1", "--max-size", "4", "--seed", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "pass");
    assert!(err.contains("theorem1: pass"));
}

#[test]
fn verify_hookdim_and_yang_baxter() {
    let (code, v, _) = hecke(&["verify", "hookdim", "--max-size", "8"]);
    assert_eq!(code, 0);
    assert_eq!(v["total"], 67);
    let (code, v, _) = hecke(&["verify", "yangbaxter", "--samples", "20", "--seed", "7", "--jobs", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["total"], 20);
}

#[test]
fn reports_are_byte_identical() {
    let run = || Command::cargo_bin("hecke").unwrap().args(["verify", "eq4", "--max-size", "4", "--seed", "3"]).output().unwrap().stdout;
    assert_eq!(run(), run());
}

#[test]
fn symbolic_flag() {
    let (code, v, _) = hecke(&["verify", "theorem2", "--max-size", "3", "--symbolic"]);
    assert_eq!(code, 0);
    assert_eq!(v["inputs"]["symbolic"], true);
}
