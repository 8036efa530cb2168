use std::process::{Command, Output};

use serde_json::Value;

fn podles(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_podles")).args(args).output().expect("run podles")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn eval_functionals() {
    let out = podles(&["eval", "h", "A^3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["value"], "1/(q^6+q^4+q^2+1)");
    assert_eq!(json(&podles(&["eval", "h_A", "1"]))["value"], "0");
    assert_eq!(json(&podles(&["eval", "tau", "eta"]))["value"], "-1");
    assert_eq!(json(&podles(&["eval", "tau", "(1, 1, 1)"]))["value"], "0");
}

#[test]
fn hh_two_at_q_minus_two() {
    let out = podles(&["hh", "--c", "1", "--d", "0", "--lambda", "q^-2", "--n", "2", "--N", "8", "--M", "4", "--engine", "resolution"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let r = &v["reports"]["resolution"];
    assert_eq!(r["dims"]["total"], 1);
    assert_eq!(r["stable"], true);
    assert_eq!(v["fixtures_version"], "uq-su2-pairing/1");
    assert_eq!(v["config"]["case"]["lambda"], "q^-2");

    let out = podles(&["hh", "--lambda", "q^2", "--n", "2"]);
    assert_eq!(json(&out)["reports"]["resolution"]["dims"]["total"], 0);
}

#[test]
fn both_engines_in_degree_zero() {
    let out = podles(&["hh", "--c", "2", "--d", "1", "--lambda", "q^-4", "--n", "0", "--N", "4", "--M", "2", "--engine", "both", "--weights", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["engines_agree"], true);
    assert_eq!(v["reports"]["bar"]["dims"]["total"], 2);
    assert_eq!(v["reports"]["resolution"]["dims"]["total"], 2);
}

#[test]
fn reports_are_byte_identical() {
    let args = ["hc", "--c", "1", "--d", "1", "--lambda", "q^-2", "--N", "4", "--M", "2"];
    let (a, b) = (podles(&args), podles(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["reports"]["resolution"]["hc"], serde_json::json!([2, 0, 2, 0, 2, 0]));
}

#[test]
fn config_errors_exit_with_two() {
    assert_eq!(podles(&["hh", "--c", "1", "--d", "-1", "--n", "0"]).status.code(), Some(2));
    assert_eq!(podles(&["hh", "--c", "2", "--d", "1", "--sign", "-1", "--n", "0"]).status.code(), Some(2));
    assert_eq!(podles(&["hh", "--lambda", "q^", "--n", "0"]).status.code(), Some(2));
    assert_eq!(podles(&["hh", "--n", "4"]).status.code(), Some(2));
    assert_eq!(podles(&["verify", "--only", "nothing"]).status.code(), Some(2));
    assert_eq!(podles(&["eval", "tau", "A"]).status.code(), Some(2));
}

#[test]
fn verify_subset() {
    let out = podles(&["verify", "--suite", "smoke", "--only", "relations,tau"]);
    let v = json(&out);
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 2);
    assert_eq!(results[0]["key"], "relations");
    assert_eq!(results[0]["passed"], true);
    // b(η) carries q^4 − q^-2 once, so the tau check reports one failure
    assert_eq!(results[1]["failures"].as_array().unwrap().len(), 1);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn export_and_out_file() {
    let dir = std::env::temp_dir().join(format!("podles-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("d2.json");
    let out = podles(&["export-matrix", "--c", "2", "--d", "1", "--lambda", "q^3", "--level", "2", "--weight", "0", "--N", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let (rows, cols) = (v["rows"].as_array().unwrap().len(), v["cols"].as_array().unwrap().len());
    for t in v["triplets"].as_array().unwrap() {
        assert!((t[0].as_u64().unwrap() as usize) < rows);
        assert!((t[1].as_u64().unwrap() as usize) < cols);
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn beta_search_reports() {
    let v = json(&podles(&["beta-search", "--N", "3"]));
    assert_eq!(v["report"]["N"], 3);
    assert_eq!(v["report"]["found"]["beta"], "-q^2/(q^4-1)");
}
