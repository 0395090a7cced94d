use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chainorder")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)));
    (out.status.code().unwrap(), v)
}

#[test]
fn chain_order_system_for_rho() {
    let (code, v) = json(&["polytope", "-t", "A", "-n", "2", "-l", "1,1", "-p", "010"]);
    assert_eq!(code, 0);
    let r = &v["report"];
    assert_eq!(r["num_lattice_points"], 8);
    assert_eq!(r["coordinates"], serde_json::json!(["q_1^1", "q_1^2", "q_2^1"]));
    let images = r["transfer"].as_array().unwrap();
    assert_eq!(images.len(), 8);
}

#[test]
fn zero_weight_has_one_point() {
    let (code, v) = json(&["polytope", "-t", "A", "-n", "2", "-l", "0,0", "-p", "000"]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["num_lattice_points"], 1);
    assert_eq!(v["report"]["num_vertices"], 1);
}

#[test]
fn type_c_gelfand_tsetlin_vertices() {
    let (_, v) = json(&["polytope", "-t", "C", "-n", "2", "-l", "1,1", "-p", "0000"]);
    assert_eq!(v["report"]["num_vertices"], 12);
}

#[test]
fn transfer_full_chain() {
    let (code, v) = json(&["transfer", "-n", "2", "-l", "1,1", "-p", "111", "--point", "1,1,2"]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["image"], serde_json::json!(["1/1", "0/1", "1/1"]));
    assert_eq!(v["report"]["in_order_polytope"], true);
}

#[test]
fn verify_main_theorem_all_partitions() {
    let (code, v) = json(&["verify", "main-thm", "-n", "2", "--all-partitions", "-l", "1,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["checks"], 8);
    assert_eq!(v["report"]["passed"], 8);
}

#[test]
fn verify_lemma_for_rank_three() {
    let (code, v) = json(&["verify", "lemma63", "-n", "3", "--all-partitions"]);
    assert_eq!(code, 0);
    let results = v["report"]["results"].as_array().unwrap();
    assert_eq!(results.len(), 64);
    assert!(results.iter().all(|r| r["checks"] == 14));
}

#[test]
fn verify_basis_sl2() {
    let (code, v) = json(&["verify", "basis", "-n", "1", "-l", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["results"][0]["rank"], 3);
}

#[test]
fn omega_type_c_is_symplectic() {
    let (code, v) = json(&["omega", "-t", "C", "-n", "2", "-p", "1010"]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["symplectic"], true);
    assert_eq!(v["report"]["det_is_one"], true);
}

#[test]
fn valuation_of_polynomial() {
    let (code, v) = json(&["valuation", "-n", "2", "--poly", "t1*t2^2 + 3*t3", "-o", "3,1,2"]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["value"], serde_json::json!([0, 1, 2]));
}

#[test]
fn table_rows_and_determinism() {
    let (code, v) = json(&["table1", "--jobs", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["matched"], 72);
    let rows = v["report"]["rows"].as_array().unwrap();
    let row = |order: &[u64]| rows.iter().find(|r| r["order"] == serde_json::json!(order)).unwrap()["labels"].clone();
    assert_eq!(row(&[2, 3, 1, 4]), serde_json::json!(["GT", "DELTA", "NZ"]));
    assert_eq!(row(&[1, 3, 4, 2]), serde_json::json!(["CROSS", "CROSS", "CROSS"]));
    assert_eq!(run(&["table1"]).stdout, run(&["table1", "--jobs", "1"]).stdout);
}

#[test]
fn markdown_table() {
    let out = run(&["table1", "--markdown"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("| t_2 > t_3 > t_1 > t_4 | GT | Δ | NZ |"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["polytope", "-n", "2", "-l", "1,1", "-p", "01"][..],
        &["polytope", "-n", "2", "-p", "010"],
        &["polytope", "-n", "2", "-l", "1,-1"],
        &["valuation", "-n", "2", "-l", "1,1", "-o", "1,1,2"],
        &["frobnicate"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}
