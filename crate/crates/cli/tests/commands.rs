use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_involution-model"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = run(&full);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn dims_rows(v: &Value) -> Vec<(u64, u64, u64)> {
    v["result"]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            (
                r["j"].as_u64().unwrap(),
                r["dim_v"].as_u64().unwrap(),
                r["dim_end"].as_u64().unwrap(),
            )
        })
        .collect()
}

fn totals(v: &Value) -> (u64, u64) {
    let t = &v["result"]["totals"];
    (t["dim_v"].as_u64().unwrap(), t["dim_end"].as_u64().unwrap())
}

#[test]
fn dims_degree_four() {
    let v = json(&["dims", "--n", "4"]);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(dims_rows(&v), vec![(0, 1, 1), (1, 6, 2), (2, 3, 2)]);
    assert_eq!(totals(&v), (10, 5));
    assert_eq!(v["result"]["totals"]["degree_sum"], 10);
    assert_eq!(v["result"]["totals"]["partition_count"], 5);
}

#[test]
fn dims_degree_two() {
    let v = json(&["dims", "--n", "2"]);
    assert_eq!(dims_rows(&v), vec![(0, 1, 1), (1, 1, 1)]);
    assert_eq!(totals(&v), (2, 2));
}

#[test]
fn dims_degree_eight() {
    let v = json(&["dims", "--n", "8"]);
    assert_eq!(totals(&v).1, 22);
    assert_eq!(v["result"]["totals"]["partition_count"], 22);
}

#[test]
fn orbit_atlases() {
    let v = json(&["orbits", "--n", "4", "--j", "1", "--k", "1"]);
    assert_eq!(v["result"]["orbit_count"], 3);
    assert_eq!(v["result"]["consistent_count"], 2);
    let inconsistent: Vec<&Value> = v["result"]["orbits"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|o| o["consistent"] == false)
        .collect();
    assert_eq!(inconsistent.len(), 1);
    assert_eq!(
        inconsistent[0]["numerical_partition"],
        serde_json::json!([2, 2])
    );

    let v = json(&["orbits", "--n", "2", "--j", "0", "--k", "1"]);
    assert_eq!(v["result"]["orbit_count"], 1);
    assert_eq!(v["result"]["consistent_count"], 0);

    let v = json(&["orbits", "--n", "3", "--j", "0", "--k", "0"]);
    assert_eq!(v["result"]["orbit_count"], 1);
    assert_eq!(v["result"]["consistent_count"], 1);
}

fn multiplicity_rows(v: &Value) -> Vec<Vec<i64>> {
    v["result"]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            let row: Vec<i64> = r["multiplicities"]
                .as_array()
                .unwrap()
                .iter()
                .map(|m| m.as_i64().unwrap())
                .collect();
            assert_eq!(r["sum"].as_i64().unwrap(), row.iter().sum::<i64>());
            row
        })
        .collect()
}

#[test]
fn decompositions() {
    let rows = multiplicity_rows(&json(&["decompose", "--n", "4"]));
    assert_eq!(rows.len(), 5);
    for row in &rows {
        assert_eq!(row.len(), 3);
        assert!(row.iter().all(|&m| m == 0 || m == 1));
        assert_eq!(row.iter().sum::<i64>(), 1);
    }
    assert_eq!(
        multiplicity_rows(&json(&["decompose", "--n", "1"])),
        vec![vec![1]]
    );
    let rows = multiplicity_rows(&json(&["decompose", "--n", "6"]));
    assert_eq!(rows.len(), 11);
    assert!(rows.iter().all(|r| r.iter().sum::<i64>() == 1));
}

#[test]
fn verify_passes() {
    let v = json(&["verify", "--n", "4"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["result"]["partition_count"], 5);
    assert_eq!(v["result"]["degree_sum"], 10);
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["status"] == "pass"));

    let v = json(&["verify", "--n", "1"]);
    assert_eq!(v["passed"], true);
    assert_eq!(
        multiplicity_rows(&serde_json::json!({ "result": v["result"]["multiplicities"] })),
        vec![vec![1]]
    );

    let out = run(&["verify", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("0 failed: ok"));
}

#[test]
fn character_dump() {
    let v = json(&["character", "--n", "3", "--j", "1"]);
    assert_eq!(
        v["result"]["classes"],
        serde_json::json!(["3=3", "3=2+1", "3=1+1+1"])
    );
    assert_eq!(
        v["result"]["model"],
        serde_json::json!([{ "j": 1, "values": [0, -1, 3] }])
    );
    assert_eq!(v["result"]["irreducible"].as_array().unwrap().len(), 3);
}

#[test]
fn json_is_deterministic() {
    for args in [
        &["verify", "--n", "6", "--format", "json", "--seed", "17"][..],
        &[
            "orbits", "--n", "5", "--j", "1", "--k", "2", "--format", "json",
        ][..],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout);
    }
}

#[test]
fn seed_is_echoed() {
    let v = json(&["dims", "--n", "3", "--seed", "42"]);
    assert_eq!(v["command"]["seed"], 42);
    assert_eq!(json(&["dims", "--n", "3"])["command"]["seed"], 0);
}

#[test]
fn usage_errors_have_their_own_exit_code() {
    for args in [
        &["dims", "--n", "0"][..],
        &["dims", "--n", "21"][..],
        &["orbits", "--n", "4", "--j", "3"][..],
        &["orbits", "--n", "4", "--j", "1", "--k", "5"][..],
        &["orbits", "--n", "4"][..],
        &["dims"][..],
        &["frobnicate", "--n", "3"][..],
        &["dims", "--n", "3", "--format", "xml"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
    }
}
