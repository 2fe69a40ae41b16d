use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn rbhopf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rbhopf"))
        .args(args)
        .env_remove("RBHOPF_ENUM_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn schema() -> jsonschema::Validator {
    let text = stdout(&rbhopf(&["schema"]));
    let schema: Value = serde_json::from_str(&text).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

fn assert_valid(v: &Value) {
    let validator = schema();
    let errors: Vec<String> = validator.iter_errors(v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}");
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn groups_table() {
    let a = rbhopf(&["groups"]);
    assert!(a.status.success());
    let text = stdout(&a);
    let row = |name: &str| {
        text.lines()
            .find(|l| l.split_whitespace().next() == Some(name))
            .map(str::to_string)
    };
    let s3 = row("S3").expect("S3 listed");
    assert_eq!(s3.split_whitespace().collect::<Vec<_>>(), ["S3", "6", "no"]);
    let q8 = row("Q8").expect("Q8 listed");
    assert_eq!(q8.split_whitespace().nth(1), Some("8"));
    assert_eq!(text, stdout(&rbhopf(&["groups"])));
}

fn enumerated(args: &[&str]) -> (usize, Vec<String>) {
    let o = rbhopf(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let mut lines = text.lines();
    let head = lines.next().unwrap();
    let count = head.split_whitespace().nth(1).unwrap().parse().unwrap();
    let tuples = lines
        .map(|l| l.split_whitespace().nth(1).unwrap().to_string())
        .collect();
    (count, tuples)
}

#[test]
fn enumerate_small_groups() {
    assert_eq!(enumerated(&["enumerate", "--group", "Z1"]).0, 1);
    let (n, tuples) = enumerated(&["enumerate", "--group", "Z2"]);
    assert_eq!(n, 2);
    assert_eq!(tuples, ["0,0", "0,1"]);
}

#[test]
fn enumerate_s3_matches_brute_force_fixture() {
    let fixture =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/s3_operators.txt")).unwrap();
    let mut lines = fixture.lines().filter(|l| !l.starts_with('#'));
    let count: usize = lines.next().unwrap().strip_prefix("count ").unwrap().parse().unwrap();
    let mut expected: Vec<String> = lines.map(str::to_string).collect();
    expected.sort();
    let (n, mut tuples) = enumerated(&["enumerate", "--group", "S3"]);
    tuples.sort();
    assert_eq!(n, count);
    assert_eq!(tuples, expected);
}

#[test]
fn enumerate_from_table_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("klein.txt");
    std::fs::write(&path, "order 4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n").unwrap();
    let (n, _) = enumerated(&["enumerate", "--table", path.to_str().unwrap()]);
    let (m, _) = enumerated(&["enumerate", "--group", "Z2xZ2"]);
    assert_eq!(n, m);
}

#[test]
fn enumerate_respects_cap() {
    let o = rbhopf(&["enumerate", "--group", "S4"]);
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_rbhopf"))
        .args(["enumerate", "--group", "Z6"])
        .env("RBHOPF_ENUM_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap"));
}

#[test]
fn verify_z4_identity_all_pass() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = rbhopf(&[
        "verify",
        "--group",
        "Z4",
        "--op",
        "0,1,2,3",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v = read_json(&path);
    assert_valid(&v);
    assert_eq!(v["passed"], true);
    assert_eq!(v["operator"], serde_json::json!([0, 1, 2, 3]));
    let stages: Vec<&str> = v["stages"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["stage"].as_str().unwrap())
        .collect();
    for s in ["operator", "matched-pair", "projection", "lemmas", "phi", "pi"] {
        assert!(stages.contains(&s), "{s}");
    }
}

#[test]
fn verify_z6_triple_only_displayed_right_action_fails() {
    let o = rbhopf(&["verify", "--group", "Z6", "--op", "0,3,0,3,0,3", "--json", "-"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_valid(&v);
    let failed: Vec<&str> = v["stages"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|s| s["passed"] == false)
        .map(|s| s["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["right action displayed form"]);
}

#[test]
fn verify_by_index_and_stage_subset() {
    let o = rbhopf(&[
        "verify", "--group", "S3", "--op", "0", "--stages", "operator", "--json", "-",
    ]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["stages"].as_array().unwrap().iter().all(|s| s["stage"] == "operator"));
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_rejects_bad_input() {
    let o = rbhopf(&["verify", "--group", "Z4", "--op", "1,2,3,0"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(
        err.contains("not a Rota-Baxter operator") && err.contains("(0, 0)"),
        "{err}"
    );

    for args in [
        &["verify", "--group", "Z7x", "--op", "0"][..],
        &["verify", "--group", "Nope", "--op", "0"],
        &["verify", "--group", "Z2", "--op", "9"],
        &["verify", "--group", "Z2", "--op", "0,1", "--stages", "bogus"],
    ] {
        assert_eq!(rbhopf(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn sweep_small_orders() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = dir.path().join("s1.json");
    let o = rbhopf(&["sweep", "--max-order", "1", "--json", p1.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v = read_json(&p1);
    assert_valid(&v);
    assert_eq!(v["operators"], 1);
    assert_eq!(v["failures"], 0);

    let p2 = dir.path().join("s2.json");
    let o = rbhopf(&[
        "sweep",
        "--max-order",
        "2",
        "--jobs",
        "2",
        "--json",
        p2.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = read_json(&p2);
    assert_eq!(v["operators"], 3);
    assert_eq!(v["failures"], 0);

    assert_eq!(rbhopf(&["sweep", "--max-order", "13"]).status.code(), Some(2));
}

#[test]
fn hopf_json_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q8.json");
    let o = rbhopf(&["export-hopf", "--group", "Q8"]);
    std::fs::write(&path, &o.stdout).unwrap();
    assert_eq!(rbhopf(&["check-hopf", path.to_str().unwrap()]).status.code(), Some(0));

    let mut v: Value = serde_json::from_slice(&o.stdout).unwrap();
    v["antipode"] = serde_json::json!((0..8).map(|i| serde_json::json!([i, i, "1"])).collect::<Vec<_>>());
    std::fs::write(&path, v.to_string()).unwrap();
    let bad = rbhopf(&["check-hopf", path.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("FAIL"));

    std::fs::write(&path, "{\"dim\": 1}").unwrap();
    assert_eq!(rbhopf(&["check-hopf", path.to_str().unwrap()]).status.code(), Some(2));
}
