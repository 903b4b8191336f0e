use std::path::Path;
use std::process::{Command, Output};

fn ecckit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ecckit")).args(args).output().unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_owned()
}

fn json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

const C5: &str = "p 5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n";

#[test]
fn classify_and_cover_c5() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c5.txt", C5);
    let v = json(&ecckit(&["classify", &g, "--json"]));
    assert_eq!(v["route"], "NoDominatingEdge");
    assert_eq!(v["alpha"], 2);
    assert!(v["version"].is_string());

    let v = json(&ecckit(&["cover", &g, "--json", "--oracle", "--no-timing"]));
    assert_eq!(v["cover_size"], 5);
    assert_eq!(v["bound_name"], "n");
    assert_eq!(v["oracle_ecc"], 5);
    assert_eq!(v["valid"], true);
    assert_eq!(v["elapsed_ms"], 0);
    for key in ["route", "n", "edge_count", "bound", "f", "warnings", "cliques"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }

    let text = ecckit(&["cover", &g]);
    assert!(String::from_utf8_lossy(&text.stdout).contains("5 cliques"));
}

#[test]
fn dimacs_input_and_explicit_methods() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "p4.col", "c path\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
    let v = json(&ecckit(&["cover", &g, "--format", "dimacs", "--method", "diam3", "--json"]));
    assert_eq!(v["cover_size"], 3);
    assert_eq!(v["bound_name"], "ceil((n+1)/2)");

    let out = ecckit(&["cover", &g, "--format", "dimacs", "--method", "theorem1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exact_with_caps() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c5.txt", C5);
    let v = json(&ecckit(&["exact", &g, "--json"]));
    assert_eq!(v["ecc"], 5);
    let out = ecckit(&["exact", &g, "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("capacity"));
    let out = ecckit(&["exact", &g, "--budget", "0"]);
    assert_eq!(out.status.code(), Some(2));

    let env = Command::new(env!("CARGO_BIN_EXE_ecckit"))
        .args(["exact", &g])
        .env("ECCKIT_ORACLE_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(2));
}

#[test]
fn gen_is_seeded_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    for p in [&a, &b] {
        let out = ecckit(&["gen", "--kind", "theorem1", "--n", "9", "--density", "0.4", "--seed", "3", "-o", p.to_str().unwrap()]);
        assert!(out.status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let v = json(&ecckit(&["cover", a.to_str().unwrap(), "--json", "--no-timing"]));
    assert_eq!(v["n"], 9);
    assert!(v["cover_size"].as_u64().unwrap() <= 9);

    let stdout = ecckit(&["gen", "--kind", "alpha2", "--n", "6", "--seed", "1"]);
    assert!(String::from_utf8_lossy(&stdout.stdout).starts_with("p 6 "));
    let bad = ecckit(&["gen", "--kind", "theorem1", "--n", "4"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_summary_and_errors() {
    let v = json(&ecckit(&["verify", "--enumerate", "4", "--checks", "bounds,oracle", "--jobs", "1", "--json"]));
    assert_eq!(v["per_n"]["4"], 40);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    let one = ecckit(&["verify", "--enumerate", "5", "--checks", "bounds", "--jobs", "1", "--json"]);
    let four = ecckit(&["verify", "--enumerate", "5", "--checks", "bounds", "--jobs", "4", "--json"]);
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(ecckit(&["verify", "--enumerate", "9"]).status.code(), Some(2));
    assert_eq!(ecckit(&["verify", "--enumerate", "3", "--checks", "nope"]).status.code(), Some(2));
}

#[test]
fn bad_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "loop.txt", "0 0\n");
    let out = ecckit(&["classify", &g]);
    assert_eq!(out.status.code(), Some(2));
    let g = write(dir.path(), "junk.txt", "0 1\n1 x\n");
    let out = ecckit(&["classify", &g]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(ecckit(&["classify", "/nonexistent/graph"]).status.code(), Some(2));
    let c7 = write(dir.path(), "c7.txt", "0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n0 6\n");
    assert_eq!(ecckit(&["cover", &c7]).status.code(), Some(2));
}
