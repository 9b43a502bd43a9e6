use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn hyperspectra(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperspectra"))
        .args(args)
        .output()
        .expect("spawn binary")
}

fn records(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "records"]);
    let out = hyperspectra(&all);
    let code = out.status.code().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let value = serde_json::from_str(&text)
        .unwrap_or_else(|e| panic!("{e}: {text:?} / {}", String::from_utf8_lossy(&out.stderr)));
    (value, code)
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn gen_bl1_shape() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("l1.json");
    let (rec, code) = records(&["gen", "bl1", "--k", "3", "--m", "6", "-o", p(&out)]);
    assert_eq!(code, 0);
    assert_eq!(rec["schema_version"], 1);
    let file = read_json(&out);
    assert_eq!(file["edges"].as_array().unwrap().len(), 6);
    assert_eq!(file["n"], 11);
    assert_eq!(file["k"], 3);
}

#[test]
fn gen_bp_has_named_roles() {
    let out = hyperspectra(&["gen", "bp", "--k", "3", "--m", "5"]);
    assert!(out.status.success());
    let file: Value = serde_json::from_slice(&out.stdout).unwrap();
    for role in ["v", "a", "b", "w"] {
        assert!(file["vertex_roles"].get(role).is_some(), "{role}");
    }
}

#[test]
fn gen_rejects_small_k() {
    let out = hyperspectra(&["gen", "bl2", "--k", "2", "--m", "6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("k >= 3"));
}

#[test]
fn gen_output_is_byte_stable() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    assert!(hyperspectra(&["gen", "bl2", "--k", "4", "--m", "7", "-o", p(&a)]).status.success());
    assert!(hyperspectra(&["gen", "bl2", "--k", "4", "--m", "7", "-o", p(&b)]).status.success());
    let first = std::fs::read(&a).unwrap();
    assert_eq!(first, std::fs::read(&b).unwrap());

    // parse and re-emit through the power command's seed reader
    let parsed = hyperspectra::io::read_hypergraph(&a).unwrap();
    let again = hyperspectra::io::hypergraph_to_string(&(&parsed).into());
    assert_eq!(again.as_bytes(), first.as_slice());
}

#[test]
fn spectral_radius_of_single_edge() {
    let dir = TempDir::new().unwrap();
    let f = dir.path().join("e.json");
    std::fs::write(&f, r#"{"k":3,"n":3,"edges":[[0,1,2]]}"#).unwrap();
    let (rec, code) = records(&["spectral-radius", p(&f), "--emit-vector"]);
    assert_eq!(code, 0);
    assert!((rec["rho"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    assert_eq!(rec["eigenvector"].as_array().unwrap().len(), 3);
    assert_eq!(rec["converged"], true);
}

#[test]
fn spectral_radius_reports_non_convergence() {
    let dir = TempDir::new().unwrap();
    let f = dir.path().join("l1.json");
    assert!(hyperspectra(&["gen", "bl1", "--k", "3", "--m", "6", "-o", p(&f)]).status.success());
    let (rec, code) = records(&["spectral-radius", p(&f), "--max-iters", "2"]);
    assert_eq!(code, 1);
    assert_eq!(rec["converged"], false);
}

#[test]
fn spectral_radius_rejects_disconnected() {
    let dir = TempDir::new().unwrap();
    let f = dir.path().join("d.json");
    std::fs::write(&f, r#"{"k":2,"n":4,"edges":[[0,1],[2,3]]}"#).unwrap();
    assert_eq!(hyperspectra(&["spectral-radius", p(&f)]).status.code(), Some(2));
}

#[test]
fn certify_families() {
    let (rec, code) = records(&["certify", "--family", "bl2", "--k", "3", "--m", "6"]);
    assert_eq!(code, 0);
    assert_eq!(rec["verdict"]["kind"], "NormalNotConsistent");
    assert!((rec["alpha_bound"].as_f64().unwrap() - 2.0).abs() < 1e-12);

    let (rec, code) = records(&["certify", "--family", "bl1", "--k", "3", "--m", "6"]);
    assert_eq!(code, 0);
    assert_eq!(rec["verdict"]["kind"], "ConsistentlyNormal");
}

#[test]
fn certify_user_matrix() {
    let dir = TempDir::new().unwrap();
    let f = dir.path().join("e.json");
    let mtx = dir.path().join("b.json");
    std::fs::write(&f, r#"{"k":2,"n":2,"edges":[[0,1]]}"#).unwrap();
    std::fs::write(&mtx, "[[0,0,1.0],[1,0,1.0]]").unwrap();
    let (rec, code) = records(&["certify", p(&f), "--alpha", "1", "--matrix", p(&mtx)]);
    assert_eq!(code, 0);
    assert_eq!(rec["verdict"]["kind"], "ConsistentlyNormal");

    // weights off by a factor: invalid and a failing exit code
    std::fs::write(&mtx, "[[0,0,0.5],[1,0,1.0]]").unwrap();
    let (rec, code) = records(&["certify", p(&f), "--alpha", "1", "--matrix", p(&mtx)]);
    assert_eq!(code, 1);
    assert_eq!(rec["verdict"]["kind"], "Invalid");

    assert_eq!(hyperspectra(&["certify", p(&f), "--alpha", "1"]).status.code(), Some(2));
}

#[test]
fn power_of_single_edge() {
    let dir = TempDir::new().unwrap();
    let seed = dir.path().join("e.json");
    let out = dir.path().join("p.json");
    std::fs::write(&seed, r#"{"k":2,"n":2,"edges":[[0,1]]}"#).unwrap();
    let (rec, code) = records(&[
        "power", p(&seed), "--k", "4", "--s", "1", "-o", p(&out), "--emit-map", "--verify",
    ]);
    assert_eq!(code, 0);
    let file = read_json(&out);
    assert_eq!(file["n"], 4);
    assert_eq!(file["edges"].as_array().unwrap().len(), 1);
    assert_eq!(rec["verify"]["holds"], true);
    assert_eq!(rec["map"]["vertex_blocks"].as_array().unwrap().len(), 2);
}

#[test]
fn power_rejects_bad_spec() {
    let dir = TempDir::new().unwrap();
    let seed = dir.path().join("e.json");
    std::fs::write(&seed, r#"{"k":2,"n":2,"edges":[[0,1]]}"#).unwrap();
    let out = dir.path().join("p.json");
    let o = hyperspectra(&["power", p(&seed), "--k", "4", "--s", "3", "-o", p(&out)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!out.exists());
}

#[test]
fn verify_conjecture_default_grid() {
    let (rec, code) = records(&["verify-conjecture"]);
    assert_eq!(code, 0);
    assert_eq!(rec["all_hold"], true);
    let rows = rec["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 18);
    let keys: Vec<(u64, u64)> = rows
        .iter()
        .map(|r| (r["k"].as_u64().unwrap(), r["m"].as_u64().unwrap()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort_unstable();
    assert_eq!(keys, sorted);

    let row = rows.iter().find(|r| r["k"] == 3 && r["m"] == 6).unwrap();
    let lo = row["rho_bl1"]["lower"].as_f64().unwrap();
    let hi = row["rho_bl1"]["upper"].as_f64().unwrap();
    assert!(lo <= 2.0 && 2.0 <= hi);
}

#[test]
fn verify_conjecture_is_deterministic() {
    let args = ["verify-conjecture", "--k-max", "4", "--m-max", "8", "--format", "records"];
    let a = hyperspectra(&args);
    let b = hyperspectra(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_conjecture_fails_without_convergence() {
    let out = hyperspectra(&["verify-conjecture", "--k-max", "3", "--m-max", "5", "--max-iters", "2"]);
    assert_eq!(out.status.code(), Some(1));
}
