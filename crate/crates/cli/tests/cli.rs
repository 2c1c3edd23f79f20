use std::fs;
use std::path::Path;

use assert_cmd::Command;
use nilk::laurent;
use nilk::Matrix;
use serde_json::{json, Value};
use tempfile::TempDir;

fn nilk() -> Command {
    Command::cargo_bin("nilk").unwrap()
}

fn golden(name: &str) -> String {
    fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn theorem3_matches_golden_files() {
    let dir = TempDir::new().unwrap();
    nilk().args(["theorem3", "--out"]).arg(dir.path()).assert().success();
    for name in ["theorem31_matrix.json", "N10.json"] {
        assert_eq!(fs::read_to_string(dir.path().join(name)).unwrap(), golden(name), "{name}");
    }
    let report = read_json(&dir.path().join("theorem3_report.json"));
    let disc: Vec<&str> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "discrepancy")
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert_eq!(disc, ["lift.four_factors_lr", "lift.four_factors_rl", "e2.display", "thm31.display"]);
}

#[test]
fn theorem4_matches_golden_files() {
    let dir = TempDir::new().unwrap();
    nilk().args(["theorem4", "--out"]).arg(dir.path()).assert().success();
    for name in ["theorem42_matrix.json", "yz_matrix.json"] {
        assert_eq!(fs::read_to_string(dir.path().join(name)).unwrap(), golden(name), "{name}");
    }
}

/// The golden files agree with the printed values held in the library.
#[test]
fn golden_files_agree_with_printed_values() {
    let n10 = Matrix::from_json(&serde_json::from_str(&golden("N10.json")).unwrap()).unwrap();
    assert_eq!(n10, laurent::display::n10());
    let block = Matrix::from_json(&serde_json::from_str(&golden("theorem42_matrix.json")).unwrap()).unwrap();
    assert_eq!(block, nilk::groupring::display::theorem42());
}

#[test]
fn runs_are_deterministic() {
    let (a, b) = (TempDir::new().unwrap(), TempDir::new().unwrap());
    for d in [&a, &b] {
        nilk().args(["theorem3", "--out"]).arg(d.path()).assert().success();
    }
    for name in ["theorem31_matrix.json", "N10.json", "theorem3_report.json"] {
        assert_eq!(fs::read(a.path().join(name)).unwrap(), fs::read(b.path().join(name)).unwrap());
    }
}

#[test]
fn latex_output() {
    let dir = TempDir::new().unwrap();
    nilk().args(["theorem3", "--emit", "latex", "--out"]).arg(dir.path()).assert().success();
    let tex = fs::read_to_string(dir.path().join("N10.tex")).unwrap();
    assert!(tex.contains("\\begin{pmatrix}"), "{tex}");
    assert!(!dir.path().join("N10.json").exists());
}

#[test]
fn higman_of_the_representative_is_n10() {
    let dir = TempDir::new().unwrap();
    nilk().args(["theorem3", "--out"]).arg(dir.path()).assert().success();
    let out = dir.path().join("h.json");
    nilk().arg("higman").arg(dir.path().join("theorem31_matrix.json")).arg("--out").arg(&out).assert().success();
    assert_eq!(fs::read_to_string(out).unwrap(), golden("N10.json"));
}

#[test]
fn nil_maps_on_n10() {
    let dir = TempDir::new().unwrap();
    let n = dir.path().join("N10.json");
    fs::write(&n, golden("N10.json")).unwrap();
    let v = nilk().arg("versch").arg(&n).args(["-k", "2"]).output().unwrap();
    assert!(v.status.success());
    assert_eq!(Matrix::from_json(&serde_json::from_slice(&v.stdout).unwrap()).unwrap().rows(), 20);
    let f = nilk().arg("frob").arg(&n).args(["-k", "10"]).output().unwrap();
    assert!(f.status.success());
    assert!(Matrix::from_json(&serde_json::from_slice(&f.stdout).unwrap()).unwrap().is_zero());
}

#[test]
fn higman_on_identity_fails_verification() {
    let dir = TempDir::new().unwrap();
    let p = dir.path().join("id.json");
    let r = laurent::base_ring();
    fs::write(&p, Matrix::identity(&r, 2).to_json().to_string()).unwrap();
    nilk().arg("higman").arg(&p).assert().code(1);
}

fn se_file(dir: &TempDir, corrupt: bool, lag: usize) -> std::path::PathBuf {
    let n = laurent::display::n10();
    let r = n.ring().clone();
    let mut u = Matrix::zero(&r, 10, 1);
    if corrupt {
        u.set(0, 0, r.one()).unwrap();
    }
    let v = Matrix::zero(&r, 1, 10);
    let doc = json!({"A": n.to_json(), "B": Matrix::zero(&r, 1, 1).to_json(), "U": u.to_json(), "V": v.to_json(), "lag": lag});
    let p = dir.path().join("se.json");
    fs::write(&p, doc.to_string()).unwrap();
    p
}

#[test]
fn sse_verify_accepts_the_trivial_witness() {
    let dir = TempDir::new().unwrap();
    let out = nilk().arg("sse-verify").arg(se_file(&dir, false, 10)).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().matches("PASS").count(), 4);
}

#[test]
fn sse_verify_names_the_failing_identity() {
    let dir = TempDir::new().unwrap();
    let out = nilk().arg("sse-verify").arg(se_file(&dir, true, 10)).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL  AU = UB"), "{text}");
    assert!(text.contains("PASS  A^ℓ = UV"), "{text}");

    let out = nilk().arg("sse-verify").arg(se_file(&dir, false, 9)).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL  A^ℓ = UV"), "{text}");
    assert!(text.contains("PASS  AU = UB"), "{text}");
}

#[test]
fn sse_verify_chain_and_esse() {
    let dir = TempDir::new().unwrap();
    let q = laurent::base_ring();
    let a = Matrix::parse(&q, &[&["0", "1"], &["0", "0"]]).unwrap();
    let u = Matrix::parse(&q, &[&["1"], &["0"]]).unwrap();
    let v = Matrix::parse(&q, &[&["0", "1"]]).unwrap();
    let b = Matrix::zero(&q, 1, 1);
    let esse = dir.path().join("esse.json");
    fs::write(&esse, json!({"A": a.to_json(), "B": b.to_json(), "U": u.to_json(), "V": v.to_json()}).to_string()).unwrap();
    nilk().arg("sse-verify").arg(&esse).assert().success();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, json!({"A": a.to_json(), "B": b.to_json(), "U": v.to_json(), "V": u.to_json()}).to_string()).unwrap();
    nilk().arg("sse-verify").arg(&bad).assert().code(1);
    let chain = nilk::nil::SseChain { start: a, steps: vec![(b, nilk::nil::EsseWitness { u, v })] };
    let cp = dir.path().join("chain.json");
    fs::write(&cp, chain.to_json().to_string()).unwrap();
    nilk().arg("sse-verify").arg(&cp).assert().success();
}

#[test]
fn malformed_input_exits_2() {
    let dir = TempDir::new().unwrap();
    let p = dir.path().join("junk.json");
    fs::write(&p, "{not json").unwrap();
    nilk().arg("sse-verify").arg(&p).assert().code(2);
    nilk().arg("higman").arg(&p).assert().code(2);
    nilk().arg("sse-verify").arg(dir.path().join("missing.json")).assert().code(2);
    nilk().args(["theorem3", "--out"]).arg(&p).assert().code(2);
}

#[test]
fn verify_all_exit_codes() {
    nilk().args(["verify-all", "--cases", "20"]).assert().code(1);
    let out = nilk().args(["verify-all", "--cases", "20", "--allow-known-typos", "--json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["status"] != "fail"));
    assert_eq!(checks.iter().filter(|c| c["status"] == "discrepancy").count(), 4);
}
