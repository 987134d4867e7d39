//! End-to-end runs of the `mvs` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};
use std::sync::OnceLock;

use serde_json::{json, Value};
use tempfile::TempDir;

const X_AND_RHO: &str = r#"{"arity":1,"meets":[[{"a":[1],"b":0}],[{"a":[2],"b":-1}]]}"#;

fn mvs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mvs")).args(args).output().expect("running mvs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&o.stdout))
    })
}

/// One emitted corpus shared by the tests that need input files.
fn corpus() -> &'static Path {
    static DIR: OnceLock<TempDir> = OnceLock::new();
    DIR.get_or_init(|| {
        let dir = TempDir::new().unwrap();
        let o = mvs(&["corpus", "emit", "--out", dir.path().to_str().unwrap()]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
        dir
    })
    .path()
}

fn file(rel: &str) -> String {
    corpus().join(rel).to_str().unwrap().to_owned()
}

fn write(dir: &TempDir, name: &str, v: &Value) -> String {
    let p = dir.path().join(name);
    fs::write(&p, serde_json::to_string(v).unwrap()).unwrap();
    p.to_str().unwrap().to_owned()
}

fn chain_tables(n: usize) -> Value {
    let join: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| x.max(y)).collect()).collect();
    let meet: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| x.min(y)).collect()).collect();
    json!({ "size": n, "join": join, "meet": meet })
}

#[test]
fn validate_accepts_and_rejects() {
    assert_eq!(code(&mvs(&["validate", &file("algebras/L1xL2.json")])), 0);

    // Ł₂ with 1/2 ⊕ 1/2 patched to 0.
    let bad = r#"{"size":3,"oplus":[[0,1,2],[1,0,2],[2,2,2]],"neg":[2,1,0]}"#;
    let o = mvs(&["validate", bad]);
    assert_eq!(code(&o), 1);
    let report = stdout_json(&o);
    assert!(!report["violations"].as_array().unwrap().is_empty(), "{report}");
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(code(&mvs(&["validate", "/no/such/file.json"])), 2);
    assert_eq!(code(&mvs(&["no-such-command"])), 2);
    assert_eq!(code(&mvs(&["verify", "--only", "no-such-suite"])), 2);
    assert_eq!(code(&mvs(&["quotient", &file("algebras/L4.json"), "--ideal", "{}"])), 2);
}

#[test]
fn size_guard_applies() {
    let o = Command::new(env!("CARGO_BIN_EXE_mvs"))
        .args(["validate", &file("algebras/L1xL2.json")])
        .env("MVS_SIZE_GUARD", "4")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn classify_reports_rank_and_varieties() {
    let o = mvs(&["classify", &file("algebras/L2xL2.json"), "--m", "4", "--m", "3"]);
    assert_eq!(code(&o), 0);
    let r = stdout_json(&o);
    assert_eq!(r["perfect"], false);
    assert_eq!(r["local"], false);
    assert_eq!(r["semisimple"], true);
    assert_eq!(r["rank"], 8);
    assert_eq!(r["inVC"], false);
    assert_eq!(r["inVK"]["4"], true);
    assert_eq!(r["inVK"]["3"], false);
}

#[test]
fn spectrum_and_dot() {
    let o = mvs(&["spec", &file("algebras/L1xL2.json")]);
    assert_eq!(code(&o), 0);
    let r = stdout_json(&o);
    assert_eq!(r["primes"], json!([[0, 2], [0, 1, 3]]));
    assert!(r["order"]["covers"].as_array().unwrap().is_empty());

    let dot = mvs(&["spec", &file("algebras/L1xL2.json"), "--dot"]);
    let text = String::from_utf8(dot.stdout).unwrap();
    assert!(text.starts_with("digraph"), "{text}");
    assert!(!text.contains("->"), "two maximal primes are incomparable");
}

#[test]
fn ideals_and_quotient() {
    let o = mvs(&["ideals", &file("algebras/L1xL2.json")]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    let ideals = v.as_array().or_else(|| v["ideals"].as_array()).unwrap();
    assert_eq!(ideals.len(), 4);

    let o = mvs(&["quotient", &file("algebras/L1xL2.json"), "--ideal", "0,2"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let q = stdout_json(&o);
    assert_eq!(q["quotient"]["size"], 3, "{q}");
}

#[test]
fn chain_collapse_verdicts_disagree() {
    let dir = TempDir::new().unwrap();
    let four = write(&dir, "four.json", &chain_tables(4));
    let two = write(&dir, "two.json", &chain_tables(2));
    let hom = write(&dir, "hom.json", &json!({ "source": four, "target": two, "map": [0, 1, 1, 1] }));
    let o = mvs(&["hom", "check-closed", &hom]);
    assert_eq!(code(&o), 1);
    let r = stdout_json(&o);
    assert_eq!(r["closed_downsets"], true);
    assert_eq!(r["closed_ideals"], true);
    assert_eq!(r["closed"], false);
    assert_eq!(r["verdicts_agree"], false);
    assert_eq!(r["dual_preserves_closed"], false);
    assert_eq!(r["witness_prime"], json!([0, 1, 2]));
}

#[test]
fn identity_hom_is_closed() {
    let dir = TempDir::new().unwrap();
    let hom = write(
        &dir,
        "hom.json",
        &json!({ "source": chain_tables(3), "target": chain_tables(3), "map": [0, 1, 2] }),
    );
    let o = mvs(&["hom", "check-closed", &hom]);
    assert_eq!(code(&o), 0);
    let r = stdout_json(&o);
    assert_eq!(r["closed"], true);
    assert_eq!(r["dual_preserves_closed"], true);
}

#[test]
fn emitted_homs_resolve_relative_paths() {
    let homs: Vec<_> = fs::read_dir(corpus().join("homs")).unwrap().map(|e| e.unwrap().path()).collect();
    assert!(!homs.is_empty());
    let o = mvs(&["hom", "check-closed", homs[0].to_str().unwrap()]);
    assert!(matches!(code(&o), 0 | 1), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn lattice_dual_of_boolean_square() {
    let o = mvs(&["lattice", "dual", &file("lattices/D4-1.json")]);
    assert_eq!(code(&o), 0);
    let r = stdout_json(&o);
    // D4-1 is the Boolean square: two incomparable primes.
    assert_eq!(r["primes"].as_array().unwrap().len(), 2);
    assert!(r["order"]["covers"].as_array().unwrap().is_empty());
}

#[test]
fn functors() {
    let g = stdout_json(&mvs(&["functor", "gamma", "--group", "Z", "--unit", "3"]));
    assert_eq!(g["kind"], "finite");
    assert_eq!(g["tables"]["size"], 4);

    let c = stdout_json(&mvs(&["functor", "gamma", "--group", "ZxZ", "--unit", "(1,0)"]));
    assert_eq!(c["kind"], "symbolic");
    assert_eq!(c["inVC"], true);

    let k = stdout_json(&mvs(&["functor", "komori", "--m", "3"]));
    assert_eq!(k["rank"], 3);
    assert_eq!(k["perfect"], false);
    assert_eq!(k["spectrum"]["points"].as_array().unwrap().len(), 2);

    let d = stdout_json(&mvs(&["functor", "delta", "--group", "Z"]));
    assert_eq!(d["perfect"], true);

    let b = stdout_json(&mvs(&["functor", "belluce", &file("algebras/L1xL2.json")]));
    let i = stdout_json(&mvs(&["functor", "idc", &file("algebras/L1xL2.json")]));
    assert_eq!(b["size"], 4);
    assert_eq!(i["size"], 4);
    let dot = mvs(&["functor", "idc", &file("algebras/L1xL2.json"), "--dot"]);
    assert!(String::from_utf8(dot.stdout).unwrap().starts_with("digraph"));
}

#[test]
fn mcnaughton_commands() {
    let e = stdout_json(&mvs(&["mcn", "eval", X_AND_RHO, "--at", "3/4"]));
    assert_eq!(e["value"], "1/2");

    let h = stdout_json(&mvs(&["mcn", "homog", X_AND_RHO]));
    assert_eq!(h["value_at_zero"], "0");
    assert_eq!(h["syntactically_homogeneous"], false);
    assert_eq!(h["locally_homogeneous"], true);
    assert_eq!(h["zero_at_origin"], true);

    let z = stdout_json(&mvs(&["mcn", "zeroset", X_AND_RHO]));
    assert_eq!(z["display"], "[0, 1/2]");
    assert_eq!(z["cone"], false);

    assert_eq!(code(&mvs(&["mcn", "eval", X_AND_RHO, "--at", "3/2"])), 2);
}

#[test]
fn verify_selection() {
    let o = mvs(&["verify", "--only", "open-join"]);
    assert_eq!(code(&o), 0);
    let r = stdout_json(&o);
    assert_eq!(r["passed"], true);
    assert_eq!(r["entries"].as_array().unwrap().len(), 1);
    assert!(r["entries"][0].get("runtime_ms").is_none());

    let none = stdout_json(&mvs(&["verify", "--none"]));
    assert_eq!(none, json!({ "passed": true, "entries": [] }));

    let list = stdout_json(&mvs(&["verify", "--list"]));
    assert!(list.as_array().unwrap().iter().any(|s| s["id"] == "open-join"));
}

#[test]
fn verify_reports_the_closedness_counterexample() {
    let o = mvs(&["verify", "--only", "closed-epi-equivalence"]);
    assert_eq!(code(&o), 1);
    let r = stdout_json(&o);
    assert_eq!(r["passed"], false);
    assert!(r["entries"][0]["counterexample"].is_object());
}

#[test]
fn verify_lspec() {
    for g in ["trivial", "Z", "ZxZ"] {
        let o = mvs(&["verify", "lspec", "--group", g]);
        assert_eq!(code(&o), 0, "{g}: {}", String::from_utf8_lossy(&o.stdout));
    }
}

#[test]
fn corpus_emission_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let o = mvs(&["corpus", "emit", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let a = fs::read(dir.path().join("manifest.json")).unwrap();
    let b = fs::read(corpus().join("manifest.json")).unwrap();
    assert_eq!(a, b);
    let m: Value = serde_json::from_slice(&a).unwrap();
    for entry in m["files"].as_array().unwrap() {
        let rel = entry["path"].as_str().unwrap();
        assert_eq!(fs::read(dir.path().join(rel)).unwrap(), fs::read(corpus().join(rel)).unwrap(), "{rel}");
    }
}
