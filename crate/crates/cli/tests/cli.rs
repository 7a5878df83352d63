use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polychrome"))
        .args(args)
        .current_dir(dir)
        .env_remove("POLYCHROME_BUDGET")
        .output()
        .expect("binary runs")
}

fn json(bytes: &[u8]) -> Value {
    serde_json::from_slice(bytes).expect("valid JSON")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

/// Save a gallery report into `dir` and return its file name.
fn gallery(dir: &TempDir, file: &str, args: &[&str]) -> String {
    let mut full = vec!["gallery"];
    full.extend_from_slice(args);
    let out = run(dir.path(), &full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    std::fs::write(dir.path().join(file), &out.stdout).unwrap();
    file.to_string()
}

#[test]
fn three_poly_polynomial_string() {
    let dir = TempDir::new().unwrap();
    let f = gallery(&dir, "tp.json", &["three-poly"]);
    let out = run(dir.path(), &["chromatic", &f]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out.stdout);
    assert_eq!(report["complete"], true);
    assert_eq!(
        report["results"]["polynomial"]["display"],
        "x^6-8x^5+18x^4+4x^3-49x^2+34x"
    );
    assert_eq!(report["results"]["polynomial"]["coeffs"][1], "34/1");
}

#[test]
fn vamos_is_infinitely_chromatic() {
    let dir = TempDir::new().unwrap();
    let f = gallery(&dir, "v.json", &["vamos", "2", "4"]);
    let out = run(dir.path(), &["chromatic", "--number", &f]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out.stdout)["results"]["chromatic_number"], "infinity");
}

#[test]
fn non_submodular_input_reports_a_witness() {
    let dir = TempDir::new().unwrap();
    write(&dir, "bad.json", r#"{"n":2,"rank":[0,1,1,3]}"#);
    let out = run(dir.path(), &["validate", "bad.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err = json(&out.stderr);
    assert_eq!(err["error"]["kind"], "axiom");
    assert_eq!(err["error"]["axiom"], "not_submodular");
    assert_eq!(err["error"]["witness"]["a"], serde_json::json!([0]));
    assert_eq!(err["error"]["witness"]["b"], serde_json::json!([1]));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let f = gallery(&dir, "tp.json", &["three-poly"]);

    let out = run(dir.path(), &["chromatic", "--budget", "5", &f]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out.stdout)["complete"], false);
    assert_eq!(json(&out.stderr)["error"]["kind"], "incomplete");

    let out = Command::new(env!("CARGO_BIN_EXE_polychrome"))
        .args(["decompose", &f])
        .current_dir(dir.path())
        .env("POLYCHROME_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));

    let big = serde_json::json!({ "n": 17, "rank": vec![0; 1 << 17] }).to_string();
    write(&dir, "big.json", &big);
    let out = run(dir.path(), &["validate", "big.json"]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(json(&out.stderr)["error"]["kind"], "cap_exceeded");

    assert_eq!(run(dir.path(), &["validate", "missing.json"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["gallery", "nosuch"]).status.code(), Some(2));
    write(&dir, "junk.json", "{");
    assert_eq!(run(dir.path(), &["validate", "junk.json"]).status.code(), Some(2));
}

#[test]
fn reports_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let f = gallery(&dir, "c5.json", &["boolean-cycle", "5"]);
    for args in [
        vec!["chromatic", f.as_str()],
        vec!["decompose", f.as_str()],
        vec!["hyper", f.as_str()],
        vec!["--threads", "2", "witness", f.as_str()],
    ] {
        let a = run(dir.path(), &args);
        let b = run(dir.path(), &args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let timed = json(&run(dir.path(), &["--timing", "validate", &f]).stdout);
    assert!(timed["timing_ms"].is_f64());
    let plain = json(&run(dir.path(), &["validate", &f]).stdout);
    assert!(plain.get("timing_ms").is_none());
}

#[test]
fn reports_chain_into_later_commands() {
    let dir = TempDir::new().unwrap();
    let f = gallery(&dir, "c3.json", &["boolean-cycle", "3"]);
    let out = run(dir.path(), &["hyper", "--build", &f]);
    let built = json(&out.stdout);
    let bare = built["results"]["polymatroid"].to_string();
    write(&dir, "bare.json", &bare);
    let original = json(&std::fs::read(dir.path().join(&f)).unwrap());
    assert_eq!(built["results"]["polymatroid"], original["results"]["polymatroid"]);

    let from_report = json(&run(dir.path(), &["chromatic", &f]).stdout);
    let from_bare = json(&run(dir.path(), &["chromatic", "bare.json"]).stdout);
    assert_eq!(from_report["results"], from_bare["results"]);
    assert_ne!(from_report["input_digest"], from_bare["input_digest"]);

    std::fs::write(dir.path().join("built.json"), &out.stdout).unwrap();
    let dual = json(&run(dir.path(), &["dual", "--i", "2", "built.json"]).stdout);
    write(&dir, "dual.json", &dual["results"]["polymatroid"].to_string());
    let back = json(&run(dir.path(), &["dual", "--i", "2", "dual.json"]).stdout);
    assert_eq!(back["results"]["polymatroid"], original["results"]["polymatroid"]);
}

#[test]
fn quotient_reports_chains_and_failures() {
    let dir = TempDir::new().unwrap();
    let c3 = gallery(&dir, "c3.json", &["boolean-cycle", "3"]);
    let r = json(&run(dir.path(), &["quotient", "--k", "2", &c3]).stdout)["results"].clone();
    assert_eq!(r["is_quotient"], true);
    assert_eq!(r["rank_difference"], 1);
    assert_eq!(r["excluded_minor"], Value::Null);

    let bad = gallery(&dir, "rho.json", &["rho-a", "0", "1", "2"]);
    let r = json(&run(dir.path(), &["quotient", "--k", "2", &bad]).stdout)["results"].clone();
    assert_eq!(r["is_quotient"], false);
    assert_eq!(r["failure"]["kind"], "ill_defined");
    assert_eq!(r["failure"]["set"], serde_json::json!([0, 1]));
    assert_eq!(r["excluded_minor"]["c"], 2);
}

#[test]
fn mixing_two_matroids() {
    let dir = TempDir::new().unwrap();
    write(&dir, "u13.json", r#"{"n":3,"rank":[0,1,1,1,1,1,1,1]}"#);
    write(&dir, "u23.json", r#"{"n":3,"rank":[0,1,1,2,1,2,2,2]}"#);
    let out = run(dir.path(), &["mixing", "u13.json", "u23.json"]);
    assert!(out.status.success());
    let r = &json(&out.stdout)["results"];
    assert_eq!(r["component_count"], 1);
    assert_eq!(r["vertices"], serde_json::json!([[0, 1], [0, 2], [1, 2], [0, 1, 2]]));

    write(&dir, "poly.json", r#"{"n":1,"rank":[0,2]}"#);
    let out = run(dir.path(), &["mixing", "u13.json", "poly.json"]);
    assert_eq!(out.status.code(), Some(2));
}
