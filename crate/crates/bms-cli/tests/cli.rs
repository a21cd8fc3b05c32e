//! Black-box tests of the `bms` binary: outputs, exit codes, determinism.

use std::path::Path;
use std::process::{Command, Output};

fn bms(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bms"))
        .args(args)
        .output()
        .expect("spawn bms")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn verify_quick_passes_and_is_deterministic() {
    let a = bms(&["verify", "--seed", "11", "--level", "quick"]);
    assert!(a.status.success());
    let b = bms(&["verify", "--seed", "11", "--level", "quick"]);
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.contains("RESULT PASS"));
    // wall time stays on stderr
    assert!(String::from_utf8(a.stderr).unwrap().contains("elapsed"));
}

#[test]
fn verify_mutation_is_caught() {
    let out = bms(&["verify", "--seed", "11", "--mutate-kappa"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL sl2/kappa_cocycle"));
}

#[test]
fn little_group_classifies_and_reports_domain_errors() {
    let dir = tempfile::tempdir().unwrap();
    let harmonic = write(dir.path(), "f.json", r#"{"a0":0.0,"modes":[[0.0,0.0],[0.0,0.0],[1.0,0.0]]}"#);
    let out = bms(&["little-group", &harmonic]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["little_group"]["Cn"], 6);

    let zero = write(dir.path(), "zero.json", r#"{"a0":0.0,"modes":[]}"#);
    assert_eq!(bms(&["little-group", &zero]).status.code(), Some(3));

    let garbage = write(dir.path(), "bad.json", "not json");
    assert_eq!(bms(&["little-group", &garbage]).status.code(), Some(2));
    assert_eq!(bms(&["little-group", "/no/such/file.json"]).status.code(), Some(2));
}

#[test]
fn blueshift_rejects_non_unimodular_input() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "m.json", r#"{"a":2.0,"b":0.0,"c":0.0,"d":0.4}"#);
    assert_eq!(bms(&["blueshift", "--matrix", &bad]).status.code(), Some(2));
}

#[test]
fn act_applies_rotation_exactly() {
    let dir = tempfile::tempdir().unwrap();
    // R(π/2) rotates the circle by π; cos θ ↦ −cos θ
    let m = write(
        dir.path(),
        "m.json",
        r#"{"a":6.123233995736766e-17,"b":-1.0,"c":1.0,"d":6.123233995736766e-17}"#,
    );
    let f = write(dir.path(), "f.json", r#"{"a0":0.0,"modes":[[1.0,0.0]]}"#);
    let out = bms(&["act", "--matrix", &m, "--functional", &f, "--modes", "8"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((v["modes"][0][0].as_f64().unwrap() + 1.0).abs() < 1e-12);
}

#[test]
fn character_table_footer_and_odd_order() {
    let out = bms(&["character-table", "--group", "4"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let footer = text.lines().last().unwrap();
    assert!(footer.starts_with("# orthogonality_max_error="));
    let worst: f64 = footer.rsplit('=').next().unwrap().parse().unwrap();
    assert!(worst <= 1e-14);

    assert_eq!(bms(&["character-table", "--group", "3"]).status.code(), Some(2));
    assert_eq!(bms(&["character-table", "--group", "so3"]).status.code(), Some(2));
}

#[test]
fn config_file_supplies_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "cfg.json", r#"{"seed": 11}"#);
    let a = bms(&["verify", "--level", "quick", "--config", &cfg]);
    let b = bms(&["verify", "--level", "quick", "--seed", "11"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let broken = write(dir.path(), "broken.json", "{");
    assert_eq!(
        bms(&["verify", "--level", "quick", "--config", &broken]).status.code(),
        Some(2)
    );
}
