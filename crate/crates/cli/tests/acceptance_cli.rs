//! Acceptance: report determinism and the documented exit-code contract.

use std::process::Command;
use std::time::{Duration, Instant};

fn ywkit() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ywkit"))
}

fn run(args: &[&str]) -> (Option<i32>, String, String) {
    let out = ywkit().args(args).output().expect("binary runs");
    (
        out.status.code(),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn criterion_9_determinism_and_exit_codes() {
    let started = Instant::now();

    // identical configs produce byte-identical report bodies
    let (c1, out1, _) = run(&["verify", "center", "--jobs", "2"]);
    let (c2, out2, _) = run(&["verify", "center", "--jobs", "7"]);
    assert_eq!(c1, Some(0));
    assert_eq!(c2, Some(0));
    let v1: serde_json::Value = serde_json::from_str(&out1).unwrap();
    let v2: serde_json::Value = serde_json::from_str(&out2).unwrap();
    let b1 = serde_json::to_string(&v1["body"]).unwrap();
    let b2 = serde_json::to_string(&v2["body"]).unwrap();
    assert_eq!(b1, b2, "report bodies must be byte-identical");

    // exit 0: passing suite (covered above); exit 2: malformed signature
    let (code, _, err) = run(&["verify", "ybe", "--sig", "2|-1"]);
    assert_eq!(code, Some(2));
    assert!(err.contains("invalid signature"));

    // exit 2: unknown suite and invalid twist combination
    let (code, _, _) = run(&["verify", "no-such-suite"]);
    assert_eq!(code, Some(2));
    let (code, _, err) = run(&["verify", "twist", "--sig", "3", "--theta", "minus"]);
    assert_eq!(code, Some(2));
    assert!(err.contains("even number of indices"));

    // exit 1: a mathematically false request parses cleanly but fails its
    // checks (the shifted mode-sign convention is not an automorphism)
    let dir = std::env::temp_dir().join("ywkit-acceptance");
    std::fs::create_dir_all(&dir).unwrap();
    let cfg_path = dir.join("shifted.toml");
    std::fs::write(&cfg_path, "[algebra]\ntau_convention = \"shifted\"\n").unwrap();
    let (code, out, _) = run(&[
        "verify",
        "twist",
        "--sig",
        "2",
        "--theta",
        "plus",
        "--config",
        cfg_path.to_str().unwrap(),
    ]);
    assert_eq!(code, Some(1));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let checks = v["body"]["checks"].as_array().unwrap();
    let failed: Vec<_> = checks.iter().filter(|c| c["status"] == "fail").collect();
    assert!(!failed.is_empty(), "shifted convention must fail a check");
    assert!(
        failed.iter().any(|c| !c["counterexample"].is_null()),
        "failures carry counterexample payloads"
    );

    // the counterexample also appears in the text rendering
    let (code, text, _) = run(&[
        "verify",
        "twist",
        "--sig",
        "2",
        "--theta",
        "plus",
        "--config",
        cfg_path.to_str().unwrap(),
        "--format",
        "text",
    ]);
    assert_eq!(code, Some(1));
    assert!(text.contains("FAIL"));
    assert!(text.contains("counterexample"));

    let elapsed = started.elapsed();
    println!("criterion 9 (cli determinism): PASS in {elapsed:?} (budget 60s)");
    assert!(elapsed < Duration::from_secs(60));
}

#[test]
fn export_module_round_trips() {
    let (code, out, _) = run(&["export-module", "--sig", "2", "--params", "0,5"]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dimension"], 4);
    assert_eq!(v["level"], 2);
    assert_eq!(v["parameters"][1], "5");
}

#[test]
fn config_file_controls_suite_inputs() {
    let dir = std::env::temp_dir().join("ywkit-acceptance");
    std::fs::create_dir_all(&dir).unwrap();
    let cfg_path = dir.join("nls.toml");
    std::fs::write(
        &cfg_path,
        "[nls]\nmomenta = [\"0\", \"2\", \"9\"]\nm_max = 2\n",
    )
    .unwrap();
    let (code, out, _) = run(&["verify", "nls", "--config", cfg_path.to_str().unwrap()]);
    assert_eq!(code, Some(0));
    assert!(out.contains("nls/[0,2,9]/symmetry"));

    // momenta with a repeat are rejected at validation time (exit 2)
    let bad = dir.join("nls_bad.toml");
    std::fs::write(&bad, "[nls]\nmomenta = [\"1\", \"1\"]\n").unwrap();
    let (code, _, err) = run(&["verify", "nls", "--config", bad.to_str().unwrap()]);
    assert_eq!(code, Some(2));
    assert!(err.contains("pairwise distinct"));
}
