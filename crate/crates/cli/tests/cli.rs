//! End-to-end tests of the `scx` binary: exit codes, golden files, the
//! dual-graph document, config precedence, and harness determinism.

use std::path::PathBuf;
use std::process::Command;

use scx_cli::config::Config;
use scx_cli::format::{parse_complex, serialize_complex};
use scx_cli::verify::{run_suite, Suite, SuiteParams};

fn scx() -> Command {
    Command::new(env!("CARGO_BIN_EXE_scx"))
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

#[test]
fn generate_reproduces_the_golden_files() {
    for (args, file) in [
        (vec!["--family", "sigma", "--m", "3"], "sigma-3.json"),
        (
            vec!["--family", "xk", "--m", "2", "--k", "3"],
            "xk-m2-k3.json",
        ),
        (vec!["--family", "gk", "--k", "4"], "gk-4.json"),
        (vec!["--family", "rp2"], "rp2.json"),
        (
            vec!["--family", "random-disk", "--t", "9", "--seed", "42"],
            "disk-t9-seed42.json",
        ),
    ] {
        let out = scx()
            .arg("generate")
            .args(&args)
            .output()
            .expect("binary runs");
        assert!(out.status.success(), "{args:?}");
        let golden = std::fs::read(golden_dir().join(file)).unwrap();
        assert_eq!(out.stdout, golden, "generate {args:?} diverged from {file}");
    }
}

#[test]
fn golden_files_round_trip_byte_identically() {
    for entry in std::fs::read_dir(golden_dir()).unwrap() {
        let path = entry.unwrap().path();
        if !path.is_file() {
            continue;
        }
        let bytes = std::fs::read(&path).unwrap();
        let (file, x) = parse_complex(&bytes).unwrap();
        let again = serialize_complex(&x, file.name.as_deref(), file.metadata.clone());
        assert_eq!(again, bytes, "{} did not round-trip", path.display());
    }
}

#[test]
fn parse_error_exits_2_with_position() {
    let dir = std::env::temp_dir().join("scx-cli-test-parse");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, b"{\"maximal_simplices\": [[0, -1]]}").unwrap();
    let out = scx().arg("analyze").arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 1"), "{err}");
}

#[test]
fn cap_overflow_exits_3() {
    let dir = std::env::temp_dir().join("scx-cli-test-cap");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("xk-m2-k4.json");
    let out = scx()
        .arg("generate")
        .args(["--family", "xk", "--m", "2", "--k", "4", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let out = scx().arg("analyze").arg(&path).output().unwrap();
    assert_eq!(
        out.status.code(),
        Some(3),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    // but the structural-only path succeeds
    let out = scx()
        .arg("analyze")
        .arg(&path)
        .arg("--structural-only")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("1/4"), "{text}");
}

#[test]
fn env_config_overrides_defaults() {
    let dir = std::env::temp_dir().join("scx-cli-test-env");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sigma-2.json");
    scx()
        .args(["generate", "--family", "sigma", "--m", "2", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    // a tiny sweep cap makes even the triangle overflow
    let out = scx()
        .arg("analyze")
        .arg(&path)
        .env("SCX_BRUTE_CAP_BITS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    // flags beat the environment
    let out = scx()
        .arg("analyze")
        .arg(&path)
        .arg("--brute-cap-bits")
        .arg("24")
        .env("SCX_BRUTE_CAP_BITS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn dims_selector_restricts_the_report() {
    let dir = std::env::temp_dir().join("scx-cli-test-dims");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("rp2.json");
    scx()
        .args(["generate", "--family", "rp2", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    let report_path = dir.join("report.json");
    let out = scx()
        .arg("analyze")
        .arg(&path)
        .args(["--dims", "2", "--json", "--out"])
        .arg(&report_path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let dims = doc["dimensions"].as_array().unwrap();
    assert_eq!(dims.len(), 1);
    assert_eq!(dims[0]["k"], 2);
    assert_eq!(dims[0]["cheeger_down"]["value"], "0");
    // --out writes the same document
    assert_eq!(std::fs::read(&report_path).unwrap(), out.stdout);
}

#[test]
fn config_file_layer_sits_below_flags() {
    let dir = std::env::temp_dir().join("scx-cli-test-cfgfile");
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("scx.toml");
    std::fs::write(&cfg, "brute_cap_bits = 1\n").unwrap();
    let path = dir.join("sigma-2.json");
    scx()
        .args(["generate", "--family", "sigma", "--m", "2", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    let out = scx()
        .arg("analyze")
        .arg(&path)
        .arg("--config")
        .arg(&cfg)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = scx()
        .arg("analyze")
        .arg(&path)
        .arg("--config")
        .arg(&cfg)
        .args(["--brute-cap-bits", "24"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_json_is_machine_readable() {
    let out = scx()
        .args(["verify", "--suite", "quick", "--json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["suite"], "quick");
    let checks = doc["checks"].as_array().unwrap();
    assert!(checks.len() >= 8);
    for c in checks {
        assert!(c["pass"].as_bool().unwrap());
        assert!(c["claim"].is_string());
    }
}

#[test]
fn dual_document_for_the_projective_plane() {
    let dir = std::env::temp_dir().join("scx-cli-test-dual");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("rp2.json");
    scx()
        .args(["generate", "--family", "rp2", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    let out = scx().arg("dual").arg(&path).output().unwrap();
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 10);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 15);
    assert_eq!(doc["border_set"].as_array().unwrap().len(), 0);
}

#[test]
fn quick_suite_passes_and_is_deterministic() {
    let params = SuiteParams::defaults(Suite::Quick);
    let cfg = Config::default();
    let a = run_suite(Suite::Quick, &params, &cfg);
    let b = run_suite(Suite::Quick, &params, &cfg);
    assert!(a.all_pass(), "{}", a.text());
    assert_eq!(a.canonical_text(), b.canonical_text());
    let out = scx().args(["verify", "--suite", "quick"]).output().unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
}

#[test]
fn corrupted_generator_fails_the_radius_check() {
    let cfg = Config::default();
    let params = SuiteParams {
        corrupt_generator: true,
        ..SuiteParams::defaults(Suite::Quick)
    };
    let report = run_suite(Suite::Quick, &params, &cfg);
    let radius_row = report
        .checks
        .iter()
        .find(|c| c.id == "xk.m2.h-top-cochain")
        .unwrap();
    assert!(!radius_row.pass, "harness failed to notice the corruption");
    assert!(!report.all_pass());
    let out = scx()
        .args(["verify", "--suite", "quick", "--corrupt-generator"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
