//! Golden report surfaces: the analyze document and the canonical harness
//! text are pinned byte for byte, so format or value drift is caught.
//! Regenerate with `SCX_BLESS=1 cargo test -p scx-cli --test golden_reports`.

use scx_cli::analyze::analyze;
use scx_cli::config::Config;
use scx_cli::format::parse_complex;
use scx_cli::verify::{run_suite, Suite, SuiteParams};

fn golden(name: &str) -> std::path::PathBuf {
    std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn check_or_bless(name: &str, actual: &str) {
    let path = golden(name);
    if std::env::var_os("SCX_BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|_| panic!("missing golden {name}; bless with SCX_BLESS=1"));
    assert_eq!(actual, expected, "{name} drifted; bless if intentional");
}

#[test]
fn rp2_analyze_document_is_pinned() {
    let bytes = std::fs::read(golden("rp2.json")).unwrap();
    let (file, x) = parse_complex(&bytes).unwrap();
    let report = analyze(
        &x,
        file.name.as_deref().unwrap(),
        None,
        false,
        &Config::default(),
    )
    .unwrap();
    check_or_bless("reports/rp2-analyze.json", &report.json());
}

#[test]
fn quick_suite_canonical_text_is_pinned() {
    let rep = run_suite(
        Suite::Quick,
        &SuiteParams::defaults(Suite::Quick),
        &Config::default(),
    );
    check_or_bless("reports/verify-quick.txt", &rep.canonical_text());
}
