//! Binary-level tests for the command line surface.

use std::path::Path;
use std::process::Command;

use proptest::prelude::*;
use simplex_forge::generators::random_whitney;
use simplex_forge_cli::doc::{parse_complex, serialize_complex, to_facet_text};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_simplex-forge"))
}

fn tmp() -> &'static Path {
    Path::new(env!("CARGO_TARGET_TMPDIR"))
}

#[test]
fn check_reads_facet_files() {
    let path = tmp().join("triangle.txt");
    std::fs::write(&path, "# one triangle\n1 2 3\n").unwrap();
    let out = bin().args(["check", "--input"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("elements=7"));
    assert!(text.contains("energy-formula           pass"));
}

#[test]
fn check_json_report_is_valid_json() {
    let out = bin()
        .args(["check", "--generate", "cycle", "5", "--json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["complex"]["euler_characteristic"], 0);
    assert_eq!(v["det_g"], "1");
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 7);
    assert!(checks.iter().all(|c| c["verdict"] == "pass"));
}

#[test]
fn check_random_source() {
    let out = bin()
        .args(["check", "--random", "12", "30", "--seed", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
}

#[test]
fn oversize_complex_exits_nonzero_with_skips() {
    let out = bin()
        .args([
            "check",
            "--generate",
            "cross-polytope",
            "3",
            "--max-elements",
            "10",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("skipped (too large"));
}

#[test]
fn usage_errors_exit_two() {
    // No source at all.
    let out = bin().args(["check"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    // Unknown generator.
    let out = bin()
        .args(["check", "--generate", "moebius-strip"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // Missing file.
    let out = bin()
        .args(["check", "--input", "/nonexistent/nowhere.txt"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn curvature_of_dodecahedron() {
    let out = bin()
        .args(["curvature", "--generate", "dodecahedron-skeleton"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches(": -1/2").count(), 20);
    assert!(text.contains("total = -10"));
    assert!(text.contains("gauss-bonnet (total = chi = -10): pass"));
}

#[test]
fn curvature_expectation_mode() {
    let out = bin()
        .args(["curvature", "--generate", "cycle", "4", "--trials", "10"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("index expectation (exhaustive)"));
}

#[test]
fn betti_of_projective_plane() {
    let out = bin()
        .args(["betti", "--generate", "projective-plane"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[1, 0, 0]"));
    assert!(text.contains("euler-poincare"));
    assert!(text.contains("pass"));
}

#[test]
fn ph_with_explicit_values() {
    let out = bin()
        .args([
            "ph",
            "--generate",
            "cycle",
            "4",
            "--values",
            "1,2,3,4",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("vertex 1 (f=1): index 1"));
    assert!(text.contains("vertex 4 (f=4): index -1"));
    assert!(text.contains("sum = 0, chi = 0: pass"));
}

#[test]
fn ph_rejects_non_locally_injective_values() {
    let out = bin()
        .args([
            "ph",
            "--generate",
            "cycle",
            "4",
            "--values",
            "1,1,2,3",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("(1,2)"), "stderr: {err}");
}

#[test]
fn experiment_stdout_and_summary() {
    let out = bin()
        .args([
            "experiment-nullity",
            "--count",
            "2",
            "--vertices",
            "8",
            "--edges",
            "14",
            "--seed",
            "3",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let csv = String::from_utf8(out.stdout).unwrap();
    assert_eq!(csv.lines().count(), 3);
    let summary = String::from_utf8(out.stderr).unwrap();
    assert!(summary.contains("nullity distribution"));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Round trip through both serializers on random complexes.
    #[test]
    fn document_roundtrip(seed in 0u64..10_000) {
        let g = random_whitney(8, 15, seed).unwrap();
        prop_assert_eq!(&parse_complex(&serialize_complex(&g)).unwrap(), &g);
        prop_assert_eq!(&parse_complex(&to_facet_text(&g)).unwrap(), &g);
    }
}
