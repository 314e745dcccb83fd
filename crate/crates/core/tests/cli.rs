//! CLI integration tests: golden outputs, exit codes, JSON round-trips,
//! and consistency between the bundled JSON fixtures and the library
//! constructors.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use studydet::groupdet::group_vars;
use studydet::rings::poly::ScalarRing;
use studydet::rings::text::parse_poly;

fn fixture(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(rel)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_studydet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn compute_c2_golden() {
    let out = run(&[
        "groupdet",
        "compute",
        "--group",
        fixture("groups/c2.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "x_e^2 - x_g^2\n");
}

#[test]
fn compute_c3_golden() {
    let out = run(&[
        "groupdet",
        "compute",
        "--group",
        fixture("groups/c3.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "x_0^3 - 3*x_0*x_1*x_2 + x_1^3 + x_2^3\n");
}

#[test]
fn dedekind_nonabelian_is_exit_3() {
    let out = run(&[
        "groupdet",
        "dedekind",
        "--group",
        fixture("groups/s3.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("subgroup must be abelian"), "stderr: {err}");
}

#[test]
fn extension_s3_passes() {
    let out = run(&[
        "groupdet",
        "extension",
        "--group",
        fixture("groups/s3.json").to_str().unwrap(),
        "--subgroup",
        "R3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("product-check: true"));
}

#[test]
fn extension_unknown_subgroup_is_exit_2() {
    let out = run(&[
        "groupdet",
        "extension",
        "--group",
        fixture("groups/s3.json").to_str().unwrap(),
        "--subgroup",
        "NOPE",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_group_file_is_exit_2() {
    let dir = std::env::temp_dir().join("studydet-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.json");
    std::fs::write(&path, "{ not json").unwrap();
    let out = run(&["groupdet", "compute", "--group", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    // A structurally invalid table is also an input error.
    let path2 = dir.join("bad_table.json");
    std::fs::write(
        &path2,
        r#"{"name": "bad", "elements": ["e", "g"], "table": [[1, 1], [1, 0]]}"#,
    )
    .unwrap();
    let out = run(&["groupdet", "compute", "--group", path2.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn quaternion_golden_values() {
    let out = run(&[
        "quaternion",
        "--matrix",
        fixture("quaternion/q1234.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "Sdet = 30; invertible: true\nreal: true\n");

    let out = run(&[
        "quaternion",
        "--matrix",
        fixture("quaternion/identity2.json").to_str().unwrap(),
    ]);
    assert_eq!(stdout(&out), "Sdet = 1; invertible: true\nreal: true\n");

    let out = run(&[
        "quaternion",
        "--matrix",
        fixture("quaternion/zero1.json").to_str().unwrap(),
    ]);
    assert_eq!(stdout(&out), "Sdet = 0; invertible: false\nreal: true\n");
}

#[test]
fn verify_unknown_suite_is_exit_2() {
    let out = run(&["verify", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_text_output_is_deterministic() {
    let args = ["verify", "--suite", "kron", "--trials", "25", "--seed", "7"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).contains("kron-reversal: 25/25 pass"));
}

#[test]
fn json_theta_round_trips() {
    // The polynomial in the JSON report parses back to the identical
    // polynomial.
    let out = run(&[
        "groupdet",
        "compute",
        "--group",
        fixture("groups/s3.json").to_str().unwrap(),
        "--output",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["command"], "groupdet compute");
    assert_eq!(report["elapsed_ms"], 0);
    let rendered = report["results"][0]["detail"].as_str().unwrap();
    let g = studydet::fixtures::s3();
    let vars = group_vars(&g);
    let parsed = parse_poly(rendered, &vars, &ScalarRing::Rational).unwrap();
    let theta = studydet::groupdet::group_determinant(&g).unwrap();
    assert_eq!(parsed, theta);
    assert_eq!(parsed.to_string(), rendered);
}

#[test]
fn json_extension_factors_round_trip() {
    let out = run(&[
        "groupdet",
        "extension",
        "--group",
        fixture("groups/c4.json").to_str().unwrap(),
        "--subgroup",
        "C2",
        "--output",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let g = studydet::fixtures::cyclic(4);
    let vars = group_vars(&g);
    let base = ScalarRing::Cyclotomic(2);
    for line in report["results"].as_array().unwrap() {
        let name = line["name"].as_str().unwrap();
        if !name.starts_with("factor-") {
            continue;
        }
        let rendered = line["detail"].as_str().unwrap();
        let parsed = parse_poly(rendered, &vars, &base).unwrap();
        assert_eq!(parsed.to_string(), rendered);
    }
}

#[test]
fn bundled_group_fixtures_match_constructors() {
    let cases: Vec<(&str, studydet::tga::FiniteGroupTable)> = vec![
        ("groups/c2.json", studydet::fixtures::c2()),
        ("groups/c3.json", studydet::fixtures::cyclic(3)),
        ("groups/c4.json", studydet::fixtures::cyclic(4)),
        ("groups/c2c2.json", studydet::fixtures::klein()),
        ("groups/c6.json", studydet::fixtures::cyclic(6)),
        ("groups/s3.json", studydet::fixtures::s3()),
        ("groups/d4.json", studydet::fixtures::d4()),
        ("groups/q8.json", studydet::fixtures::q8()),
    ];
    for (rel, expect) in cases {
        let (group, cocycle) = studydet::io::load_group(&fixture(rel)).unwrap();
        assert_eq!(group, expect, "fixture {rel}");
        assert!(cocycle.is_trivial());
    }
    // The twisted quaternion fixture carries the sign cocycle.
    let (group, cocycle) =
        studydet::io::load_group(&fixture("groups/quaternion.json")).unwrap();
    assert_eq!(group, studydet::fixtures::quaternion_group());
    assert!(!cocycle.is_trivial());
    let expect_values = studydet::fixtures::quaternion_cocycle_values();
    assert_eq!(cocycle.values(), expect_values.as_slice());
}

#[test]
fn bundled_irrep_fixtures_validate_and_match() {
    let s3 = studydet::fixtures::s3();
    let loaded = studydet::io::load_irreps(&fixture("irreps/s3_irreps.json"), &s3).unwrap();
    assert_eq!(loaded.len(), 3);
    let report = studydet::groupdet::frobenius_verify(&s3, &loaded).unwrap();
    assert!(report.product_ok);

    let q8 = studydet::fixtures::q8();
    let loaded = studydet::io::load_irreps(&fixture("irreps/q8_irreps.json"), &q8).unwrap();
    assert_eq!(loaded.len(), 5);
    let report = studydet::groupdet::frobenius_verify(&q8, &loaded).unwrap();
    assert!(report.product_ok);
}

#[test]
fn frobenius_cli_with_bundled_fixtures() {
    let out = run(&[
        "groupdet",
        "frobenius",
        "--group",
        fixture("groups/q8.json").to_str().unwrap(),
        "--irreps",
        fixture("irreps/q8_irreps.json").to_str().unwrap(),
        "--subgroup",
        "C4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("product-check: true"));
    assert!(text.contains("degree-bound (C4): true"));
}
