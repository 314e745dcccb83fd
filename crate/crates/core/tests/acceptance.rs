//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line with its counts and elapsed time. All checks are exact; the
//! stated runtime budgets are asserted too.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines.

use std::time::{Duration, Instant};

use studydet::fixtures;
use studydet::regrep::{regrep_element, regrep_matrix};
use studydet::rings::{Ring, Value};
use studydet::rng::SplitMix64;
use studydet::suites::{rand_tga_matrix, run_suite, PropertyResult};
use studydet::tga::{coset_decompose, Span, TowerBasis};

fn find(results: &[PropertyResult], name: &str) -> PropertyResult {
    results
        .iter()
        .find(|r| r.name == name)
        .unwrap_or_else(|| panic!("missing property {name}"))
        .clone()
}

fn report(criterion: &str, pass: bool, detail: &str, elapsed: Duration) {
    println!(
        "acceptance {criterion}: {} ({detail}, {:.2?})",
        if pass { "PASS" } else { "FAIL" },
        elapsed
    );
    assert!(pass, "{criterion} failed: {detail}");
}

fn assert_budget(criterion: &str, elapsed: Duration, budget: Duration) {
    assert!(
        elapsed <= budget,
        "{criterion} exceeded its runtime budget: {elapsed:.2?} > {budget:.2?}"
    );
}

#[test]
fn c01_kronecker_reversal() {
    let t = Instant::now();
    let results = run_suite("kron", 2024, 500).unwrap();
    let kron = find(&results, "kron-reversal");
    let elapsed = t.elapsed();
    report(
        "1 (Kronecker reversal, 500 trials m,n<=4)",
        kron.passed() && kron.total == 500,
        &kron.detail(),
        elapsed,
    );
    assert_budget("criterion 1", elapsed, Duration::from_secs(5));
}

#[test]
fn c02_commuting_block_determinant() {
    let t = Instant::now();
    let results = run_suite("block-det", 2024, 200).unwrap();
    let prop = find(&results, "commuting-block-det");
    let elapsed = t.elapsed();
    report(
        "2 (commuting-block determinant, 200 trials m,n<=3)",
        prop.passed() && prop.total == 200,
        &prop.detail(),
        elapsed,
    );
    assert_budget("criterion 2", elapsed, Duration::from_secs(30));
}

#[test]
fn c03_core_diagram() {
    // Determinant composition through each tower, 100 trials per tower,
    // r <= 3: Det_C(iota(L'(b))) = Det_C(L(Det_B(b))).
    let t = Instant::now();
    let towers: Vec<(&str, TowerBasis)> = {
        let quat = fixtures::quaternion_lower_tower(Ring::Rational).unwrap();
        let c4_alg =
            fixtures::group_algebra(fixtures::cyclic(4), Ring::Rational, "QC4").unwrap();
        let c4 = coset_decompose(&c4_alg, Span::Full, &[0]).unwrap();
        let klein_alg =
            fixtures::group_algebra(fixtures::klein(), Ring::Rational, "QV4").unwrap();
        let klein = coset_decompose(&klein_alg, Span::Full, &[0]).unwrap();
        let s3_alg = fixtures::group_algebra(fixtures::s3(), Ring::Rational, "QS3").unwrap();
        let s3 = coset_decompose(&s3_alg, Span::sub(vec![0, 1, 2]), &[0]).unwrap();
        vec![
            ("Q(i) over Q", quat),
            ("QC4 over Q", c4),
            ("QV4 over Q", klein),
            ("QC3 over Q (inside S3)", s3),
        ]
    };
    let mut detail = String::new();
    let mut all_ok = true;
    for (name, lower) in &towers {
        let mut pass = 0;
        for trial in 0..100u64 {
            let mut rng = SplitMix64::for_trial(3 ^ trial, trial);
            let r_dim = 1 + (rng.below(3) as usize);
            let b = rand_tga_matrix(&mut rng, lower.algebra(), lower.domain(), r_dim);
            let lhs = regrep_matrix(lower, &b).unwrap().det_divfree().unwrap();
            let det_b = match b.det_divfree().unwrap() {
                Value::Tga(t) => t,
                _ => unreachable!(),
            };
            let rhs = regrep_element(lower, &det_b)
                .unwrap()
                .det_divfree()
                .unwrap();
            if lhs == rhs {
                pass += 1;
            }
        }
        all_ok &= pass == 100;
        detail.push_str(&format!("{name}: {pass}/100; "));
    }
    let elapsed = t.elapsed();
    report("3 (core diagram, 100 trials per tower)", all_ok, &detail, elapsed);
    assert_budget("criterion 3", elapsed, Duration::from_secs(120));
}

#[test]
fn c04_study_determinant_suite() {
    let t = Instant::now();
    let results = run_suite("study", 2024, 200).unwrap();
    let elapsed = t.elapsed();
    let mut detail = String::new();
    let mut ok = true;
    for (name, want_total) in [
        ("s1-multiplicative", 200),
        ("s3-row-ops", 200),
        ("s4-real", 200),
        ("s5-phi-psi-square", 200),
        ("s2-invertible", 50),
        ("s2-singular", 20),
    ] {
        let prop = find(&results, name);
        ok &= prop.passed() && prop.total == want_total;
        detail.push_str(&format!("{name}: {}; ", prop.detail()));
    }
    report("4 (Study determinant suite)", ok, &detail, elapsed);
    assert_budget("criterion 4", elapsed, Duration::from_secs(60));
}

#[test]
fn c05_cayley_hamilton() {
    let t = Instant::now();
    let results = run_suite("cayley-hamilton", 2024, 200).unwrap();
    let elapsed = t.elapsed();
    let ch = find(&results, "cayley-hamilton");
    let closed = find(&results, "charpoly-closed-form");
    report(
        "5 (Cayley-Hamilton, 200 trials + closed form)",
        ch.passed() && ch.total == 200 && closed.passed(),
        &format!("{}; closed-form {}", ch.detail(), closed.detail()),
        elapsed,
    );
    assert_budget("criterion 5", elapsed, Duration::from_secs(30));
}

#[test]
fn c06_commutant_characterization() {
    let t = Instant::now();
    let results = run_suite("commutant", 2024, 100).unwrap();
    let elapsed = t.elapsed();
    let forward = find(&results, "commutant-forward");
    let reverse = find(&results, "commutant-reverse");
    report(
        "6 (commutant: forward 100, reverse >= 20 solutions)",
        forward.passed() && forward.total == 100 && reverse.passed() && reverse.total >= 20,
        &format!("forward {}; reverse {}", forward.detail(), reverse.detail()),
        elapsed,
    );
    assert_budget("criterion 6", elapsed, Duration::from_secs(30));
}

#[test]
fn c07_dedekind() {
    let t = Instant::now();
    let results = run_suite("dedekind", 2024, 1).unwrap();
    let elapsed = t.elapsed();
    let prop = find(&results, "dedekind-product");
    report(
        "7 (Dedekind: C2, C3, C4, C2xC2, C6)",
        prop.passed() && prop.total == 5,
        &prop.detail(),
        elapsed,
    );
    assert_budget("criterion 7", elapsed, Duration::from_secs(10));
}

#[test]
fn c08_extension_theorem() {
    let t = Instant::now();
    let results = run_suite("extension", 2024, 1).unwrap();
    let elapsed = t.elapsed();
    let prop = find(&results, "extension-product");
    report(
        "8 (extension theorem: (C4,C2), (S3,<r>), (D4,C4), (Q8,<i>))",
        prop.passed() && prop.total == 4,
        &prop.detail(),
        elapsed,
    );
    assert_budget("criterion 8", elapsed, Duration::from_secs(120));
}

#[test]
fn c09_frobenius_verification() {
    let t = Instant::now();
    let results = run_suite("frobenius", 2024, 1).unwrap();
    let elapsed = t.elapsed();
    let product = find(&results, "frobenius-product");
    let bound = find(&results, "degree-bound");
    let agree = find(&results, "factorizations-agree");
    report(
        "9 (Frobenius with S3 and Q8 fixtures + degree bound)",
        product.passed() && bound.passed() && agree.passed(),
        &format!(
            "product {}; bound {}; agreement {}",
            product.detail(),
            bound.detail(),
            agree.detail()
        ),
        elapsed,
    );
    assert_budget("criterion 9", elapsed, Duration::from_secs(60));
}

#[test]
fn c10_oracle_agreement() {
    let t = Instant::now();
    let results = run_suite("oracle", 2024, 300).unwrap();
    let elapsed = t.elapsed();
    let prop = find(&results, "divfree-vs-leibniz");
    report(
        "10 (division-free vs Leibniz oracle, 300 trials n<=5)",
        prop.passed() && prop.total == 300,
        &prop.detail(),
        elapsed,
    );
    assert_budget("criterion 10", elapsed, Duration::from_secs(30));
}

#[test]
fn c11_determinism() {
    let t = Instant::now();
    let bin = env!("CARGO_BIN_EXE_studydet");
    let run = || {
        let out = std::process::Command::new(bin)
            .args([
                "verify",
                "--suite",
                "all",
                "--seed",
                "42",
                "--trials",
                "50",
                "--output",
                "json",
            ])
            .output()
            .expect("binary runs");
        assert!(
            out.status.success(),
            "verify exited nonzero: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        out.stdout
    };
    let first = run();
    let second = run();
    let elapsed = t.elapsed();
    report(
        "11 (byte-identical JSON across two verify runs)",
        first == second && !first.is_empty(),
        &format!("{} bytes", first.len()),
        elapsed,
    );
}
