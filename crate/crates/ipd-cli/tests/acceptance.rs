//! One line per acceptance criterion: `criterion N: PASS|FAIL ...`.

use std::time::{Duration, Instant};

use ipd_cli::verify::*;

fn line(n: usize, what: &str, report: &Report) {
    let verdict = if report.passed() { "PASS" } else { "FAIL" };
    println!("criterion {n}: {verdict} {what} ({} checks, {} failures)", report.checks, report.failures.len());
    for f in report.failures.iter().take(10) {
        println!("    {f}");
    }
    assert!(report.passed(), "criterion {n} failed");
}

#[test]
fn criterion_01_figure_counts() {
    let start = Instant::now();
    let report = figure_counts();
    let elapsed = start.elapsed();
    line(1, &format!("H_T 4 dreams, K_T 6 dreams in {elapsed:?}"), &report);
    assert!(elapsed < Duration::from_secs(1));
}

#[test]
fn criterion_02_equivariant_expansion() {
    line(2, "[X(2)] + [X(1,1)] + (y1 - y4)[X(2,1)]", &figure_ht_expansion());
}

#[test]
fn criterion_03_k_expansion() {
    line(3, "[X(2)] + [X(1,1)] - [X(1)]", &figure_k_expansion());
}

/// Fails: the reference list disagrees with the tile weights, see the README.
#[test]
fn criterion_04_kt_weights_reference() {
    line(4, "K_T weight multiset of the six dreams, reference list", &figure_kt_weights(reference_kt_weights()));
}

#[test]
fn criterion_04_kt_weights_computed() {
    let report = figure_kt_weights(computed_kt_weights());
    println!("criterion 4 (computed multiset): {}", if report.passed() { "PASS" } else { "FAIL" });
    assert!(report.passed());
}

#[test]
fn criterion_05_specialization() {
    line(5, "K_T specializes to K and H_T, n <= 5", &specialization(5));
}

#[test]
fn criterion_06_fusing_and_degree_laws() {
    line(6, "fusing and degree laws, n <= 5", &fusing_laws(5));
}

#[test]
fn criterion_07_oracle_equivalence() {
    line(7, "slice recursion equals brute force, n <= 4, all modes", &oracle(4));
}

#[test]
fn criterion_08_richardson() {
    line(8, "exact Richardson H coefficients equal LR numbers and puzzle counts, n <= 6", &richardson(6));
}

#[test]
fn criterion_09_puzzle_bijection() {
    line(9, "dream/puzzle round trip and weights on one-letter dreams, n <= 5", &bijection(5));
}

#[test]
fn criterion_10_shifting() {
    line(10, "branch points, K inclusion-exclusion, T-fixed points, n <= 5", &shifting(5));
}

#[test]
fn criterion_11_transition() {
    line(11, "H transition identity for every safe shift, n <= 5", &transition(5));
}
