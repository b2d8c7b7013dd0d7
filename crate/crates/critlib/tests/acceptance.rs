//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Run with `cargo test --test acceptance -- --nocapture` to see the
//! lines even on success.

use critlib::chipfire::DEFAULT_GUARD;
use critlib::suite::{self, CheckResult};

fn assert_criterion(result: CheckResult) {
    let status = if result.passed { "PASS" } else { "FAIL" };
    println!("{status} {} ({})", result.id, result.name);
    if !result.passed {
        for line in &result.details {
            println!("    {line}");
        }
    }
    assert!(result.passed, "{} failed", result.id);
}

#[test]
fn criterion_01_minuscule_theorem() {
    assert_criterion(suite::criterion_01_minuscule_theorem(DEFAULT_GUARD));
}

#[test]
fn criterion_02_a4_golden() {
    assert_criterion(suite::criterion_02_a4_golden(DEFAULT_GUARD));
}

#[test]
fn criterion_03_e6_toppling_cycle() {
    assert_criterion(suite::criterion_03_e6_toppling_cycle(DEFAULT_GUARD));
}

#[test]
fn criterion_04_looping_sequences() {
    assert_criterion(suite::criterion_04_looping_sequences(DEFAULT_GUARD));
}

#[test]
fn criterion_05_sl2_critical_groups() {
    assert_criterion(suite::criterion_05_sl2_critical_groups(DEFAULT_GUARD));
}

#[test]
fn criterion_06_burning_equivalence() {
    assert_criterion(suite::criterion_06_burning_equivalence(DEFAULT_GUARD));
}

#[test]
fn criterion_07_superstable_energy() {
    assert_criterion(suite::criterion_07_superstable_energy(DEFAULT_GUARD));
}

#[test]
fn criterion_08_extended_cokernel() {
    assert_criterion(suite::criterion_08_extended_cokernel(DEFAULT_GUARD));
}

#[test]
fn criterion_09_rng_golden() {
    assert_criterion(suite::criterion_09_rng_golden(DEFAULT_GUARD));
}

#[test]
fn criterion_10_cayley_arborescences() {
    assert_criterion(suite::criterion_10_cayley_arborescences(DEFAULT_GUARD));
}

#[test]
fn criterion_11_property_suites() {
    assert_criterion(suite::criterion_11_property_suites(DEFAULT_GUARD));
}
