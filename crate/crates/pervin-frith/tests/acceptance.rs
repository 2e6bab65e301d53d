//! Acceptance battery: one test per criterion, each printing a verdict line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::time::{Duration, Instant};

use pervin_frith::suite::{run_criterion, run_suite, SuiteConfig};

fn check(id: &str, number: usize) {
    check_within(id, number, None);
}

/// Run one criterion at the acceptance bounds, print its verdict line, and
/// assert both the outcome and (when given) the time budget.
fn check_within(id: &str, number: usize, budget: Option<Duration>) {
    let cfg = SuiteConfig::default();
    let started = Instant::now();
    let outcome = run_criterion(id, &cfg).expect("criterion runs");
    let elapsed = started.elapsed();
    println!(
        "acceptance {number} {}: {}",
        outcome.title,
        if outcome.pass { "PASS" } else { "FAIL" }
    );
    assert!(
        outcome.pass,
        "criterion {id} failed: {}",
        serde_json::to_string_pretty(&outcome).unwrap()
    );
    if let Some(limit) = budget {
        assert!(
            elapsed < limit,
            "criterion {id} took {elapsed:?}, over the {limit:?} budget"
        );
    }
}

#[test]
fn acceptance_01_biframe_spectra() {
    check("c1", 1);
}

#[test]
fn acceptance_02_completeness_characterization() {
    check_within("c2", 2, Some(Duration::from_secs(60)));
}

#[test]
fn acceptance_03_duality_roundtrips() {
    check_within("c3", 3, Some(Duration::from_secs(60)));
}

#[test]
fn acceptance_04_compact_opens() {
    check("c4", 4);
}

#[test]
fn acceptance_05_stone_priestley() {
    check("c5", 5);
}

#[test]
fn acceptance_06_adjunction_battery() {
    check("c6", 6);
}

#[test]
fn acceptance_07_oracle_equivalences() {
    check("c7", 7);
}

#[test]
fn acceptance_08_td_recognition() {
    check("c8", 8);
}

#[test]
fn acceptance_09_degeneracies() {
    check("c9", 9);
}

#[test]
fn acceptance_10_determinism() {
    let cfg = SuiteConfig::default();
    let first = run_suite(&cfg, false).expect("suite runs").to_json();
    let second = run_suite(&cfg, false).expect("suite runs").to_json();
    let pass = first == second;
    println!(
        "acceptance 10 two suite runs are byte-identical: {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "suite reports differ between runs");
    check("c10", 10);
}
