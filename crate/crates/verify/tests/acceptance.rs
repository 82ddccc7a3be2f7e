//! One test per acceptance criterion. Each writes its PASS/FAIL line to
//! stderr, which the test harness does not capture; details are printed to
//! stdout and shown on failure or with `--nocapture`.

use std::io::Write as _;
use std::time::{Duration, Instant};

use ctdesign::reproduce::{run_criterion, CriterionResult};

fn criterion(id: u8, budget: Duration) {
    let start = Instant::now();
    let result: CriterionResult = run_criterion(id);
    let elapsed = start.elapsed();
    let within = if elapsed <= budget { "within" } else { "OVER" };
    let _ = writeln!(
        std::io::stderr().lock(),
        "{}  [{elapsed:.2?}, {within} {budget:?}]",
        result.line()
    );
    for d in &result.details {
        println!("        {d}");
    }
    for a in &result.audits {
        println!("        {} {}: claimed {}, recomputed {}", a.status, a.id, a.claimed, a.recomputed);
    }
    assert!(result.passed(), "criterion {id} failed");
    assert!(elapsed <= budget, "criterion {id} took {elapsed:.2?}, budget {budget:.2?}");
}

#[test]
fn criterion_01_fano_plane() {
    criterion(1, Duration::from_secs(1));
}

#[test]
fn criterion_02_pg23_lines() {
    criterion(2, Duration::from_secs(1));
}

#[test]
fn criterion_03_witt24_octads() {
    criterion(3, Duration::from_secs(60));
}

#[test]
fn criterion_04_witt23() {
    criterion(4, Duration::from_secs(60));
}

#[test]
fn criterion_05_witt22_not_completely_regular() {
    criterion(5, Duration::from_secs(30));
}

#[test]
fn criterion_06_biplane() {
    criterion(6, Duration::from_secs(5));
}

#[test]
fn criterion_07_m11_on_twelve_points() {
    criterion(7, Duration::from_secs(5));
}

#[test]
fn criterion_08_inversive_plane() {
    criterion(8, Duration::from_secs(5));
}

#[test]
fn criterion_09_ag24_lines() {
    criterion(9, Duration::from_secs(5));
}

#[test]
fn criterion_10_screening() {
    criterion(10, Duration::from_secs(1));
}

#[test]
fn criterion_11_property_suites() {
    criterion(11, Duration::from_secs(120));
}
