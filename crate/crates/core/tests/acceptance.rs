//! Acceptance suite: the crate's seven headline guarantees, each checked
//! exactly (no tolerances) over its full stated range, with a wall-clock
//! budget per criterion. One pass/fail line is printed per criterion.
//!
//! Run with `cargo test -p cga-verma --test acceptance -- --nocapture` to
//! see the lines.

use std::time::{Duration, Instant};

use cga_verma::verify::{
    algebra_soundness, bilinear_form_checks, closed_form_agreement, kplus_kernel_anatomy,
    quotient_irreducibility, reference_action_equivalence, singular_grid, CriterionReport,
};

fn run(index: usize, budget: Duration, f: impl FnOnce() -> CriterionReport) {
    let start = Instant::now();
    let report = f();
    let elapsed = start.elapsed();
    let status = if report.pass { "PASS" } else { "FAIL" };
    println!(
        "{status} criterion {index} ({}) in {:.2}s — {}",
        report.name,
        elapsed.as_secs_f64(),
        report.details
    );
    assert!(report.pass, "criterion {index} failed: {}", report.details);
    assert!(
        elapsed <= budget,
        "criterion {index} exceeded its {:.0}s budget: took {:.2}s",
        budget.as_secs_f64(),
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_1_algebra_soundness() {
    run(1, Duration::from_secs(1), algebra_soundness);
}

#[test]
fn criterion_2_generator_action_cross_check() {
    // All 625 monomials with exponents <= 4, six closed-form actions each,
    // fully symbolic.
    run(2, Duration::from_secs(10), || {
        reference_action_equivalence(4)
    });
}

#[test]
fn criterion_3_singular_vector_classification_grid() {
    // p <= 6, |q| <= 3, over the full (d, θ, r) grid, in parallel.
    run(3, Duration::from_secs(60), || singular_grid(6, 3));
}

#[test]
fn criterion_4_closed_form_agreement() {
    run(4, Duration::from_secs(20), || closed_form_agreement(5));
}

#[test]
fn criterion_5_bilinear_form_checks() {
    run(5, Duration::from_secs(30), || bilinear_form_checks(200));
}

#[test]
fn criterion_6_quotient_irreducibility() {
    run(6, Duration::from_secs(120), || quotient_irreducibility(3));
}

#[test]
fn criterion_7_kplus_kernel_anatomy() {
    run(7, Duration::from_secs(15), || kplus_kernel_anatomy(6, 3));
}
