//! One PASS/FAIL line per acceptance criterion. Run with
//! `cargo test -p singlab --test acceptance -- --nocapture`.

use singlab::verify::{self, CriterionResult};

fn report(r: CriterionResult) {
    println!("{}", r.line());
    assert!(r.passed(), "{}", r.line());
}

#[test]
fn criterion_1_brieskorn() {
    report(verify::brieskorn());
}

#[test]
fn criterion_2_weighted_homogeneous_pg() {
    report(verify::weighted_homogeneous_pg());
}

#[test]
fn criterion_3_elliptic_sequences() {
    report(verify::elliptic_sequences());
}

#[test]
fn criterion_4_classification() {
    report(verify::classification());
}

#[test]
fn criterion_5_ideal_numerics() {
    report(verify::ideal_numerics());
}

#[test]
fn criterion_6_hilbert_data() {
    report(verify::hilbert_data());
}

#[test]
fn criterion_7_artinian_colengths() {
    report(verify::artinian_colengths());
}

#[test]
fn criterion_8_property_suites() {
    report(verify::property_suites());
}
