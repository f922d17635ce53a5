//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Run with `cargo test -p sectorial --test acceptance -- --nocapture`.

use sectorial::selftest::{self, CriterionReport};

fn check(r: CriterionReport) {
    println!("{r}");
    assert!(r.pass, "{r}");
}

#[test]
fn criterion_1_golden_form_value() {
    check(selftest::criterion_1());
}

#[test]
fn criterion_2_sharpness() {
    check(selftest::criterion_2());
}

#[test]
fn criterion_3_imaginary_part_bound() {
    check(selftest::criterion_3());
}

#[test]
fn criterion_4_angle_improvement() {
    check(selftest::criterion_4());
}

#[test]
fn criterion_5_resolvent_constant() {
    check(selftest::criterion_5());
}

#[test]
fn criterion_6_kato_bound() {
    check(selftest::criterion_6());
}

#[test]
fn criterion_7_interpolated_angles() {
    check(selftest::criterion_7());
}

#[test]
fn criterion_8_rational_calculus() {
    check(selftest::criterion_8());
}

#[test]
fn criterion_9_oracle_equivalence() {
    check(selftest::criterion_9());
}
