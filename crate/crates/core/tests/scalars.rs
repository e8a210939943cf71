//! Property suites for the scalar kernel.

mod common;

use common::FIELD_CASES;

#[test]
fn symbolic_field_axioms() {
    common::symbolic_field_axioms(FIELD_CASES).unwrap();
}

#[test]
fn cyclotomic_field_axioms() {
    common::cyclotomic_field_axioms(FIELD_CASES).unwrap();
}

#[test]
fn specialization_is_a_homomorphism() {
    common::specialization_homomorphism(FIELD_CASES).unwrap();
}

#[test]
fn q_binomial_pascal_up_to_twelve() {
    common::q_binomial_recurrences(12).unwrap();
}
