//! Defining relations under the realization map, and adjoint powers.

use qqsa::cartan::{CartanDatum, ParamMatrix};
use qqsa::qqsa::{Algebra, Element, Letter, Word};
use qqsa::scalars::{Field, Scalar};
use qqsa::uq::{
    ad_closed_form, ad_power, check_relation, letter_power_closed_form, psi_gen, relation_residuals, Gen,
    JOutcome, JReducer, Relation, RelationId, RelationStatus, Side,
};

fn symbolic(name: &str) -> Algebra<Scalar> {
    let d = CartanDatum::named(name).unwrap();
    Algebra::new(&ParamMatrix::symbolic(&d), None).unwrap()
}

#[test]
fn all_relations_hold_for_rank_two_types() {
    let reducer = JReducer::new(4);
    for name in ["A1", "A1xA1", "A2", "B2", "G2"] {
        let alg = symbolic(name);
        for id in RelationId::all(alg.rank()) {
            let status = check_relation(&alg, id, &reducer).unwrap();
            let expect_literal = !(id.rel == Relation::R5 && id.i == id.j);
            if expect_literal {
                assert_eq!(status, RelationStatus::Zero, "{name} {id}");
            } else {
                assert_eq!(status, RelationStatus::ZeroModJ { bound: 4 }, "{name} {id}");
            }
        }
    }
}

#[test]
fn r5_residual_has_the_expected_shape() {
    let alg = symbolic("A2");
    let g = alg.group();
    let r = relation_residuals(&alg, RelationId { rel: Relation::R5, i: 0, j: 0 }).unwrap();
    let c = alg.c(0).clone();
    let expect = Element::term(Word::new(&[Letter::Xi(0)], g.k_prime(0)), c.clone())
        .sub(&alg.group_element(g.k(0)).scale(&c))
        .add(&alg.group_element(g.k_prime(0)).scale(&c));
    assert_eq!(r[0], expect);
}

#[test]
fn group_difference_is_not_in_the_ideal() {
    let alg = symbolic("A1");
    let g = alg.group();
    let x = alg.group_element(g.k(0)).sub(&alg.group_element(g.k_prime(0)));
    assert!(matches!(JReducer::new(4).reduce(&alg, &x).unwrap(), JOutcome::NonZero { .. }));
    assert!(matches!(JReducer::new(4).reduce(&alg, &Element::zero()).unwrap(), JOutcome::Zero { .. }));
}

#[test]
fn adjoint_powers_match_closed_forms() {
    for name in ["A2", "B2", "G2"] {
        let alg = symbolic(name);
        let d = alg.params().datum().clone();
        for i in 0..2 {
            for j in 0..2 {
                if i == j {
                    continue;
                }
                let top = (1 - d.a(i, j)) as u32;
                for s in 1..=top {
                    for side in [Side::Left, Side::Right] {
                        let got = ad_power(&alg, side, i, j, s).unwrap();
                        assert_eq!(got, ad_closed_form(&alg, side, i, j, s).unwrap(), "{name} {side:?} {i}{j} s={s}");
                        if s == top {
                            assert!(got.is_zero());
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn first_adjoint_step_values() {
    let alg = symbolic("A2");
    let g = alg.group();
    let l = ad_power(&alg, Side::Left, 0, 1, 1).unwrap();
    let c = Scalar::one().sub(&alg.q(0, 1).mul(alg.q(1, 0)));
    assert_eq!(l, Element::term(Word::new(&[Letter::E(0), Letter::E(1)], g.identity()), c));
    let r = ad_power(&alg, Side::Right, 0, 1, 1).unwrap();
    let c = alg.q(0, 1).sub(&alg.q(1, 0).inv().unwrap());
    let tail = g.mul(&g.k_prime(0), &g.k_prime(1));
    assert_eq!(r, Element::term(Word::new(&[Letter::F(1), Letter::F(0)], tail), c));
}

#[test]
fn letter_powers() {
    let alg = symbolic("B2");
    for i in 0..2 {
        for r in 1..=4 {
            let e = alg.power(&psi_gen(&alg, Gen::E(i)).unwrap(), r);
            assert_eq!(e, letter_power_closed_form(&alg, Side::Left, i, r));
            let f = alg.power(&psi_gen(&alg, Gen::F(i)).unwrap(), r);
            assert_eq!(f, letter_power_closed_form(&alg, Side::Right, i, r));
        }
    }
}
