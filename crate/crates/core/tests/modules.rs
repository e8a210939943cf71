//! Highest-weight modules: dimensions, highest-weight axioms, relation
//! matrices and the root-of-unity alcove.

use num_rational::Rational64;
use qqsa::cartan::{CartanDatum, LatticeVector, ParamMatrix};
use qqsa::qqsa::{Element, Letter, Word};
use qqsa::repr::{alcove_check, coinvariant_project, is_right_coinvariant, root_of_unity_module, ModuleSetup};
use qqsa::scalars::{Cyclo, Field, Scalar};
use qqsa::uq::Gen;

/// Weyl dimension `∏_{α>0} (λ+ρ, α)/(ρ, α)`, with the positive roots
/// listed by hand.
fn weyl_dimension(datum: &CartanDatum, lambda: &LatticeVector, roots: &[&[i64]], rho: &[i64]) -> i64 {
    let rho = datum.weight_from_labels(rho).unwrap();
    let shifted = lambda.add(&rho);
    let mut acc = Rational64::from_integer(1);
    for r in roots {
        let a = LatticeVector::from_ints(r);
        acc *= datum.form(&shifted, &a) / datum.form(&rho, &a);
    }
    assert!(acc.is_integer());
    acc.to_integer()
}

fn setup(name: &str, labels: &[i64], symbolic: bool) -> ModuleSetup<Scalar> {
    let d = CartanDatum::named(name).unwrap();
    let lambda = d.weight_from_labels(labels).unwrap();
    let params = if symbolic {
        ParamMatrix::symbolic(&d)
    } else {
        ParamMatrix::numeric_generic(&d, CartanDatum::denominator(&[&lambda])).unwrap()
    };
    ModuleSetup::new(&params, lambda, 12).unwrap()
}

#[test]
fn a1_dimensions_and_thresholds() {
    let d = CartanDatum::named("A1").unwrap();
    for m in 0..=5 {
        let s = setup("A1", &[m], true);
        let t = s.lowering_closure().unwrap();
        let oracle = weyl_dimension(&d, s.lambda(), &[&[1]], &[1]);
        assert_eq!(t.dim() as i64, oracle);
        assert_eq!(oracle, m + 1);
        assert!(t.dims().iter().all(|&k| k == 1));
        assert_eq!(s.nilpotency_threshold(0).unwrap(), s.expected_threshold(0));
        for r in 1..=(m as u32 + 1) {
            let mut x = s.highest_vector();
            for _ in 0..r {
                x = s.act(Gen::F(0), &x).unwrap();
            }
            assert_eq!(x, s.lowering_power_closed_form(0, r).unwrap(), "m={m} r={r}");
        }
    }
}

#[test]
fn highest_weight_axioms() {
    for (name, labels) in [("A1", vec![2]), ("A2", vec![1, 1]), ("B2", vec![1, 0])] {
        let s = setup(name, &labels, true);
        let alg = s.algebra();
        let v = s.highest_vector();
        let n = alg.rank();
        for i in 0..n {
            let ai = LatticeVector::simple(n, i);
            assert!(s.act(Gen::E(i), &v).unwrap().is_zero());
            let w = alg.params().q_pairing_in::<Scalar>(&ai, s.lambda()).unwrap();
            let wp = alg.params().q_pairing_in::<Scalar>(s.lambda(), &ai).unwrap();
            assert_eq!(s.act(Gen::Omega(i, 1), &v).unwrap(), v.scale(&w));
            assert_eq!(s.act(Gen::OmegaPrime(i, 1), &v).unwrap(), v.scale(&wp.inv().unwrap()));
            let f = Element::term(Word::new(&[Letter::F(i as u8), Letter::V], alg.group().identity()), wp.inv().unwrap().sub(&w));
            assert_eq!(s.act(Gen::F(i), &v).unwrap(), f);
        }
    }
}

#[test]
fn rank_two_dimensions() {
    let a2 = CartanDatum::named("A2").unwrap();
    let b2 = CartanDatum::named("B2").unwrap();
    let a2_roots: [&[i64]; 3] = [&[1, 0], &[0, 1], &[1, 1]];
    let b2_roots: [&[i64]; 4] = [&[1, 0], &[0, 1], &[1, 1], &[1, 2]];
    for (name, labels, expect) in [("A2", vec![1, 0], 3), ("A2", vec![0, 1], 3), ("A2", vec![1, 1], 8), ("B2", vec![1, 0], 5)] {
        let s = setup(name, &labels, false);
        let t = s.lowering_closure().unwrap();
        let (d, roots): (&CartanDatum, &[&[i64]]) = if name == "A2" { (&a2, &a2_roots) } else { (&b2, &b2_roots) };
        assert_eq!(weyl_dimension(d, s.lambda(), roots, &[1, 1]), expect);
        assert_eq!(t.dim() as i64, expect, "{name} {labels:?}");
        for i in 0..2 {
            assert_eq!(s.nilpotency_threshold(i).unwrap(), s.expected_threshold(i));
        }
        for sp in &t.spaces {
            for b in &sp.basis {
                assert!(b.terms().all(|(w, _)| w.letters.iter().filter(|l| **l == Letter::V).count() == 1));
            }
        }
    }
    let t = setup("A2", &[1, 0], false).lowering_closure().unwrap();
    let n = 2;
    let l = t.spaces[0].weight.clone();
    let a1 = LatticeVector::simple(n, 0);
    let a2v = LatticeVector::simple(n, 1);
    let weights: Vec<_> = t.spaces.iter().map(|s| s.weight.clone()).collect();
    assert_eq!(weights, vec![l.clone(), l.sub(&a1), l.sub(&a1).sub(&a2v)]);
}

#[test]
fn relations_hold_as_matrices() {
    for (name, labels, symbolic) in [("A1", vec![1], true), ("A1", vec![3], true), ("A2", vec![1, 0], false), ("A2", vec![1, 1], false), ("B2", vec![1, 0], false)] {
        let s = setup(name, &labels, symbolic);
        let t = s.lowering_closure().unwrap();
        for (id, ok) in s.check_matrix_relations(&t).unwrap() {
            assert!(ok, "{name} {labels:?} {id}");
        }
        let n = s.algebra().rank();
        for i in 0..n {
            let w = s.action_matrix(&t, Gen::Omega(i, 1)).unwrap();
            let mut k = 0;
            for sp in &t.spaces {
                let ev = s.omega_eigenvalue(i, &sp.weight).unwrap();
                for _ in &sp.basis {
                    for c in 0..t.dim() {
                        let expect = if c == k { ev.clone() } else { Scalar::zero() };
                        assert_eq!(*w.get(k, c), expect);
                    }
                    k += 1;
                }
            }
            let e = s.action_matrix(&t, Gen::E(i)).unwrap();
            for r in 0..t.dim() {
                assert!(e.get(r, 0).is_zero());
            }
        }
    }
}

#[test]
fn a1_two_dimensional_module_by_hand() {
    let s = setup("A1", &[1], true);
    let p = s.algebra().params();
    let a = LatticeVector::simple(1, 0);
    let q_al = p.q_pairing_in::<Scalar>(&a, s.lambda()).unwrap();
    let q_la = p.q_pairing_in::<Scalar>(s.lambda(), &a).unwrap();
    let v = s.highest_vector();
    let ef = s.act(Gen::E(0), &s.act(Gen::F(0), &v).unwrap()).unwrap();
    let c = s.algebra().c(0).clone();
    assert_eq!(ef, v.scale(&c.mul(&q_al.sub(&q_la.inv().unwrap()))));
    let qii = s.algebra().q(0, 0).clone();
    assert_eq!(q_al.mul(&q_la), qii);
}

#[test]
fn coinvariant_projection() {
    let s = setup("A1", &[1], true);
    let alg = s.algebra();
    let g = alg.group();
    let k = alg.group_element(g.k(0));
    assert_eq!(coinvariant_project(alg, &k), alg.one());
    let v = alg.letter(Letter::V, g.k_prime(0));
    let f = Element::from_word(Word::new(&[Letter::F(0), Letter::V], g.k(0)));
    for x in [v, f, s.act(Gen::F(0), &s.highest_vector()).unwrap()] {
        let r = coinvariant_project(alg, &x);
        assert!(is_right_coinvariant(alg, &r));
        assert_eq!(coinvariant_project(alg, &r), r);
    }
    assert!(is_right_coinvariant(alg, &s.highest_vector()));
}

#[test]
fn alcove_at_order_five() {
    let d = CartanDatum::named("A1").unwrap();
    for m in 0..=6 {
        let l = d.weight_from_labels(&[m]).unwrap();
        assert_eq!(alcove_check(&d, &l, 5).unwrap(), m + 1 < 5);
    }
    assert!(alcove_check(&d, &LatticeVector::zero(1), 4).is_err());
    let g2 = CartanDatum::named("G2").unwrap();
    assert!(alcove_check(&g2, &LatticeVector::zero(2), 9).is_err());
    assert!(alcove_check(&g2, &LatticeVector::zero(2), 7).unwrap());
    for m in 0..=3 {
        let (s, t) = root_of_unity_module::<Cyclo>(&d, &[m], 5).unwrap();
        assert_eq!(t.dim() as i64, m + 1);
        for (id, ok) in s.check_matrix_relations(&t).unwrap() {
            assert!(ok, "m={m} {id}");
        }
    }
    assert!(root_of_unity_module::<Cyclo>(&d, &[4], 5).is_err());
}
