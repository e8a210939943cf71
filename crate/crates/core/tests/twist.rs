//! Cocycle twists between the tied and one-parameter structures.

use qqsa::cartan::{CartanDatum, ParamMatrix};
use qqsa::grouplike::GroupElement;
use qqsa::qqsa::{Element, Letter, Tensor, Word};
use qqsa::scalars::{Field, Scalar};
use qqsa::twist::TwistContext;
use qqsa::uq::{psi_gen, Gen, JReducer, RelationStatus};

fn ctx(name: &str) -> TwistContext<Scalar> {
    let d = CartanDatum::named(name).unwrap();
    TwistContext::new(&ParamMatrix::tied(&d), &ParamMatrix::one_parameter(&d)).unwrap()
}

fn letters(n: usize) -> Vec<Letter> {
    let mut out = Vec::new();
    for i in 0..n as u8 {
        out.extend([Letter::E(i), Letter::F(i), Letter::Xi(i)]);
    }
    out
}

fn tails(c: &TwistContext<Scalar>) -> Vec<GroupElement> {
    let g = c.algebra().group();
    let mut out = vec![g.identity()];
    for i in 0..c.algebra().rank() {
        out.push(g.k(i));
        out.push(g.inv(&g.k_prime(i)));
    }
    out
}

fn sample_words(c: &TwistContext<Scalar>) -> Vec<Element<Scalar>> {
    let n = c.algebra().rank();
    let ls = letters(n);
    let ts = tails(c);
    let mut out = Vec::new();
    for t in &ts {
        out.push(c.algebra().group_element(t.clone()));
        for a in &ls {
            out.push(c.algebra().letter(*a, t.clone()));
        }
    }
    for a in &ls {
        for b in &ls {
            out.push(Element::from_word(Word::new(&[*a, *b], ts[1].clone())));
        }
    }
    out
}

fn phi_tensor(c: &TwistContext<Scalar>, t: &Tensor<Scalar>) -> Tensor<Scalar> {
    let mut out = Tensor::zero();
    for (slots, coeff) in t.terms() {
        let f = slots.iter().fold(coeff.clone(), |acc, w| acc.mul(&c.phi_factor(w)));
        out.add_term(slots.clone(), f);
    }
    out
}

#[test]
fn twisted_action_gives_hatted_constants() {
    for name in ["A2", "B2"] {
        let c = ctx(name);
        let g = c.algebra().group();
        let n = c.algebra().rank();
        for i in 0..n {
            for j in 0..n {
                let h = c.hat().q(i, j).clone();
                let hji = c.hat().q(j, i).clone();
                assert_eq!(c.twisted_action(&g.k(i), &Letter::E(j as u8)), h);
                assert_eq!(c.twisted_action(&g.k_prime(i), &Letter::E(j as u8)), hji.inv().unwrap());
                assert_eq!(c.twisted_action(&g.k(i), &Letter::F(j as u8)), h.inv().unwrap());
                assert_eq!(c.twisted_action(&g.k_prime(i), &Letter::F(j as u8)), hji);
                assert!(c.twisted_action(&g.k(i), &Letter::Xi(j as u8)).is_one());
                assert!(c.twisted_action(&g.k_prime(i), &Letter::Xi(j as u8)).is_one());
            }
        }
    }
}

#[test]
fn trivial_twist_is_the_identity() {
    let d = CartanDatum::named("A2").unwrap();
    let q = ParamMatrix::one_parameter(&d);
    let c: TwistContext<Scalar> = TwistContext::new(&q, &q).unwrap();
    for x in sample_words(&c) {
        for y in sample_words(&c).iter().take(12) {
            assert_eq!(c.twisted_product(&x, y), c.algebra().mul(&x, y));
        }
        assert_eq!(c.phi(&x), x);
    }
}

#[test]
fn gauge_mismatch_is_rejected() {
    let d = CartanDatum::named("A2").unwrap();
    let q = ParamMatrix::one_parameter(&d);
    let a2 = CartanDatum::named("B2").unwrap();
    assert!(TwistContext::<Scalar>::new(&q, &ParamMatrix::one_parameter(&a2)).is_err());
}

#[test]
fn twisted_product_is_associative_on_letters() {
    let c = ctx("A2");
    let g = c.algebra().group();
    let ls = letters(2);
    let t = [g.k(1), g.inv(&g.k_prime(0))];
    for (ia, a) in ls.iter().enumerate() {
        for b in &ls {
            for z in &ls {
                let x = c.algebra().letter(*a, t[ia % 2].clone());
                let y = c.algebra().letter(*b, g.identity());
                let w = c.algebra().letter(*z, t[1].clone());
                let l = c.twisted_product(&c.twisted_product(&x, &y), &w);
                let r = c.twisted_product(&x, &c.twisted_product(&y, &w));
                assert_eq!(l, r, "{a} {b} {z}");
            }
        }
    }
}

#[test]
fn phi_intertwines_products_and_coproducts() {
    for name in ["A2", "B2"] {
        let c = ctx(name);
        let ws = sample_words(&c);
        for x in &ws {
            for y in ws.iter().step_by(3) {
                let l = c.phi(&c.twisted_product(x, y));
                let r = c.hat().mul(&c.phi(x), &c.phi(y));
                assert_eq!(l, r, "{name}: {} , {}", c.algebra().display(x), c.algebra().display(y));
            }
            let dl = c.algebra().coproduct(&c.phi(x));
            let dr = phi_tensor(&c, &c.algebra().coproduct(x));
            assert_eq!(dl, dr);
            assert_eq!(c.phi_inverse(&c.phi(x)).unwrap(), *x);
        }
    }
}

#[test]
fn phi_on_small_words() {
    let c = ctx("A2");
    let g = c.algebra().group();
    for t in tails(&c) {
        let k = c.algebra().group_element(t.clone());
        assert_eq!(c.phi(&k), k);
        for i in 0..2 {
            let e = c.algebra().letter(Letter::E(i as u8), t.clone());
            let f = c.sigma().eval(&g.k(i), &g.inv(&t));
            assert_eq!(c.phi(&e), e.scale(&f));
        }
    }
    let w = Element::from_word(Word::new(&[Letter::E(0), Letter::E(1)], g.identity()));
    let f = c.sigma().eval(&g.k(0), &g.inv(&g.k(1)));
    assert_eq!(c.phi(&w), w.scale(&f));
    assert!(!f.is_one());
}

#[test]
fn twisted_group_commutation() {
    let c = ctx("B2");
    let alg = c.algebra();
    for i in 0..2 {
        for j in 0..2 {
            let w = psi_gen(alg, Gen::Omega(i, 1)).unwrap();
            let e = psi_gen(alg, Gen::E(j)).unwrap();
            let l = c.twisted_product(&w, &e);
            let r = c.twisted_product(&e, &w).scale(c.hat().q(i, j));
            assert_eq!(l, r);
        }
    }
}

#[test]
fn alpha_consistency_on_generator_pairs() {
    for name in ["A2", "B2"] {
        let c = ctx(name);
        let ts = tails(&c);
        for i in 0..2 {
            for j in 0..2 {
                for k in &ts {
                    for kp in &ts {
                        let (l, r) = c.alpha_pair(i, j, k, kp).unwrap();
                        assert_eq!(l, r);
                        assert_eq!(l.is_zero(), i != j);
                    }
                }
            }
        }
    }
}

#[test]
fn twisted_relations_hold() {
    let reducer = JReducer::new(4);
    for name in ["A2", "B2"] {
        let c = ctx(name);
        for (id, status) in c.verify_twisted_relations(&reducer).unwrap() {
            assert!(
                matches!(status, RelationStatus::Zero | RelationStatus::ZeroModJ { .. }),
                "{name} {id}: {status:?}"
            );
        }
    }
}
