//! Hopf algebra axioms of the cotensor algebra, and the product against an
//! independent enumeration of merge patterns.

mod common;

use common::{antipode_law, letters, words_up_to};
use qqsa::cartan::{CartanDatum, LatticeVector, ParamMatrix};
use qqsa::grouplike::GroupElement;
use qqsa::qqsa::{Algebra, Element, Letter, Tensor, Word};
use qqsa::scalars::{Field, Scalar};

fn algebra(name: &str, with_v: bool) -> Algebra<Scalar> {
    let d = CartanDatum::named(name).unwrap();
    let p = ParamMatrix::symbolic(&d);
    let lam = with_v.then(|| d.weight_from_labels(&vec![1; d.rank()]).unwrap());
    Algebra::new(&p, lam).unwrap()
}

fn tails(alg: &Algebra<Scalar>) -> Vec<GroupElement> {
    let g = alg.group();
    vec![g.identity(), g.k(0), g.inv(&g.k_prime(alg.rank() - 1))]
}

/// Merge patterns as explicit step sequences: 0 takes from x, 1 from y,
/// 2 contracts an `E_k` of x with an `F_k` of y.
fn oracle_product(alg: &Algebra<Scalar>, x: &Word, y: &Word) -> Element<Scalar> {
    let g = alg.group();
    let (m, p) = (x.len(), y.len());
    let mut out = Element::zero();
    let mut stack: Vec<Vec<u8>> = vec![vec![]];
    while let Some(steps) = stack.pop() {
        let used_x = steps.iter().filter(|&&s| s != 1).count();
        let used_y = steps.iter().filter(|&&s| s != 0).count();
        if used_x == m && used_y == p {
            let mut letters = Vec::new();
            let mut coeff = Scalar::one();
            let (mut i, mut j) = (0, 0);
            for &s in &steps {
                // group of the x letters not yet placed, times the x tail
                let rest = |from: usize| g.mul(&alg.letters_grading(&x.letters[from..]), &x.tail);
                match s {
                    0 => {
                        letters.push(x.letters[i]);
                        i += 1;
                    }
                    1 => {
                        letters.push(y.letters[j]);
                        coeff = coeff.mul(&alg.character(&y.letters[j]).eval(&rest(i)));
                        j += 1;
                    }
                    _ => {
                        let Letter::E(k) = x.letters[i] else { unreachable!() };
                        letters.push(Letter::Xi(k));
                        let f = alg.character(&y.letters[j]).eval(&rest(i + 1));
                        coeff = coeff.mul(alg.c(k as usize)).mul(&f);
                        i += 1;
                        j += 1;
                    }
                }
            }
            out.add_term(Word::new(&letters, g.mul(&x.tail, &y.tail)), coeff);
            continue;
        }
        if used_x < m {
            stack.push([steps.clone(), vec![0]].concat());
        }
        if used_y < p {
            stack.push([steps.clone(), vec![1]].concat());
        }
        if used_x < m && used_y < p {
            if let (Letter::E(a), Letter::F(b)) = (x.letters[used_x], y.letters[used_y]) {
                if a == b {
                    stack.push([steps.clone(), vec![2]].concat());
                }
            }
        }
    }
    out
}

#[test]
fn product_matches_merge_enumeration() {
    let alg = algebra("A2", true);
    let g = alg.group();
    let xs = [
        Word::new(&[Letter::E(0), Letter::E(1)], g.k(1)),
        Word::new(&[Letter::E(0), Letter::V], g.identity()),
        Word::new(&[Letter::Xi(1), Letter::E(0)], g.k_prime(0)),
    ];
    let ys = [
        Word::new(&[Letter::F(0), Letter::F(1)], g.identity()),
        Word::new(&[Letter::F(0)], g.k(0)),
        Word::new(&[Letter::V, Letter::F(0), Letter::E(1)], g.k_prime(1)),
    ];
    for x in &xs {
        for y in &ys {
            let fast = alg.mul(&Element::from_word(x.clone()), &Element::from_word(y.clone()));
            assert_eq!(fast, oracle_product(&alg, x, y), "{} * {}", alg.display_word(x), alg.display_word(y));
        }
    }
}

#[test]
fn commutation_with_group_likes() {
    let alg = algebra("A2", false);
    let g = alg.group();
    let k = alg.group_element(g.k(0));
    let kinv = alg.group_element(g.inv(&g.k(0)));
    let e2 = alg.letter(Letter::E(1), g.identity());
    let lhs = alg.mul_all(&[&k, &e2, &kinv]);
    assert_eq!(lhs, e2.scale(alg.q(0, 1)));
}

#[test]
fn coassociativity_on_short_words() {
    for (name, v) in [("A2", true), ("B2", false)] {
        let alg = algebra(name, v);
        for t in tails(&alg) {
            for w in words_up_to(&alg, 3, &t).into_iter().filter(|w| w.len() <= 4) {
                let d = alg.coproduct(&Element::from_word(w));
                assert_eq!(alg.coproduct_at(&d, 0), alg.coproduct_at(&d, 1));
            }
        }
        let g = alg.group();
        let long = Word::new(&[Letter::E(0), Letter::F(1), Letter::Xi(0), Letter::E(1)], g.k(1));
        let d = alg.coproduct(&Element::from_word(long));
        assert_eq!(alg.coproduct_at(&d, 0), alg.coproduct_at(&d, 1));
    }
}

fn letter_elements(alg: &Algebra<Scalar>) -> Vec<Element<Scalar>> {
    let ts = tails(alg);
    letters(alg)
        .into_iter()
        .enumerate()
        .map(|(k, l)| alg.letter(l, ts[k % ts.len()].clone()))
        .collect()
}

#[test]
fn associativity_and_bialgebra_on_letter_triples() {
    let alg = algebra("A2", true);
    let ls = letter_elements(&alg);
    for a in &ls {
        for b in &ls {
            let ab = alg.mul(a, b);
            let lhs = alg.coproduct(&ab);
            let rhs = alg.tensor_mul(&alg.coproduct(a), &alg.coproduct(b));
            assert!(lhs.sub(&rhs).is_zero());
            for c in &ls {
                assert_eq!(alg.mul(&ab, c), alg.mul(a, &alg.mul(b, c)));
            }
        }
    }
}

#[test]
fn antipode_on_words_up_to_three() {
    let alg = algebra("A2", false);
    let t = alg.group().k_prime(0);
    for w in words_up_to(&alg, 2, &t) {
        assert!(antipode_law(&alg, &Element::from_word(w.clone())), "{}", alg.display_word(&w));
    }
    let g = alg.group();
    for w in [
        Word::new(&[Letter::E(0), Letter::F(0), Letter::E(1)], g.identity()),
        Word::new(&[Letter::F(1), Letter::Xi(0), Letter::E(0)], g.k(1)),
    ] {
        assert!(antipode_law(&alg, &Element::from_word(w)));
    }
}

#[test]
fn coactions_are_coproduct_components() {
    let alg = algebra("A1", true);
    let g = alg.group();
    let x = Element::from_word(Word::new(&[Letter::F(0), Letter::V], g.k(0)));
    let left = alg.left_coaction(&x);
    let d = alg.coproduct(&x);
    let first: Tensor<Scalar> = {
        let mut t = Tensor::zero();
        for (k, c) in d.terms().filter(|(k, _)| k[0].is_empty()) {
            t.add_term(k.clone(), c.clone());
        }
        t
    };
    assert_eq!(left, first);
    let lam = alg.lambda().unwrap().clone();
    assert_eq!(
        alg.weight(&Word::new(&[Letter::F(0), Letter::V], g.identity())),
        lam.sub(&LatticeVector::from_ints(&[1]))
    );
}
