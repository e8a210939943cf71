//! Oracles and generators shared by the integration suites.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use qqsa::grouplike::GroupElement;
use qqsa::qqsa::{Algebra, Element, Letter, Word};
use qqsa::scalars::{q_binomial, q_int, Assignment, Cyclo, Field, LaurentPoly, Monomial, ParamVar, Scalar, SpecValue};

pub const FIELD_CASES: u32 = 1000;
const SEED: [u8; 32] = *b"qqsa-scalar-property-suite-seed!";

pub fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::from_seed(RngAlgorithm::ChaCha, &SEED),
    )
}

const VARS: [ParamVar; 3] = [ParamVar::Q(0, 0), ParamVar::Q(0, 1), ParamVar::Single];

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, 0usize..3, -2i64..=2, 0usize..3, -1i64..=1), 1..4).prop_map(|terms| {
        let mut p = LaurentPoly::zero();
        for (c, a, ea, b, eb) in terms {
            let m = Monomial::from_pairs([
                (VARS[a], Rational64::from_integer(ea)),
                (VARS[b], Rational64::from_integer(eb)),
            ]);
            p = p.add(&LaurentPoly::term(BigRational::from_integer(BigInt::from(c)), m));
        }
        p
    })
}

/// Quotients of small Laurent polynomials.
pub fn scalar() -> impl Strategy<Value = Scalar> {
    (poly(), poly()).prop_map(|(n, d)| {
        let n = Scalar::from_poly(n);
        if d.is_zero() {
            n
        } else {
            n.div(&Scalar::from_poly(d)).unwrap()
        }
    })
}

pub fn cyclo() -> impl Strategy<Value = Cyclo> {
    prop::collection::vec((-4i64..=4, 0i64..7), 1..4).prop_map(|terms| {
        terms.into_iter().fold(Cyclo::zero(), |acc, (c, k)| {
            acc.add(&Cyclo::zeta_power(7, k).mul(&Cyclo::from_int(c)))
        })
    })
}

pub fn check_axioms<F: Field + std::fmt::Debug>(a: &F, b: &F, c: &F) -> Result<(), TestCaseError> {
    prop_assert_eq!(a.add(b), b.add(a));
    prop_assert_eq!(a.mul(b), b.mul(a));
    prop_assert_eq!(a.add(&b.add(c)), a.add(b).add(c));
    prop_assert_eq!(a.mul(&b.mul(c)), a.mul(b).mul(c));
    prop_assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
    prop_assert_eq!(a.add(&F::zero()), a.clone());
    prop_assert_eq!(a.mul(&F::one()), a.clone());
    prop_assert!(a.add(&a.neg()).is_zero());
    prop_assert_eq!(a.sub(b), a.add(&b.neg()));
    if !a.is_zero() {
        prop_assert!(a.mul(&a.inv().unwrap()).is_one());
    } else {
        prop_assert!(a.inv().is_err());
    }
    Ok(())
}

pub fn symbolic_field_axioms(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&(scalar(), scalar(), scalar()), |(a, b, c)| check_axioms(&a, &b, &c))
        .map_err(|e| e.to_string())
}

pub fn cyclotomic_field_axioms(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&(cyclo(), cyclo(), cyclo()), |(a, b, c)| check_axioms(&a, &b, &c))
        .map_err(|e| e.to_string())
}

fn assignments() -> Vec<Assignment> {
    let r = |n: i64, d: i64| SpecValue::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)));
    vec![
        Assignment::new(1)
            .with(VARS[0], r(2, 1))
            .with(VARS[1], r(-3, 5))
            .with(VARS[2], r(7, 2)),
        Assignment::new(7)
            .with(VARS[0], SpecValue::ZetaPower(1))
            .with(VARS[1], SpecValue::ZetaPower(3))
            .with(VARS[2], SpecValue::ZetaPower(4)),
    ]
}

/// Sums, products, negatives and inverses commute with specialization
/// wherever both sides are defined.
pub fn specialization_homomorphism(cases: u32) -> Result<(), String> {
    let asg = assignments();
    runner(cases)
        .run(&(scalar(), scalar()), |(a, b)| {
            for s in &asg {
                let (Ok(x), Ok(y)) = (a.specialize(s), b.specialize(s)) else {
                    continue;
                };
                prop_assert_eq!(a.add(&b).specialize(s).unwrap(), x.add(&y));
                if let Ok(p) = a.mul(&b).specialize(s) {
                    prop_assert_eq!(p, x.mul(&y));
                }
                prop_assert_eq!(a.neg().specialize(s).unwrap(), x.neg());
                if !x.is_zero() {
                    if let Ok(i) = a.inv().unwrap().specialize(s) {
                        prop_assert_eq!(i, x.inv().unwrap());
                    }
                }
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// Both Pascal rules for `n ≤ max_n`, plus `(n)_v (v − 1) = v^n − 1`.
pub fn q_binomial_recurrences(max_n: u32) -> Result<(), String> {
    let v = Scalar::var(ParamVar::Single);
    let b = |n, k| q_binomial(n, k, &v).map_err(|e| e.to_string());
    let p = |e: u32| v.pow(i64::from(e)).map_err(|e| e.to_string());
    for n in 1..=max_n {
        for k in 1..n {
            let lhs = b(n, k)?;
            if lhs != p(n - k)?.mul(&b(n - 1, k - 1)?).add(&b(n - 1, k)?) {
                return Err(format!("first Pascal rule fails at n={n}, k={k}"));
            }
            if lhs != b(n - 1, k - 1)?.add(&p(k)?.mul(&b(n - 1, k)?)) {
                return Err(format!("second Pascal rule fails at n={n}, k={k}"));
            }
        }
        if !b(n, 0)?.is_one() || !b(n, n)?.is_one() || q_binomial(n, n + 1, &v).is_ok() {
            return Err(format!("boundary values fail at n={n}"));
        }
    }
    for n in 0..=max_n {
        if q_int(n, &v).mul(&v.sub(&Scalar::one())) != p(n)?.sub(&Scalar::one()) {
            return Err(format!("q-integer fails at n={n}"));
        }
    }
    Ok(())
}

/// Number of ways to write `beta` as an unordered sum of positive roots.
pub fn kostant(roots: &[Vec<i64>], beta: &[i64]) -> usize {
    fn go(roots: &[Vec<i64>], start: usize, rest: &mut Vec<i64>) -> usize {
        if rest.iter().all(|&x| x == 0) {
            return 1;
        }
        let mut count = 0;
        for k in start..roots.len() {
            if roots[k].iter().zip(rest.iter()).all(|(r, b)| r <= b) {
                for (b, r) in rest.iter_mut().zip(&roots[k]) {
                    *b -= r;
                }
                count += go(roots, k, rest);
                for (b, r) in rest.iter_mut().zip(&roots[k]) {
                    *b += r;
                }
            }
        }
        count
    }
    go(roots, 0, &mut beta.to_vec())
}

/// Nonnegative integer vectors of height `1..=height`.
pub fn vectors_up_to(rank: usize, height: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| (0..=height).map(move |k| [v.clone(), vec![k]].concat()))
            .collect();
    }
    out.into_iter()
        .filter(|v| {
            let h: i64 = v.iter().sum();
            h >= 1 && h <= height
        })
        .collect()
}

pub fn letters<F: Field>(alg: &Algebra<F>) -> Vec<Letter> {
    let mut out = Vec::new();
    for i in 0..alg.rank() as u8 {
        out.extend([Letter::E(i), Letter::F(i), Letter::Xi(i)]);
    }
    if alg.lambda().is_some() {
        out.push(Letter::V);
    }
    out
}

/// Every word of length at most `len` with the given tail.
pub fn words_up_to<F: Field>(alg: &Algebra<F>, len: usize, tail: &GroupElement) -> Vec<Word> {
    let ls = letters(alg);
    let mut out = vec![Word::group(tail.clone())];
    let mut layer = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &layer {
            for l in &ls {
                let mut v: Vec<Letter> = w.clone();
                v.push(*l);
                out.push(Word::new(&v, tail.clone()));
                next.push(v);
            }
        }
        layer = next;
    }
    out
}

/// `S(x_(1)) x_(2) = ε(x) 1 = x_(1) S(x_(2))`.
pub fn antipode_law<F: Field>(alg: &Algebra<F>, x: &Element<F>) -> bool {
    let d = alg.coproduct(x);
    let mut left = Element::zero();
    let mut right = Element::zero();
    for (k, c) in d.terms() {
        let a = Element::term(k[0].clone(), c.clone());
        let b = Element::from_word(k[1].clone());
        left = left.add(&alg.mul(&alg.antipode(&a), &b));
        right = right.add(&alg.mul(&a, &alg.antipode(&b)));
    }
    let unit = alg.one().scale(&alg.counit(x));
    left == unit && right == unit
}
