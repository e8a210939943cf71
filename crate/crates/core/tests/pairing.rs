//! Skew pairing on realized elements and Gram matrices of graded pieces.

mod common;

use common::{kostant, vectors_up_to};
use qqsa::cartan::{CartanDatum, LatticeVector, ParamMatrix};
use qqsa::qqsa::Algebra;
use qqsa::scalars::{Field, Scalar};
use qqsa::uq::{
    gram_matrix, graded_basis, psi_monomial, skew_pairing, skew_pairing_transposed, Gen, Sign,
};

fn symbolic(name: &str) -> Algebra<Scalar> {
    let d = CartanDatum::named(name).unwrap();
    Algebra::new(&ParamMatrix::symbolic(&d), None).unwrap()
}

#[test]
fn base_values() {
    let alg = symbolic("A2");
    let f1 = psi_monomial(&alg, &[Gen::F(0)]).unwrap();
    let e1 = psi_monomial(&alg, &[Gen::E(0)]).unwrap();
    let e2 = psi_monomial(&alg, &[Gen::E(1)]).unwrap();
    let q = alg.q(0, 0);
    let expect = q.div(&Scalar::one().sub(q)).unwrap();
    assert_eq!(skew_pairing(&alg, &f1, &e1).unwrap(), expect);
    assert!(skew_pairing(&alg, &f1, &e2).unwrap().is_zero());
    let w = psi_monomial(&alg, &[Gen::OmegaPrime(0, 1), Gen::OmegaPrime(1, 2)]).unwrap();
    let k = psi_monomial(&alg, &[Gen::Omega(1, 1)]).unwrap();
    // q_{νμ} with ν = α_2, μ = α_1 + 2α_2
    let expect = alg.q(1, 0).mul(&alg.q(1, 1).pow(2).unwrap());
    assert_eq!(skew_pairing(&alg, &w, &k).unwrap(), expect);
    assert!(skew_pairing(&alg, &w, &e1).unwrap().is_zero());
    assert!(skew_pairing(&alg, &f1, &k).unwrap().is_zero());
}

#[test]
fn outside_borel_is_an_error() {
    let alg = symbolic("A1");
    let e = psi_monomial(&alg, &[Gen::E(0)]).unwrap();
    assert!(skew_pairing(&alg, &e, &e).is_err());
}

#[test]
fn two_recursions_agree() {
    for name in ["A2", "B2"] {
        let alg = symbolic(name);
        for beta in vectors_up_to(2, 3) {
            let b = LatticeVector::from_ints(&beta);
            let minus = graded_basis(&alg, Sign::Minus, &b).unwrap();
            let plus = graded_basis(&alg, Sign::Plus, &b).unwrap();
            for y in &minus {
                for x in &plus {
                    let a = skew_pairing(&alg, &y.image, &x.image).unwrap();
                    let t = skew_pairing_transposed(&alg, &y.image, &x.image).unwrap();
                    assert_eq!(a, t, "{name} {b}");
                }
            }
        }
        let f12 = psi_monomial(&alg, &[Gen::F(0), Gen::F(1), Gen::OmegaPrime(0, 1)]).unwrap();
        let e12 = psi_monomial(&alg, &[Gen::E(0), Gen::E(1), Gen::Omega(1, -1)]).unwrap();
        assert_eq!(
            skew_pairing(&alg, &f12, &e12).unwrap(),
            skew_pairing_transposed(&alg, &f12, &e12).unwrap()
        );
    }
}

#[test]
fn weight_orthogonality() {
    let alg = symbolic("A2");
    let y = psi_monomial(&alg, &[Gen::F(0), Gen::F(1)]).unwrap();
    let x = psi_monomial(&alg, &[Gen::E(0), Gen::E(0)]).unwrap();
    assert!(skew_pairing(&alg, &y, &x).unwrap().is_zero());
}

#[test]
fn gram_dimensions_and_nondegeneracy() {
    for (name, height) in [("A1", 4), ("A2", 4), ("B2", 3)] {
        let d = CartanDatum::named(name).unwrap();
        let alg = Algebra::<Scalar>::new(&ParamMatrix::symbolic(&d), None).unwrap();
        let roots: Vec<Vec<i64>> = d
            .positive_roots()
            .unwrap()
            .iter()
            .map(|r| r.integer_coords().unwrap())
            .collect();
        for beta in vectors_up_to(d.rank(), height) {
            let b = LatticeVector::from_ints(&beta);
            let g = gram_matrix(&alg, &b).unwrap();
            let k = kostant(&roots, &beta);
            assert_eq!(g.rows(), k, "{name} {b}");
            assert_eq!(g.cols(), k, "{name} {b}");
            assert!(!g.det().unwrap().is_zero(), "{name} {b}");
        }
    }
}
