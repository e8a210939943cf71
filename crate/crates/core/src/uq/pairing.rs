//! The skew pairing between the Borel halves, evaluated on realized
//! elements, and graded bases with their Gram matrices.
//!
//! Elements are first written as combinations of realized generator
//! monomials by exact elimination; the pairing then peels one generator at a
//! time, either from `y` against `Δ(x)` or from `x` against `Δ(y)`.

use std::collections::BTreeMap;

use super::{psi_monomial, Gen};
use crate::cartan::LatticeVector;
use crate::error::{Error, Result};
use crate::grouplike::{GroupElement, Generator};
use crate::qqsa::{Algebra, Element, Letter, Word};
use crate::scalars::{Field, Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BasisVector<F> {
    pub monomial: Vec<Gen>,
    pub image: Element<F>,
}

fn multiset(sign: Sign, beta: &[i64]) -> Vec<Gen> {
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        for _ in 0..b {
            out.push(match sign {
                Sign::Plus => Gen::E(i),
                Sign::Minus => Gen::F(i),
            });
        }
    }
    out
}

fn permutations(mut items: Vec<Gen>) -> Vec<Vec<Gen>> {
    items.sort();
    let mut out = vec![items.clone()];
    loop {
        let n = items.len();
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| items[i] < items[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| items[j] > items[i]).expect("successor exists");
        items.swap(i, j);
        items[i + 1..].reverse();
        out.push(items.clone());
    }
    out
}

fn coordinate_matrix<F: Field>(images: &[Element<F>], extra: &[&Element<F>]) -> (Matrix<F>, BTreeMap<Word, usize>) {
    let mut index: BTreeMap<Word, usize> = BTreeMap::new();
    for e in images.iter().chain(extra.iter().copied()) {
        for (w, _) in e.terms() {
            let n = index.len();
            index.entry(w.clone()).or_insert(n);
        }
    }
    let mut m = Matrix::zeros(index.len(), images.len());
    for (col, img) in images.iter().enumerate() {
        for (w, c) in img.terms() {
            m.set(index[w], col, c.clone());
        }
    }
    (m, index)
}

/// A basis of `(U^±)_{±β}` among realized monomials in `e_i` (or `f_i`).
pub fn graded_basis<F: Field>(alg: &Algebra<F>, sign: Sign, beta: &LatticeVector) -> Result<Vec<BasisVector<F>>> {
    let b = beta.integer_coords()?;
    beta.height()?;
    let monos = permutations(multiset(sign, &b));
    let images = monos
        .iter()
        .map(|m| psi_monomial(alg, m))
        .collect::<Result<Vec<_>>>()?;
    let (m, _) = coordinate_matrix(&images, &[]);
    let (_, pivots) = m.rref();
    Ok(pivots
        .into_iter()
        .map(|c| BasisVector {
            monomial: monos[c].clone(),
            image: images[c].clone(),
        })
        .collect())
}

/// Exponents of the `K` (or `K'`) generators of a tail; errors when the
/// other kind, or `K_λ`, occurs.
fn tail_exponents<F: Field>(alg: &Algebra<F>, t: &GroupElement, prime: bool) -> Result<Vec<i64>> {
    let grp = alg.group();
    let mut out = vec![0i64; alg.rank()];
    for (k, &e) in t.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        match (grp.generator(k), prime) {
            (Generator::K(i), false) | (Generator::KPrime(i), true) => out[i] = i64::from(e),
            _ => {
                return Err(Error::OutsideBorel(format!(
                    "group part {}",
                    grp.display(t)
                )))
            }
        }
    }
    Ok(out)
}

/// Writes `x` as `Σ c · ψ(monomial)`, monomials ending in group-likes.
fn decompose<F: Field>(alg: &Algebra<F>, x: &Element<F>, sign: Sign) -> Result<Vec<(Vec<Gen>, F)>> {
    let n = alg.rank();
    let grp = alg.group();
    // (counts of letters, tail) -> element with that shape
    let mut parts: BTreeMap<(Vec<i64>, GroupElement), Element<F>> = BTreeMap::new();
    for (w, c) in x.terms() {
        let mut counts = vec![0i64; n];
        for l in &w.letters {
            match (l, sign) {
                (Letter::E(i), Sign::Plus) | (Letter::F(i), Sign::Minus) => counts[usize::from(*i)] += 1,
                _ => return Err(Error::OutsideBorel(format!("letter {l}"))),
            }
        }
        parts
            .entry((counts, w.tail.clone()))
            .or_default()
            .add_term(w.clone(), c.clone());
    }
    let mut out = Vec::new();
    for ((counts, tail), part) in parts {
        let prime = sign == Sign::Minus;
        let t = tail_exponents(alg, &tail, prime)?;
        // the realized monomial already carries K'^β on the minus side
        let mu: Vec<i64> = match sign {
            Sign::Plus => t,
            Sign::Minus => t.iter().zip(&counts).map(|(a, b)| a - b).collect(),
        };
        let shift = grp.inv(&grp.k_power(&mu, prime));
        let normalized = alg.act_right(&part, &shift);
        let monos = permutations(multiset(sign, &counts));
        let images = monos
            .iter()
            .map(|m| psi_monomial(alg, m))
            .collect::<Result<Vec<_>>>()?;
        let (m, index) = coordinate_matrix(&images, &[&normalized]);
        let mut rhs = vec![F::zero(); index.len()];
        for (w, c) in normalized.terms() {
            rhs[index[w]] = c.clone();
        }
        let sol = m.solve(&rhs)?.ok_or_else(|| {
            Error::OutsideBorel(format!("{} is not a combination of realized monomials", alg.display(&part)))
        })?;
        for (mono, c) in monos.into_iter().zip(sol) {
            if c.is_zero() {
                continue;
            }
            let mut gens = mono;
            for (i, &e) in mu.iter().enumerate() {
                if e != 0 {
                    gens.push(match sign {
                        Sign::Plus => Gen::Omega(i, e as i32),
                        Sign::Minus => Gen::OmegaPrime(i, e as i32),
                    });
                }
            }
            out.push((gens, c));
        }
    }
    Ok(out)
}

/// `q_{μν} = ∏ q_ij^{μ_i ν_j}` for integer vectors.
fn q_pair<F: Field>(alg: &Algebra<F>, mu: &[i64], nu: &[i64]) -> Result<F> {
    let mut acc = F::one();
    for (i, &a) in mu.iter().enumerate() {
        for (j, &b) in nu.iter().enumerate() {
            if a * b != 0 {
                acc = acc.mul(&alg.q(i, j).pow(a * b)?);
            }
        }
    }
    Ok(acc)
}

fn unit_vector(n: usize, i: usize, k: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = k;
    v
}

fn f_e_value<F: Field>(alg: &Algebra<F>, i: usize) -> Result<F> {
    let q = alg.q(i, i);
    q.div(&F::one().sub(q))
}

/// `⟨g, a⟩` for a generator `g` of `U^{≤0}` and a basis word `a` of the
/// realized `U^{≥0}`.
fn base_minus<F: Field>(alg: &Algebra<F>, g: Gen, a: &Word) -> Result<F> {
    let n = alg.rank();
    match g {
        Gen::F(i) => match a.letters.as_slice() {
            [Letter::E(j)] => {
                tail_exponents(alg, &a.tail, false)?;
                if usize::from(*j) == i {
                    f_e_value(alg, i)
                } else {
                    Ok(F::zero())
                }
            }
            _ => Ok(F::zero()),
        },
        Gen::OmegaPrime(i, k) => {
            if !a.is_empty() {
                return Ok(F::zero());
            }
            let nu = tail_exponents(alg, &a.tail, false)?;
            q_pair(alg, &nu, &unit_vector(n, i, i64::from(k)))
        }
        _ => Err(Error::OutsideBorel(format!("generator {g} on the lower side"))),
    }
}

/// `⟨b, g⟩` for a basis word `b` of the realized `U^{≤0}` and a generator
/// `g` of `U^{≥0}`.
fn base_plus<F: Field>(alg: &Algebra<F>, b: &Word, g: Gen) -> Result<F> {
    let n = alg.rank();
    match g {
        Gen::E(i) => match b.letters.as_slice() {
            [Letter::F(j)] => {
                tail_exponents(alg, &b.tail, true)?;
                if usize::from(*j) == i {
                    f_e_value(alg, i)
                } else {
                    Ok(F::zero())
                }
            }
            _ => Ok(F::zero()),
        },
        Gen::Omega(i, k) => {
            if !b.is_empty() {
                return Ok(F::zero());
            }
            let mu = tail_exponents(alg, &b.tail, true)?;
            q_pair(alg, &unit_vector(n, i, i64::from(k)), &mu)
        }
        _ => Err(Error::OutsideBorel(format!("generator {g} on the upper side"))),
    }
}

/// `⟨g_1 ⋯ g_k, x⟩ = Σ ⟨g_1, x_{(1)}⟩ ⟨g_2 ⋯ g_k, x_{(2)}⟩`.
fn peel_minus<F: Field>(alg: &Algebra<F>, gens: &[Gen], x: &Element<F>) -> Result<F> {
    let Some((&g, rest)) = gens.split_first() else {
        return Ok(alg.counit(x));
    };
    let mut acc = F::zero();
    for (k, c) in alg.coproduct(x).terms() {
        let v = base_minus(alg, g, &k[0])?;
        if v.is_zero() {
            continue;
        }
        let inner = peel_minus(alg, rest, &Element::from_word(k[1].clone()))?;
        acc = acc.add(&v.mul(&inner).mul(c));
    }
    Ok(acc)
}

/// `⟨y, g_1 ⋯ g_k⟩ = Σ ⟨y_{(1)}, g_2 ⋯ g_k⟩ ⟨y_{(2)}, g_1⟩`.
fn peel_plus<F: Field>(alg: &Algebra<F>, y: &Element<F>, gens: &[Gen]) -> Result<F> {
    let Some((&g, rest)) = gens.split_first() else {
        return Ok(alg.counit(y));
    };
    let mut acc = F::zero();
    for (k, c) in alg.coproduct(y).terms() {
        let v = base_plus(alg, &k[1], g)?;
        if v.is_zero() {
            continue;
        }
        let inner = peel_plus(alg, &Element::from_word(k[0].clone()), rest)?;
        acc = acc.add(&v.mul(&inner).mul(c));
    }
    Ok(acc)
}

/// `⟨y, x⟩`, peeling generators off `y`.
pub fn skew_pairing<F: Field>(alg: &Algebra<F>, y: &Element<F>, x: &Element<F>) -> Result<F> {
    decompose(alg, x, Sign::Plus)?;
    let mut acc = F::zero();
    for (gens, c) in decompose(alg, y, Sign::Minus)? {
        acc = acc.add(&peel_minus(alg, &gens, x)?.mul(&c));
    }
    Ok(acc)
}

/// `⟨y, x⟩`, peeling generators off `x`.
pub fn skew_pairing_transposed<F: Field>(alg: &Algebra<F>, y: &Element<F>, x: &Element<F>) -> Result<F> {
    decompose(alg, y, Sign::Minus)?;
    let mut acc = F::zero();
    for (gens, c) in decompose(alg, x, Sign::Plus)? {
        acc = acc.add(&peel_plus(alg, y, &gens)?.mul(&c));
    }
    Ok(acc)
}

/// Rows index a basis of `(U^-)_{-β}`, columns a basis of `(U^+)_β`.
pub fn gram_matrix<F: Field>(alg: &Algebra<F>, beta: &LatticeVector) -> Result<Matrix<F>> {
    let minus = graded_basis(alg, Sign::Minus, beta)?;
    let plus = graded_basis(alg, Sign::Plus, beta)?;
    let mut rows = Vec::with_capacity(minus.len());
    for y in &minus {
        let row = plus
            .iter()
            .map(|x| peel_minus(alg, &y.monomial, &x.image))
            .collect::<Result<Vec<F>>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Ok(Matrix::zeros(0, plus.len()));
    }
    Matrix::from_rows(rows)
}
