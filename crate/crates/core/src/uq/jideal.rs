//! Reduction modulo the Hopf ideal `J` generated by
//! `r_i = ξ_i − K_i K'_i^{-1} + 1`.
//!
//! Words carrying a single `ξ` and no `E` are rewritten by writing their
//! span as a combination of letter products `u * ξ_i * v` (times a tail) and
//! substituting `ξ_i ↦ K_i K'_i^{-1} − 1` in each product. Each step is a
//! subtraction of an explicit element of `J`, so every rewrite is sound;
//! anything the search cannot express is reported as undecided.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::grouplike::GroupElement;
use crate::qqsa::{Algebra, Element, Letter, Word};
use crate::scalars::{Field, Matrix};

/// One summand `coeff · u * r_i * v * tail` of an ideal-membership
/// certificate, with `u`, `v` products of single letters.
#[derive(Clone, Debug, PartialEq)]
pub struct Spanner<F> {
    pub coeff: F,
    pub left: Vec<Letter>,
    pub index: usize,
    pub right: Vec<Letter>,
    pub tail: GroupElement,
}

#[derive(Clone, Debug, PartialEq)]
pub enum JOutcome<F> {
    /// `x = Σ spanners`, checked by expansion.
    Zero { certificate: Vec<Spanner<F>> },
    /// `x` is congruent to a nonzero element of the group algebra, which
    /// meets `J` trivially.
    NonZero { residue: Element<F> },
    Undecided { residue: Element<F> },
}

#[derive(Clone, Debug)]
pub struct JReducer {
    bound: usize,
}

fn distinct_permutations(mut items: Vec<Letter>) -> Vec<Vec<Letter>> {
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

struct Products<'a, F> {
    alg: &'a Algebra<F>,
    cache: HashMap<Vec<Letter>, Element<F>>,
}

impl<F: Field> Products<'_, F> {
    /// `a_1 * a_2 * ⋯ * a_n` with every factor `(a_k; 1)`.
    fn of(&mut self, letters: &[Letter]) -> Element<F> {
        if let Some(e) = self.cache.get(letters) {
            return e.clone();
        }
        let e = match letters.split_last() {
            None => self.alg.one(),
            Some((last, rest)) => {
                let head = self.of(rest);
                let id = self.alg.group().identity();
                self.alg.mul(&head, &self.alg.letter(*last, id))
            }
        };
        self.cache.insert(letters.to_vec(), e.clone());
        e
    }
}

impl JReducer {
    pub fn new(bound: usize) -> Self {
        JReducer { bound }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// `r_i = ξ_i − K_i K'_i^{-1} + 1`.
    pub fn generator<F: Field>(alg: &Algebra<F>, i: usize) -> Element<F> {
        let g = alg.group();
        let kk = g.mul(&g.k(i), &g.inv(&g.k_prime(i)));
        alg.letter(Letter::Xi(i as u8), g.identity())
            .sub(&alg.group_element(kk))
            .add(&alg.one())
    }

    /// Expands a spanner to an element of the algebra.
    pub fn expand<F: Field>(alg: &Algebra<F>, s: &Spanner<F>) -> Element<F> {
        let mut p = Products {
            alg,
            cache: HashMap::new(),
        };
        let u = p.of(&s.left);
        let v = p.of(&s.right);
        let r = Self::generator(alg, s.index);
        let prod = alg.mul(&alg.mul(&u, &r), &v);
        alg.act_right(&prod, &s.tail).scale(&s.coeff)
    }

    /// Subtracts ideal elements until no `ξ` remains where possible; returns
    /// the remainder and the subtracted spanners.
    pub fn normalize<F: Field>(&self, alg: &Algebra<F>, x: &Element<F>) -> Result<(Element<F>, Vec<Spanner<F>>)> {
        let g = alg.group();
        let mut out = Element::zero();
        let mut cert = Vec::new();
        // (tail, sorted letters) -> words of that shape
        let mut groups: BTreeMap<(GroupElement, Vec<Letter>), Vec<(Word, F)>> = BTreeMap::new();
        for (w, c) in x.terms() {
            match w.xi_count() {
                0 => out.add_term(w.clone(), c.clone()),
                1 if w.len() == 1 => {
                    let Letter::Xi(i) = w.letters[0] else { unreachable!() };
                    let i = usize::from(i);
                    let kk = g.mul(&g.mul(&g.k(i), &g.inv(&g.k_prime(i))), &w.tail);
                    out.add_term(Word::group(kk), c.clone());
                    out.add_term(Word::group(w.tail.clone()), c.neg());
                    cert.push(Spanner {
                        coeff: c.clone(),
                        left: vec![],
                        index: i,
                        right: vec![],
                        tail: w.tail.clone(),
                    });
                }
                _ => {
                    let mut key: Vec<Letter> = w.letters.to_vec();
                    key.sort();
                    groups
                        .entry((w.tail.clone(), key))
                        .or_default()
                        .push((w.clone(), c.clone()));
                }
            }
        }
        let mut products = Products {
            alg,
            cache: HashMap::new(),
        };
        for ((tail, multiset), words) in groups {
            let handled = multiset.len() <= self.bound
                && multiset.iter().filter(|l| matches!(l, Letter::Xi(_))).count() == 1
                && !multiset.iter().any(|l| matches!(l, Letter::E(_)));
            let solved = if handled {
                self.solve_group(alg, &mut products, &tail, &multiset, &words)?
            } else {
                None
            };
            match solved {
                Some((replacement, spanners)) => {
                    out = out.add(&replacement);
                    cert.extend(spanners);
                }
                None => {
                    for (w, c) in words {
                        out.add_term(w, c);
                    }
                }
            }
        }
        Ok((out, cert))
    }

    #[allow(clippy::type_complexity)]
    fn solve_group<F: Field>(
        &self,
        alg: &Algebra<F>,
        products: &mut Products<'_, F>,
        tail: &GroupElement,
        multiset: &[Letter],
        words: &[(Word, F)],
    ) -> Result<Option<(Element<F>, Vec<Spanner<F>>)>> {
        let g = alg.group();
        let seqs = distinct_permutations(multiset.to_vec());
        let images: Vec<Element<F>> = seqs.iter().map(|s| products.of(s)).collect();
        let mut index: BTreeMap<Vec<Letter>, usize> = BTreeMap::new();
        for img in &images {
            for (w, _) in img.terms() {
                let n = index.len();
                index.entry(w.letters.to_vec()).or_insert(n);
            }
        }
        for (w, _) in words {
            let n = index.len();
            index.entry(w.letters.to_vec()).or_insert(n);
        }
        let mut m = Matrix::zeros(index.len(), seqs.len());
        for (col, img) in images.iter().enumerate() {
            for (w, c) in img.terms() {
                m.set(index[&w.letters.to_vec()], col, c.clone());
            }
        }
        let mut rhs = vec![F::zero(); index.len()];
        for (w, c) in words {
            rhs[index[&w.letters.to_vec()]] = c.clone();
        }
        let Some(sol) = m.solve(&rhs)? else {
            return Ok(None);
        };
        let mut replacement = Element::zero();
        let mut spanners = Vec::new();
        for (seq, c) in seqs.iter().zip(sol) {
            if c.is_zero() {
                continue;
            }
            let pos = seq
                .iter()
                .position(|l| matches!(l, Letter::Xi(_)))
                .ok_or_else(|| Error::Internal("sequence without ξ".into()))?;
            let Letter::Xi(i) = seq[pos] else { unreachable!() };
            let i = usize::from(i);
            let u = products.of(&seq[..pos]);
            let v = products.of(&seq[pos + 1..]);
            let kk = g.mul(&g.k(i), &g.inv(&g.k_prime(i)));
            let mid = alg.group_element(kk).sub(&alg.one());
            let sub = alg.mul(&alg.mul(&u, &mid), &v);
            replacement = replacement.add(&alg.act_right(&sub, tail).scale(&c));
            spanners.push(Spanner {
                coeff: c,
                left: seq[..pos].to_vec(),
                index: i,
                right: seq[pos + 1..].to_vec(),
                tail: tail.clone(),
            });
        }
        Ok(Some((replacement, spanners)))
    }

    /// Three-valued membership test for `x ∈ J`.
    pub fn reduce<F: Field>(&self, alg: &Algebra<F>, x: &Element<F>) -> Result<JOutcome<F>> {
        let (rest, certificate) = self.normalize(alg, x)?;
        if rest.is_zero() {
            let mut check = Element::zero();
            for s in &certificate {
                check = check.add(&Self::expand(alg, s));
            }
            if check != *x {
                return Err(Error::Internal("ideal certificate does not expand to the input".into()));
            }
            return Ok(JOutcome::Zero { certificate });
        }
        if rest.terms().all(|(w, _)| w.is_empty()) {
            return Ok(JOutcome::NonZero { residue: rest });
        }
        Ok(JOutcome::Undecided { residue: rest })
    }

    /// A `ξ`-free element congruent to `x` modulo `J`.
    pub fn representative<F: Field>(&self, alg: &Algebra<F>, x: &Element<F>) -> Result<Element<F>> {
        let (rest, _) = self.normalize(alg, x)?;
        if rest.terms().any(|(w, _)| w.xi_count() > 0) {
            return Err(Error::Undecided { bound: self.bound });
        }
        Ok(rest)
    }

    /// The distinct letter multisets of the `ξ`-words of `x`.
    pub fn xi_shapes<F: Field>(x: &Element<F>) -> BTreeSet<Vec<Letter>> {
        x.terms()
            .filter(|(w, _)| w.xi_count() > 0)
            .map(|(w, _)| {
                let mut k = w.letters.to_vec();
                k.sort();
                k
            })
            .collect()
    }
}
