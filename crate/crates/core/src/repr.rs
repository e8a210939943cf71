//! Highest-weight modules inside the cotensor algebra with one extra letter
//! `v` of weight `λ`.
//!
//! Vectors are elements with exactly one `v`; generators act through the
//! left adjoint action, reduced modulo `J`. The module is the span reached
//! from `v` by the lowering operators.

use std::collections::HashMap;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::cartan::{CartanDatum, LatticeVector, ParamMatrix};
use crate::error::{Error, Result};
use crate::qqsa::{Algebra, Element, Letter, Word};
use crate::scalars::{q_factorial, Field, Matrix};
use crate::uq::{psi_gen, relation_expressions, Gen, GeneratorExpr, JReducer, RelationId};

#[derive(Clone, Debug)]
pub struct ModuleSetup<F> {
    alg: Algebra<F>,
    lambda: LatticeVector,
    max_depth: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeightSpace<F> {
    pub weight: LatticeVector,
    pub basis: Vec<Element<F>>,
}

/// Weight spaces in the order they were reached.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightSpaceTable<F> {
    pub spaces: Vec<WeightSpace<F>>,
}

impl<F: Field> WeightSpaceTable<F> {
    pub fn dim(&self) -> usize {
        self.spaces.iter().map(|s| s.basis.len()).sum()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(|s| s.basis.len()).collect()
    }

    pub fn space(&self, mu: &LatticeVector) -> Option<usize> {
        self.spaces.iter().position(|s| &s.weight == mu)
    }

    fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.spaces
            .iter()
            .map(|s| {
                let o = acc;
                acc += s.basis.len();
                o
            })
            .collect()
    }
}

/// Coordinates of `x` in `basis`, if it lies in the span.
fn express<F: Field>(basis: &[Element<F>], x: &Element<F>) -> Result<Option<Vec<F>>> {
    let mut index: HashMap<&Word, usize> = HashMap::new();
    for w in basis.iter().chain(std::iter::once(x)).flat_map(|e| e.terms().map(|(w, _)| w)) {
        let n = index.len();
        index.entry(w).or_insert(n);
    }
    let mut m = Matrix::zeros(index.len(), basis.len());
    for (col, b) in basis.iter().enumerate() {
        for (w, c) in b.terms() {
            m.set(index[w], col, c.clone());
        }
    }
    let mut rhs = vec![F::zero(); index.len()];
    for (w, c) in x.terms() {
        rhs[index[w]] = c.clone();
    }
    m.solve(&rhs)
}

impl<F: Field> ModuleSetup<F> {
    pub fn new(params: &ParamMatrix, lambda: LatticeVector, max_depth: usize) -> Result<Self> {
        if !params.datum().is_dominant_integral(&lambda) {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        let alg = Algebra::new(params, Some(lambda.clone()))?;
        Ok(ModuleSetup { alg, lambda, max_depth })
    }

    /// From highest-weight labels `⟨λ, α_i^∨⟩`.
    pub fn from_labels(params: &ParamMatrix, labels: &[i64], max_depth: usize) -> Result<Self> {
        let lambda = params.datum().weight_from_labels(labels)?;
        Self::new(params, lambda, max_depth)
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.alg
    }

    pub fn lambda(&self) -> &LatticeVector {
        &self.lambda
    }

    pub fn datum(&self) -> &CartanDatum {
        self.alg.params().datum()
    }

    fn reducer(&self, x: &Element<F>) -> JReducer {
        JReducer::new(x.max_length().max(4))
    }

    pub fn highest_vector(&self) -> Element<F> {
        self.alg.letter(Letter::V, self.alg.group().identity())
    }

    /// `ad_l(ψ(g))(w)` reduced to a `ξ`-free form.
    pub fn act(&self, g: Gen, w: &Element<F>) -> Result<Element<F>> {
        let x = self.alg.ad_left(&psi_gen(&self.alg, g)?, w);
        let x = if x.terms().any(|(w, _)| w.xi_count() > 0) {
            self.reducer(&x).representative(&self.alg, &x)?
        } else {
            x
        };
        if x.terms().any(|(w, _)| w.contains(|l| matches!(l, Letter::E(_)))) {
            return Err(Error::Internal(format!(
                "raising left the lowering span: {}",
                self.alg.display(&x)
            )));
        }
        Ok(x)
    }

    /// Acts by a generator expression, rightmost factor first.
    pub fn act_expr(&self, x: &GeneratorExpr<F>, w: &Element<F>) -> Result<Element<F>> {
        let mut out = Element::zero();
        for (gens, c) in x.terms() {
            let mut acc = w.clone();
            for &g in gens.iter().rev() {
                acc = self.act(g, &acc)?;
            }
            out = out.add(&acc.scale(c));
        }
        Ok(out)
    }

    /// The weight shift of a generator.
    fn shift(&self, g: Gen) -> LatticeVector {
        let n = self.alg.rank();
        match g {
            Gen::E(i) => LatticeVector::simple(n, i),
            Gen::F(i) => LatticeVector::simple(n, i).neg(),
            _ => LatticeVector::zero(n),
        }
    }

    /// Breadth-first lowering from `v`.
    pub fn lowering_closure(&self) -> Result<WeightSpaceTable<F>> {
        let n = self.alg.rank();
        let mut spaces = vec![WeightSpace {
            weight: self.lambda.clone(),
            basis: vec![self.highest_vector()],
        }];
        let mut frontier = vec![0];
        for _ in 0..=self.max_depth {
            let mut next: Vec<WeightSpace<F>> = Vec::new();
            for &s in &frontier {
                for b in spaces[s].basis.clone() {
                    for i in 0..n {
                        let img = self.act(Gen::F(i), &b)?;
                        if img.is_zero() {
                            continue;
                        }
                        let mu = spaces[s].weight.sub(&LatticeVector::simple(n, i));
                        let k = match next.iter().position(|t| t.weight == mu) {
                            Some(k) => k,
                            None => {
                                next.push(WeightSpace {
                                    weight: mu,
                                    basis: Vec::new(),
                                });
                                next.len() - 1
                            }
                        };
                        if express(&next[k].basis, &img)?.is_none() {
                            next[k].basis.push(img);
                        }
                    }
                }
            }
            if next.is_empty() {
                return Ok(WeightSpaceTable { spaces });
            }
            frontier = (spaces.len()..spaces.len() + next.len()).collect();
            spaces.extend(next);
        }
        Err(Error::NotClosed { depth: self.max_depth })
    }

    /// Matrix of a generator on the whole module, columns indexed by the
    /// concatenated weight-space bases.
    pub fn action_matrix(&self, table: &WeightSpaceTable<F>, g: Gen) -> Result<Matrix<F>> {
        let offsets = table.offsets();
        let dim = table.dim();
        let mut m = Matrix::zeros(dim, dim);
        let shift = self.shift(g);
        for (s, space) in table.spaces.iter().enumerate() {
            let target = space.weight.add(&shift);
            let t = table.space(&target);
            for (k, b) in space.basis.iter().enumerate() {
                let img = self.act(g, b)?;
                if img.is_zero() {
                    continue;
                }
                let t = t.ok_or_else(|| Error::Internal(format!("{g} leaves the module at weight {target}")))?;
                let coords = express(&table.spaces[t].basis, &img)?.ok_or_else(|| {
                    Error::Internal(format!("{g} image not in the span: {}", self.alg.display(&img)))
                })?;
                for (r, c) in coords.into_iter().enumerate() {
                    m.set(offsets[t] + r, offsets[s] + k, c);
                }
            }
        }
        Ok(m)
    }

    /// `ω_i` eigenvalue `q_{α_i μ}` on the weight-`μ` space.
    pub fn omega_eigenvalue(&self, i: usize, mu: &LatticeVector) -> Result<F> {
        let n = self.alg.rank();
        self.alg.params().q_pairing_in(&LatticeVector::simple(n, i), mu)
    }

    /// First `r ≥ 1` with `ad(f_i)^r v = 0`.
    pub fn nilpotency_threshold(&self, i: usize) -> Result<usize> {
        let mut x = self.highest_vector();
        for r in 1..=self.max_depth + 1 {
            x = self.act(Gen::F(i), &x)?;
            if x.is_zero() {
                return Ok(r);
            }
        }
        Err(Error::NotClosed { depth: self.max_depth })
    }

    /// `1 + ⟨λ, α_i^∨⟩`.
    pub fn expected_threshold(&self, i: usize) -> usize {
        let l = self.datum().coweight_pairing(&self.lambda, i);
        1 + l.to_integer() as usize
    }

    /// `(r)_{q_ii^{-1}}! ∏_{k=1}^{r} (q_ii^{k−1} q_{λα_i}^{-1} − q_{α_iλ})
    /// · (F_i ⋯ F_i v)`.
    pub fn lowering_power_closed_form(&self, i: usize, r: u32) -> Result<Element<F>> {
        let n = self.alg.rank();
        let p = self.alg.params();
        let ai = LatticeVector::simple(n, i);
        let qii = self.alg.q(i, i).clone();
        let q_la = p.q_pairing_in::<F>(&self.lambda, &ai)?.inv()?;
        let q_al = p.q_pairing_in::<F>(&ai, &self.lambda)?;
        let mut c = q_factorial(r, &qii.inv()?);
        for k in 1..=r {
            c = c.mul(&qii.pow(i64::from(k) - 1)?.mul(&q_la).sub(&q_al));
        }
        let mut letters = vec![Letter::F(i as u8); r as usize];
        letters.push(Letter::V);
        Ok(Element::term(Word::new(&letters, self.alg.group().identity()), c))
    }

    /// Matrix of a generator expression; constant terms act as scalars.
    pub fn expr_matrix(
        &self,
        table: &WeightSpaceTable<F>,
        cache: &mut HashMap<Gen, Matrix<F>>,
        x: &GeneratorExpr<F>,
    ) -> Result<Matrix<F>> {
        let dim = table.dim();
        let mut out = Matrix::zeros(dim, dim);
        for (gens, c) in x.terms() {
            let mut acc = Matrix::identity(dim);
            for &g in gens {
                if !cache.contains_key(&g) {
                    cache.insert(g, self.action_matrix(table, g)?);
                }
                acc = acc.mul(&cache[&g])?;
            }
            out = out.add(&acc.scale(c))?;
        }
        Ok(out)
    }

    /// Every defining relation as a matrix identity on the module.
    pub fn check_matrix_relations(&self, table: &WeightSpaceTable<F>) -> Result<Vec<(RelationId, bool)>> {
        let mut cache = HashMap::new();
        let mut out = Vec::new();
        for id in RelationId::all(self.alg.rank()) {
            let mut ok = true;
            for e in relation_expressions(&self.alg, id)? {
                ok &= self.expr_matrix(table, &mut cache, &e)?.is_zero();
            }
            out.push((id, ok));
        }
        Ok(out)
    }
}

/// `r(a) = a_(1) · π_0(S(a_(2)))`, projecting onto right coinvariants.
pub fn coinvariant_project<F: Field>(alg: &Algebra<F>, a: &Element<F>) -> Element<F> {
    let mut out = Element::zero();
    for (slots, c) in alg.coproduct(a).terms() {
        let s = alg.antipode(&Element::from_word(slots[1].clone())).filter(Word::is_empty);
        if s.is_zero() {
            continue;
        }
        out = out.add(&alg.mul(&Element::from_word(slots[0].clone()), &s).scale(c));
    }
    out
}

/// `(id ⊗ π_0) Δ(x) = x ⊗ 1`.
pub fn is_right_coinvariant<F: Field>(alg: &Algebra<F>, x: &Element<F>) -> bool {
    let mut lhs = Element::zero();
    let one = Word::group(alg.group().identity());
    for (slots, c) in alg.coproduct(x).terms() {
        if slots[1].is_empty() {
            if slots[1] != one {
                return false;
            }
            lhs.add_term(slots[0].clone(), c.clone());
        }
    }
    lhs == *x
}

/// `⟨μ, α^∨⟩ = 2(μ, α)/(α, α)`.
fn coroot_pairing(datum: &CartanDatum, mu: &LatticeVector, alpha: &LatticeVector) -> Rational64 {
    datum.form(mu, alpha) * Rational64::from_integer(2) / datum.form(alpha, alpha)
}

/// `0 < ⟨λ + ρ, α^∨⟩ < ℓ` for every positive root, under the order
/// hypotheses on `ℓ`.
pub fn alcove_check(datum: &CartanDatum, lambda: &LatticeVector, ell: u32) -> Result<bool> {
    if !datum.is_finite_type() || !datum.is_indecomposable() {
        return Err(Error::Hypothesis("finite indecomposable type required".into()));
    }
    if ell < 3 || ell % 2 == 0 {
        return Err(Error::Hypothesis(format!("order {ell} must be odd and at least 3")));
    }
    if ell % 3 == 0 && (0..datum.rank()).any(|i| datum.in_g2_component(i)) {
        return Err(Error::Hypothesis(format!("order {ell} is divisible by 3 in type G2")));
    }
    let shifted = lambda.add(&datum.rho()?);
    let bound = Rational64::from_integer(i64::from(ell));
    Ok(datum.positive_roots()?.iter().all(|a| {
        let p = coroot_pairing(datum, &shifted, a);
        p > Rational64::zero() && p < bound
    }))
}

/// The module with labels `labels` at a primitive `ℓ`-th root of unity,
/// refused outside the alcove.
pub fn root_of_unity_module<F: Field>(
    datum: &CartanDatum,
    labels: &[i64],
    ell: u32,
) -> Result<(ModuleSetup<F>, WeightSpaceTable<F>)> {
    let lambda = datum.weight_from_labels(labels)?;
    if !alcove_check(datum, &lambda, ell)? {
        return Err(Error::Hypothesis(format!("weight {lambda} lies outside the alcove for order {ell}")));
    }
    let params = ParamMatrix::root_of_unity(datum, ell)?;
    let depth = lambda.add(&datum.rho()?).coords().iter().fold(Rational64::one(), |a, c| a + c);
    let setup = ModuleSetup::new(&params, lambda, 2 * depth.ceil().to_integer() as usize + 2)?;
    let table = setup.lowering_closure()?;
    Ok((setup, table))
}

/// Weyl's dimension formula `∏_{α>0} (λ+ρ, α)/(ρ, α)`.
pub fn weyl_dimension(datum: &CartanDatum, lambda: &LatticeVector) -> Result<i64> {
    let rho = datum.rho()?;
    let shifted = lambda.add(&rho);
    let mut acc = Rational64::one();
    for a in datum.positive_roots()? {
        acc *= datum.form(&shifted, &a) / datum.form(&rho, &a);
    }
    if !acc.is_integer() {
        return Err(Error::Internal(format!("non-integral dimension {acc}")));
    }
    Ok(acc.to_integer())
}
