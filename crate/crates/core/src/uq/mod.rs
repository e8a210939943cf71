//! The presented quantum group: generator expressions, the realization map
//! into the cotensor algebra, defining relations and adjoint powers.

mod jideal;
mod pairing;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::qqsa::{Algebra, Element, Letter, Word};
use crate::scalars::{q_binomial, q_factorial, Field};

pub use jideal::{JOutcome, JReducer, Spanner};
pub use pairing::{gram_matrix, graded_basis, skew_pairing, skew_pairing_transposed, BasisVector, Sign};

/// One generator letter; `Omega(i, k)` is `ω_i^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    E(usize),
    F(usize),
    Omega(usize, i32),
    OmegaPrime(usize, i32),
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Gen::E(i) => write!(f, "e{}", i + 1),
            Gen::F(i) => write!(f, "f{}", i + 1),
            Gen::Omega(i, 1) => write!(f, "w{}", i + 1),
            Gen::Omega(i, k) => write!(f, "w{}^{k}", i + 1),
            Gen::OmegaPrime(i, 1) => write!(f, "w'{}", i + 1),
            Gen::OmegaPrime(i, k) => write!(f, "w'{}^{k}", i + 1),
        }
    }
}

/// A noncommutative polynomial in the generators.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorExpr<F> {
    terms: BTreeMap<Vec<Gen>, F>,
}

impl<F: Field> GeneratorExpr<F> {
    pub fn zero() -> Self {
        GeneratorExpr {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::scalar(F::one())
    }

    pub fn scalar(c: F) -> Self {
        Self::monomial(Vec::new(), c)
    }

    pub fn monomial(gens: Vec<Gen>, c: F) -> Self {
        let mut e = Self::zero();
        e.add_term(gens, c);
        e
    }

    pub fn gen(g: Gen) -> Self {
        Self::monomial(vec![g], F::one())
    }

    pub fn add_term(&mut self, gens: Vec<Gen>, c: F) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(gens).or_insert_with(F::zero);
        *entry = entry.add(&c);
        self.terms.retain(|_, v| !v.is_zero());
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Gen>, &F)> {
        self.terms.iter()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &o.terms {
            out.add_term(g.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&F::one().neg()))
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero();
        for (g, x) in &self.terms {
            out.add_term(g.clone(), x.mul(c));
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.add_term([a.as_slice(), b.as_slice()].concat(), x.mul(y));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }
}

impl<F: Field> fmt::Display for GeneratorExpr<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(g, c)| {
                let m: Vec<String> = g.iter().map(ToString::to_string).collect();
                let m = if m.is_empty() { "1".to_string() } else { m.join("") };
                format!("({c})·{m}")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `ψ` on one generator: `ω_i ↦ K_i`, `ω'_i ↦ K'_i`, `e_i ↦ E_i`,
/// `f_i ↦ F_i K'_i`.
pub fn psi_gen<F: Field>(alg: &Algebra<F>, g: Gen) -> Result<Element<F>> {
    let grp = alg.group();
    let idx = match g {
        Gen::E(i) | Gen::F(i) | Gen::Omega(i, _) | Gen::OmegaPrime(i, _) => i,
    };
    if idx >= alg.rank() {
        return Err(Error::InvalidArgument(format!("generator {g} out of range")));
    }
    Ok(match g {
        Gen::E(i) => alg.letter(Letter::E(i as u8), grp.identity()),
        Gen::F(i) => alg.letter(Letter::F(i as u8), grp.k_prime(i)),
        Gen::Omega(i, k) => alg.group_element(grp.pow(&grp.k(i), k)),
        Gen::OmegaPrime(i, k) => alg.group_element(grp.pow(&grp.k_prime(i), k)),
    })
}

pub fn psi_monomial<F: Field>(alg: &Algebra<F>, gens: &[Gen]) -> Result<Element<F>> {
    let mut acc = alg.one();
    for &g in gens {
        acc = alg.mul(&acc, &psi_gen(alg, g)?);
    }
    Ok(acc)
}

pub fn psi_eval<F: Field>(alg: &Algebra<F>, x: &GeneratorExpr<F>) -> Result<Element<F>> {
    let mut out = Element::zero();
    for (g, c) in x.terms() {
        out = out.add(&psi_monomial(alg, g)?.scale(c));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RelationId {
    pub rel: Relation,
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for RelationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.rel, self.i + 1, self.j + 1)
    }
}

impl RelationId {
    /// Every relation instance for rank `n`.
    pub fn all(n: usize) -> Vec<RelationId> {
        let mut out = Vec::new();
        for rel in [
            Relation::R1,
            Relation::R2,
            Relation::R3,
            Relation::R4,
            Relation::R5,
            Relation::R6,
            Relation::R7,
        ] {
            for i in 0..n {
                for j in 0..n {
                    if matches!(rel, Relation::R6 | Relation::R7) && i == j {
                        continue;
                    }
                    out.push(RelationId { rel, i, j });
                }
            }
        }
        out
    }
}

fn g<F: Field>(x: Gen) -> GeneratorExpr<F> {
    GeneratorExpr::gen(x)
}

/// The Serre sum `Σ_k (−1)^k [1−a, k]_{q_ii} q_ii^{k(k−1)/2} q_ij^k ·
/// term(k)`.
fn serre_sum<F: Field>(
    alg: &Algebra<F>,
    i: usize,
    j: usize,
    term: impl Fn(u32, u32) -> GeneratorExpr<F>,
) -> Result<GeneratorExpr<F>> {
    let a = alg.params().datum().a(i, j);
    let n = (1 - a) as u32;
    let qii = alg.q(i, i);
    let qij = alg.q(i, j);
    let mut out = GeneratorExpr::zero();
    for k in 0..=n {
        let mut c = q_binomial(n, k, qii)?
            .mul(&qii.pow(i64::from(k * k.saturating_sub(1) / 2))?)
            .mul(&qij.pow(i64::from(k))?);
        if k % 2 == 1 {
            c = c.neg();
        }
        out = out.add(&term(k, n).scale(&c));
    }
    Ok(out)
}

/// The defining relations `LHS − RHS` of one relation instance, as a list of
/// components.
pub fn relation_expressions<F: Field>(alg: &Algebra<F>, id: RelationId) -> Result<Vec<GeneratorExpr<F>>> {
    let n = alg.rank();
    let RelationId { rel, i, j } = id;
    if i >= n || j >= n {
        return Err(Error::InvalidArgument(format!("{id} out of range")));
    }
    let one = GeneratorExpr::<F>::one();
    let comm = |a: GeneratorExpr<F>, b: GeneratorExpr<F>| a.mul(&b).sub(&b.mul(&a));
    Ok(match rel {
        Relation::R1 => {
            let mut v = Vec::new();
            for s in [1, -1] {
                for t in [1, -1] {
                    v.push(comm(g(Gen::Omega(i, s)), g(Gen::OmegaPrime(j, t))));
                }
                v.push(g(Gen::Omega(i, s)).mul(&g(Gen::Omega(i, -s))).sub(&one));
                v.push(g(Gen::OmegaPrime(i, s)).mul(&g(Gen::OmegaPrime(i, -s))).sub(&one));
            }
            v
        }
        Relation::R2 => {
            let mut v = Vec::new();
            for s in [1, -1] {
                for t in [1, -1] {
                    v.push(comm(g(Gen::Omega(i, s)), g(Gen::Omega(j, t))));
                    v.push(comm(g(Gen::OmegaPrime(i, s)), g(Gen::OmegaPrime(j, t))));
                }
            }
            v
        }
        Relation::R3 => vec![
            g(Gen::Omega(i, 1))
                .mul(&g(Gen::E(j)))
                .mul(&g(Gen::Omega(i, -1)))
                .sub(&g(Gen::E(j)).scale(alg.q(i, j))),
            g(Gen::OmegaPrime(i, 1))
                .mul(&g(Gen::E(j)))
                .mul(&g(Gen::OmegaPrime(i, -1)))
                .sub(&g(Gen::E(j)).scale(&alg.q(j, i).inv()?)),
        ],
        Relation::R4 => vec![
            g(Gen::Omega(i, 1))
                .mul(&g(Gen::F(j)))
                .mul(&g(Gen::Omega(i, -1)))
                .sub(&g(Gen::F(j)).scale(&alg.q(i, j).inv()?)),
            g(Gen::OmegaPrime(i, 1))
                .mul(&g(Gen::F(j)))
                .mul(&g(Gen::OmegaPrime(i, -1)))
                .sub(&g(Gen::F(j)).scale(alg.q(j, i))),
        ],
        Relation::R5 => {
            let mut r = comm(g(Gen::E(i)), g(Gen::F(j)));
            if i == j {
                let cartan = g(Gen::Omega(i, 1)).sub(&g(Gen::OmegaPrime(i, 1)));
                r = r.sub(&cartan.scale(alg.c(i)));
            }
            vec![r]
        }
        Relation::R6 | Relation::R7 if i == j => {
            return Err(Error::InvalidArgument(format!("{id} needs i != j")));
        }
        Relation::R6 => vec![serre_sum(alg, i, j, |k, n| {
            g(Gen::E(i)).pow(n - k).mul(&g(Gen::E(j))).mul(&g(Gen::E(i)).pow(k))
        })?],
        Relation::R7 => vec![serre_sum(alg, i, j, |k, n| {
            g(Gen::F(i)).pow(k).mul(&g(Gen::F(j))).mul(&g(Gen::F(i)).pow(n - k))
        })?],
    })
}

/// `ψ(LHS − RHS)` for each component of a relation.
pub fn relation_residuals<F: Field>(alg: &Algebra<F>, id: RelationId) -> Result<Vec<Element<F>>> {
    relation_expressions(alg, id)?
        .iter()
        .map(|e| psi_eval(alg, e))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelationStatus {
    /// Every residual is literally zero.
    Zero,
    /// Residuals lie in the ideal `J`, certified at the given bound.
    ZeroModJ { bound: usize },
    /// Membership in `J` not decided at the bound.
    Undecided { bound: usize },
    Failed { residual: String },
}

impl RelationStatus {
    pub fn holds(&self) -> bool {
        matches!(self, RelationStatus::Zero | RelationStatus::ZeroModJ { .. })
    }
}

impl fmt::Display for RelationStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationStatus::Zero => write!(f, "zero"),
            RelationStatus::ZeroModJ { bound } => write!(f, "zero-mod-J({bound})"),
            RelationStatus::Undecided { bound } => write!(f, "undecided({bound})"),
            RelationStatus::Failed { residual } => write!(f, "failed: {residual}"),
        }
    }
}

pub fn check_relation<F: Field>(alg: &Algebra<F>, id: RelationId, reducer: &JReducer) -> Result<RelationStatus> {
    let mut status = RelationStatus::Zero;
    for r in relation_residuals(alg, id)? {
        if r.is_zero() {
            continue;
        }
        match reducer.reduce(alg, &r)? {
            JOutcome::Zero { .. } => status = RelationStatus::ZeroModJ { bound: reducer.bound() },
            JOutcome::NonZero { residue } => {
                return Ok(RelationStatus::Failed {
                    residual: alg.display(&residue),
                })
            }
            JOutcome::Undecided { .. } => return Ok(RelationStatus::Undecided { bound: reducer.bound() }),
        }
    }
    Ok(status)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `ad_l(E_i)^s(E_j)` or `ad_r(F_i K'_i)^s(F_j K'_j)`, computed through the
/// coproduct and antipode.
pub fn ad_power<F: Field>(alg: &Algebra<F>, side: Side, i: usize, j: usize, s: u32) -> Result<Element<F>> {
    match side {
        Side::Left => {
            let x = psi_gen(alg, Gen::E(i))?;
            let mut y = psi_gen(alg, Gen::E(j))?;
            for _ in 0..s {
                y = alg.ad_left(&x, &y);
            }
            Ok(y)
        }
        Side::Right => {
            let x = psi_gen(alg, Gen::F(i))?;
            let mut y = psi_gen(alg, Gen::F(j))?;
            for _ in 0..s {
                y = alg.ad_right(&x, &y);
            }
            Ok(y)
        }
    }
}

/// The closed form of [`ad_power`]:
/// `(s)_{q_ii}! ∏_{k=0}^{s−1}(1 − q_ii^k q_ij q_ji) · E_i^{⊗s} ⊗ E_j` on the
/// left, `(s)_{q_ii}! ∏_{k=0}^{s−1}(q_ij − q_ii^{−k} q_ji^{−1}) · F_j ⊗ F_i^{⊗s}`
/// (tail `K'_i^s K'_j`) on the right.
pub fn ad_closed_form<F: Field>(alg: &Algebra<F>, side: Side, i: usize, j: usize, s: u32) -> Result<Element<F>> {
    let (qii, qij, qji) = (alg.q(i, i), alg.q(i, j), alg.q(j, i));
    let mut c = q_factorial(s, qii);
    for k in 0..s {
        let qk = qii.pow(i64::from(k))?;
        let f = match side {
            Side::Left => F::one().sub(&qk.mul(qij).mul(qji)),
            Side::Right => qij.sub(&qk.mul(qji).inv()?),
        };
        c = c.mul(&f);
    }
    let grp = alg.group();
    let (ii, jj) = (i as u8, j as u8);
    let word = match side {
        Side::Left => {
            let mut l = vec![Letter::E(ii); s as usize];
            l.push(Letter::E(jj));
            Word::new(&l, grp.identity())
        }
        Side::Right => {
            let mut l = vec![Letter::F(jj)];
            l.extend(std::iter::repeat(Letter::F(ii)).take(s as usize));
            let tail = grp.mul(&grp.pow(&grp.k_prime(i), s as i32), &grp.k_prime(j));
            Word::new(&l, tail)
        }
    };
    Ok(Element::term(word, c))
}

/// `E_i^{*r} = (r)_{q_ii}! E_i^{⊗r}` and `(F_i K'_i)^{*r} = (r)_{q_ii}! F_i^{⊗r}`
/// with tail `K'_i^r`.
pub fn letter_power_closed_form<F: Field>(alg: &Algebra<F>, side: Side, i: usize, r: u32) -> Element<F> {
    let grp = alg.group();
    let c = q_factorial(r, alg.q(i, i));
    let (letter, tail) = match side {
        Side::Left => (Letter::E(i as u8), grp.identity()),
        Side::Right => (Letter::F(i as u8), grp.pow(&grp.k_prime(i), r as i32)),
    };
    Element::term(Word::new(&vec![letter; r as usize], tail), c)
}
