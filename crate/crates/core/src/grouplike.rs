//! The grading group, its characters and bicharacters.
//!
//! The group is free abelian on `K_i`, `K'_i` and optionally `K_λ`, or the
//! quotient where every generator has order `ℓ`. Elements are exponent
//! vectors with generator index `i` for `K_i`, `n + i` for `K'_i` and `2n`
//! for `K_λ`.

use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::scalars::Field;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(pub SmallVec<[i32; 8]>);

impl GroupElement {
    pub fn exponents(&self) -> &[i32] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

/// Which generator an index names.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    K(usize),
    KPrime(usize),
    KLambda,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingGroup {
    rank: usize,
    has_lambda: bool,
    modulus: Option<u32>,
}

impl GradingGroup {
    pub fn new(rank: usize, has_lambda: bool, modulus: Option<u32>) -> Self {
        GradingGroup {
            rank,
            has_lambda,
            modulus,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn has_lambda(&self) -> bool {
        self.has_lambda
    }

    pub fn modulus(&self) -> Option<u32> {
        self.modulus
    }

    pub fn generator_count(&self) -> usize {
        2 * self.rank + usize::from(self.has_lambda)
    }

    /// Order of the group, when finite.
    pub fn order(&self) -> Option<u64> {
        self.modulus
            .map(|m| u64::from(m).pow(self.generator_count() as u32))
    }

    pub fn generator(&self, index: usize) -> Generator {
        if index < self.rank {
            Generator::K(index)
        } else if index < 2 * self.rank {
            Generator::KPrime(index - self.rank)
        } else {
            Generator::KLambda
        }
    }

    pub fn index(&self, g: Generator) -> usize {
        match g {
            Generator::K(i) => i,
            Generator::KPrime(i) => self.rank + i,
            Generator::KLambda => 2 * self.rank,
        }
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(SmallVec::from_elem(0, self.generator_count()))
    }

    pub fn gen_power(&self, g: Generator, e: i32) -> GroupElement {
        let mut x = self.identity();
        x.0[self.index(g)] = e;
        self.reduce(x)
    }

    pub fn k(&self, i: usize) -> GroupElement {
        self.gen_power(Generator::K(i), 1)
    }

    pub fn k_prime(&self, i: usize) -> GroupElement {
        self.gen_power(Generator::KPrime(i), 1)
    }

    pub fn k_lambda(&self) -> Result<GroupElement> {
        if !self.has_lambda {
            return Err(Error::InvalidArgument("group has no K_λ".into()));
        }
        Ok(self.gen_power(Generator::KLambda, 1))
    }

    /// `K^μ = ∏ K_i^{μ_i}` (or `K'` when `prime`).
    pub fn k_power(&self, mu: &[i64], prime: bool) -> GroupElement {
        let mut x = self.identity();
        let off = if prime { self.rank } else { 0 };
        for (i, &m) in mu.iter().enumerate() {
            x.0[off + i] = m as i32;
        }
        self.reduce(x)
    }

    pub fn reduce(&self, mut x: GroupElement) -> GroupElement {
        if let Some(m) = self.modulus {
            for e in x.0.iter_mut() {
                *e = e.rem_euclid(m as i32);
            }
        }
        x
    }

    pub fn mul(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let x = GroupElement(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect());
        self.reduce(x)
    }

    pub fn inv(&self, a: &GroupElement) -> GroupElement {
        self.reduce(GroupElement(a.0.iter().map(|x| -x).collect()))
    }

    pub fn pow(&self, a: &GroupElement, k: i32) -> GroupElement {
        self.reduce(GroupElement(a.0.iter().map(|x| x * k).collect()))
    }

    /// Every element, when the group is finite and small enough.
    pub fn elements(&self, limit: u64) -> Option<Vec<GroupElement>> {
        let m = self.modulus?;
        if self.order()? > limit {
            return None;
        }
        let count = self.generator_count();
        let mut out = vec![self.identity()];
        for k in 0..count {
            let mut next = Vec::with_capacity(out.len() * m as usize);
            for x in &out {
                for e in 0..m as i32 {
                    let mut y = x.clone();
                    y.0[k] = e;
                    next.push(y);
                }
            }
            out = next;
        }
        Some(out)
    }

    pub fn display(&self, x: &GroupElement) -> String {
        let mut s = String::new();
        for (k, &e) in x.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            match self.generator(k) {
                Generator::K(i) => s.push_str(&format!("K{}", i + 1)),
                Generator::KPrime(i) => s.push_str(&format!("K'{}", i + 1)),
                Generator::KLambda => s.push_str("Kλ"),
            }
            if e != 1 {
                s.push_str(&format!("^{e}"));
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

fn power<F: Field>(v: &F, vinv: &F, e: i32) -> F {
    let (base, n) = if e >= 0 { (v, e) } else { (vinv, -e) };
    let mut acc = F::one();
    for _ in 0..n {
        acc = acc.mul(base);
    }
    acc
}

/// A homomorphism from the grading group to `F^×`, given on generators.
#[derive(Clone, Debug, PartialEq)]
pub struct Character<F> {
    values: Vec<F>,
    inverses: Vec<F>,
}

impl<F: Field> Character<F> {
    pub fn new(values: Vec<F>) -> Result<Self> {
        let inverses = values.iter().map(F::inv).collect::<Result<Vec<_>>>()?;
        Ok(Character { values, inverses })
    }

    pub fn trivial(count: usize) -> Self {
        Character {
            values: vec![F::one(); count],
            inverses: vec![F::one(); count],
        }
    }

    pub fn on_generator(&self, k: usize) -> &F {
        &self.values[k]
    }

    pub fn eval(&self, g: &GroupElement) -> F {
        let mut acc = F::one();
        for (k, &e) in g.0.iter().enumerate() {
            if e != 0 {
                acc = acc.mul(&power(&self.values[k], &self.inverses[k], e));
            }
        }
        acc
    }

    /// Values must be `m`-th roots of unity for a group of modulus `m`.
    pub fn respects_modulus(&self, group: &GradingGroup) -> bool {
        match group.modulus() {
            None => true,
            Some(m) => self
                .values
                .iter()
                .all(|v| power(v, v, m as i32).is_one()),
        }
    }
}

/// A bimultiplicative map `G × G → F^×`, given on pairs of generators.
#[derive(Clone, Debug, PartialEq)]
pub struct Bicharacter<F> {
    table: Vec<Vec<F>>,
    inverses: Vec<Vec<F>>,
}

impl<F: Field> Bicharacter<F> {
    pub fn new(table: Vec<Vec<F>>) -> Result<Self> {
        let inverses = table
            .iter()
            .map(|row| row.iter().map(F::inv).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Bicharacter { table, inverses })
    }

    pub fn on_generators(&self, a: usize, b: usize) -> &F {
        &self.table[a][b]
    }

    pub fn eval(&self, g: &GroupElement, h: &GroupElement) -> F {
        let mut acc = F::one();
        for (a, &x) in g.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (b, &y) in h.0.iter().enumerate() {
                if y != 0 {
                    acc = acc.mul(&power(&self.table[a][b], &self.inverses[a][b], x * y));
                }
            }
        }
        acc
    }

    /// `σ^{-1}(g, h) = σ(g, h)^{-1}`.
    pub fn eval_inv(&self, g: &GroupElement, h: &GroupElement) -> F {
        let mut acc = F::one();
        for (a, &x) in g.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (b, &y) in h.0.iter().enumerate() {
                if y != 0 {
                    acc = acc.mul(&power(&self.inverses[a][b], &self.table[a][b], x * y));
                }
            }
        }
        acc
    }
}

/// Pairs `(i, j)` at which `q̂_ii = q_ii` or `q̂_ij q̂_ji = q_ij q_ji` fails.
pub fn gauge_violations<F: Field>(q: &[Vec<F>], qhat: &[Vec<F>]) -> Vec<(usize, usize)> {
    let n = q.len();
    let mut bad = Vec::new();
    for i in 0..n {
        for j in i..n {
            let ok = if i == j {
                q[i][i] == qhat[i][i]
            } else {
                q[i][j].mul(&q[j][i]) == qhat[i][j].mul(&qhat[j][i])
            };
            if !ok {
                bad.push((i, j));
            }
        }
    }
    bad
}

/// The bicharacter twisting the `q`-structure into the `q̂`-structure.
///
/// On generators, for `i < j`: `σ(K_i, K_j) = σ(K'_i, K'_j) = q̂_ij/q_ij`;
/// `σ(K'_i, K_j) = q_ji/q̂_ji` for all `i, j`; every other generator pair,
/// including anything involving `K_λ`, maps to `1`.
pub fn build_bicharacter<F: Field>(
    q: &[Vec<F>],
    qhat: &[Vec<F>],
    group: &GradingGroup,
) -> Result<Bicharacter<F>> {
    let n = q.len();
    if qhat.len() != n || group.rank() != n {
        return Err(Error::Dimension("parameter matrices and group rank differ".into()));
    }
    let bad = gauge_violations(q, qhat);
    if !bad.is_empty() {
        return Err(Error::ConstraintViolation { pairs: bad });
    }
    let count = group.generator_count();
    let mut table = vec![vec![F::one(); count]; count];
    for i in 0..n {
        for j in 0..n {
            if i < j {
                let r = qhat[i][j].div(&q[i][j])?;
                table[i][j] = r.clone();
                table[n + i][n + j] = r;
            }
            table[n + i][j] = q[j][i].div(&qhat[j][i])?;
        }
    }
    let sigma = Bicharacter::new(table)?;
    for i in 0..n {
        if !sigma.eval(&group.k(i), &group.k_prime(i)).is_one() {
            return Err(Error::Gauge(format!("σ(K_{0}, K'_{0}) != 1", i + 1)));
        }
    }
    Ok(sigma)
}
