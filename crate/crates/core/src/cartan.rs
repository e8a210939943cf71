//! Cartan data, parameter matrices and the root lattice.
//!
//! Lattice vectors are written in simple-root coordinates; weights may have
//! rational coordinates. Parameter matrix entries are always stored as
//! symbolic monomials, and numeric or root-of-unity modes carry an
//! [`Assignment`] that evaluates them.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalars::{Assignment, Exponent, Field, Monomial, ParamVar, Scalar, SpecValue};

/// A symmetrizable generalized Cartan matrix with its symmetrizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDatum {
    a: Vec<Vec<i64>>,
    d: Vec<i64>,
}

impl CartanDatum {
    pub fn new(a: Vec<Vec<i64>>, d: Vec<i64>) -> Result<Self> {
        let n = a.len();
        if n == 0 {
            return Err(Error::InvalidCartan("empty matrix".into()));
        }
        if n > 9 {
            return Err(Error::InvalidCartan("rank above 9 is not supported".into()));
        }
        if d.len() != n || a.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidCartan("matrix and symmetrizer sizes differ".into()));
        }
        for i in 0..n {
            if a[i][i] != 2 {
                return Err(Error::InvalidCartan(format!("a_{}{} != 2", i + 1, i + 1)));
            }
            if d[i] <= 0 {
                return Err(Error::InvalidCartan(format!("d_{} must be positive", i + 1)));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if a[i][j] > 0 {
                    return Err(Error::InvalidCartan(format!("a_{}{} > 0", i + 1, j + 1)));
                }
                if (a[i][j] == 0) != (a[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "a_{}{} and a_{}{} must vanish together",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
                if d[i] * a[i][j] != d[j] * a[j][i] {
                    return Err(Error::InvalidCartan(format!(
                        "d_{} a_{}{} != d_{} a_{}{}",
                        i + 1,
                        i + 1,
                        j + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(CartanDatum { a, d })
    }

    /// Standard data: `A1`, `A2`, `A3`, `B2`, `C2`, `G2`, `A1xA1`.
    ///
    /// `B2` uses `d = (2, 1)` (first root long), `G2` uses `d = (3, 1)`.
    pub fn named(name: &str) -> Result<Self> {
        let (a, d) = match name.to_ascii_uppercase().as_str() {
            "A1" => (vec![vec![2]], vec![1]),
            "A1XA1" | "A1A1" => (vec![vec![2, 0], vec![0, 2]], vec![1, 1]),
            "A2" => (vec![vec![2, -1], vec![-1, 2]], vec![1, 1]),
            "A3" => (
                vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
                vec![1, 1, 1],
            ),
            "B2" => (vec![vec![2, -1], vec![-2, 2]], vec![2, 1]),
            "C2" => (vec![vec![2, -2], vec![-1, 2]], vec![2, 1].into_iter().rev().collect()),
            "G2" => (vec![vec![2, -1], vec![-3, 2]], vec![3, 1]),
            other => return Err(Error::InvalidCartan(format!("unknown type {other}"))),
        };
        CartanDatum::new(a, d)
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn d(&self, i: usize) -> i64 {
        self.d[i]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.a
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.d
    }

    /// `(α_i, α_j) = d_i a_ij`.
    pub fn symmetrized(&self, i: usize, j: usize) -> i64 {
        self.d[i] * self.a[i][j]
    }

    /// `(μ, ν) = Σ μ_i ν_j d_i a_ij`.
    pub fn form(&self, mu: &LatticeVector, nu: &LatticeVector) -> Rational64 {
        let mut acc = Rational64::zero();
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                acc += mu.0[i] * nu.0[j] * Rational64::from_integer(self.symmetrized(i, j));
            }
        }
        acc
    }

    /// `⟨λ, α_i^∨⟩ = 2(λ, α_i)/(α_i, α_i) = Σ_j a_ij λ_j`.
    pub fn coweight_pairing(&self, lambda: &LatticeVector, i: usize) -> Rational64 {
        (0..self.rank())
            .map(|j| Rational64::from_integer(self.a[i][j]) * lambda.0[j])
            .sum()
    }

    /// Finite type test: every leading principal minor of `(d_i a_ij)` is
    /// positive.
    pub fn is_finite_type(&self) -> bool {
        let n = self.rank();
        let mut m: Vec<Vec<Rational64>> = (0..n)
            .map(|i| (0..n).map(|j| Rational64::from_integer(self.symmetrized(i, j))).collect())
            .collect();
        for k in 0..n {
            if m[k][k] <= Rational64::zero() {
                return false;
            }
            for i in k + 1..n {
                let f = m[i][k] / m[k][k];
                for j in k..n {
                    let v = m[k][j];
                    m[i][j] -= f * v;
                }
            }
        }
        true
    }

    /// The index with the smallest symmetrizer entry (lowest index on ties)
    /// in the connected component of `i`.
    pub fn component_representative(&self, i: usize) -> usize {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut stack = vec![i];
        seen[i] = true;
        let mut best = i;
        while let Some(k) = stack.pop() {
            if (self.d[k], k) < (self.d[best], best) {
                best = k;
            }
            for j in 0..n {
                if self.a[k][j] != 0 && !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        best
    }

    /// True when `i` lies in a component of type G2.
    pub fn in_g2_component(&self, i: usize) -> bool {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut stack = vec![i];
        seen[i] = true;
        let mut g2 = false;
        while let Some(k) = stack.pop() {
            for j in 0..n {
                if j != k && self.a[k][j] != 0 {
                    if self.a[k][j] * self.a[j][k] == 3 {
                        g2 = true;
                    }
                    if !seen[j] {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
        }
        g2
    }

    pub fn is_indecomposable(&self) -> bool {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(k) = stack.pop() {
            for j in 0..n {
                if self.a[k][j] != 0 && !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn simple_root(&self, i: usize) -> LatticeVector {
        LatticeVector::simple(self.rank(), i)
    }

    /// `s_i(β) = β − ⟨β, α_i^∨⟩ α_i`.
    pub fn reflect(&self, beta: &LatticeVector, i: usize) -> LatticeVector {
        let c = self.coweight_pairing(beta, i);
        let mut out = beta.clone();
        out.0[i] -= c;
        out
    }

    /// Positive roots by closing the simple roots under simple reflections.
    pub fn positive_roots(&self) -> Result<Vec<LatticeVector>> {
        if !self.is_finite_type() {
            return Err(Error::NotFiniteType);
        }
        let n = self.rank();
        let mut seen: BTreeSet<LatticeVector> = BTreeSet::new();
        let mut queue: VecDeque<LatticeVector> = (0..n).map(|i| self.simple_root(i)).collect();
        while let Some(beta) = queue.pop_front() {
            if !seen.insert(beta.clone()) {
                continue;
            }
            for i in 0..n {
                let r = self.reflect(&beta, i);
                if r.is_nonnegative() && !r.is_zero() && !seen.contains(&r) {
                    queue.push_back(r);
                }
            }
        }
        let mut roots: Vec<LatticeVector> = seen.into_iter().collect();
        roots.sort_by(|a, b| {
            a.height_unchecked()
                .cmp(&b.height_unchecked())
                .then_with(|| b.cmp(a))
        });
        Ok(roots)
    }

    /// Half the sum of the positive roots.
    pub fn rho(&self) -> Result<LatticeVector> {
        let roots = self.positive_roots()?;
        let sum = roots
            .iter()
            .fold(LatticeVector::zero(self.rank()), |acc, r| acc.add(r));
        Ok(sum.scale(Rational64::new(1, 2)))
    }

    /// The weight with `⟨λ, α_i^∨⟩ = labels[i]`, in root coordinates.
    pub fn weight_from_labels(&self, labels: &[i64]) -> Result<LatticeVector> {
        let n = self.rank();
        if labels.len() != n {
            return Err(Error::Dimension(format!("expected {n} labels")));
        }
        let mut m: Vec<Vec<Rational64>> = (0..n)
            .map(|i| {
                let mut row: Vec<Rational64> =
                    (0..n).map(|j| Rational64::from_integer(self.a[i][j])).collect();
                row.push(Rational64::from_integer(labels[i]));
                row
            })
            .collect();
        for c in 0..n {
            let p = (c..n)
                .find(|&r| !m[r][c].is_zero())
                .ok_or_else(|| Error::InvalidCartan("singular Cartan matrix".into()))?;
            m.swap(c, p);
            let pv = m[c][c];
            for v in m[c].iter_mut() {
                *v /= pv;
            }
            for r in 0..n {
                if r != c && !m[r][c].is_zero() {
                    let f = m[r][c];
                    for k in 0..=n {
                        let v = m[c][k];
                        m[r][k] -= f * v;
                    }
                }
            }
        }
        Ok(LatticeVector((0..n).map(|i| m[i][n]).collect()))
    }

    /// The labels `⟨λ, α_i^∨⟩` of a weight.
    pub fn labels(&self, lambda: &LatticeVector) -> Vec<Rational64> {
        (0..self.rank()).map(|i| self.coweight_pairing(lambda, i)).collect()
    }

    pub fn is_dominant_integral(&self, lambda: &LatticeVector) -> bool {
        self.labels(lambda)
            .iter()
            .all(|l| l.is_integer() && !l.is_negative())
    }

    /// Least common multiple of the coordinate denominators of the given
    /// vectors.
    pub fn denominator(vectors: &[&LatticeVector]) -> i64 {
        vectors
            .iter()
            .flat_map(|v| v.0.iter())
            .fold(1i64, |acc, c| acc.lcm(c.denom()))
    }
}

/// A vector `Σ μ_i α_i` with rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector(pub Vec<Rational64>);

impl LatticeVector {
    pub fn zero(n: usize) -> Self {
        LatticeVector(vec![Rational64::zero(); n])
    }

    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = Self::zero(n);
        v.0[i] = Rational64::one();
        v
    }

    pub fn from_ints(c: &[i64]) -> Self {
        LatticeVector(c.iter().map(|&x| Rational64::from_integer(x)).collect())
    }

    pub fn coords(&self) -> &[Rational64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, o: &Self) -> Self {
        LatticeVector(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        LatticeVector(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        LatticeVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: Rational64) -> Self {
        LatticeVector(self.0.iter().map(|a| a * c).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    fn height_unchecked(&self) -> Rational64 {
        self.0.iter().sum()
    }

    /// `ht(β) = Σ β_i` for `β ∈ Q⁺`.
    pub fn height(&self) -> Result<u32> {
        if !self.is_integral() || !self.is_nonnegative() {
            return Err(Error::NotPositive(self.to_string()));
        }
        Ok(self.0.iter().map(|c| *c.numer() as u32).sum())
    }

    /// Integer coordinates, for vectors of the root lattice.
    pub fn integer_coords(&self) -> Result<Vec<i64>> {
        if !self.is_integral() {
            return Err(Error::InvalidArgument(format!("{self} is not in the root lattice")));
        }
        Ok(self.0.iter().map(|c| *c.numer()).collect())
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|c| {
                if c.is_integer() {
                    c.numer().to_string()
                } else {
                    format!("{}/{}", c.numer(), c.denom())
                }
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// How the entries of a [`ParamMatrix`] are chosen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamMode {
    /// Free `q_ii` and `q_ij` (`i < j`); `q_ji` derived from the constraint.
    Symbolic,
    /// `q_ij = q^{d_i a_ij}`.
    OneParameter,
    /// `q_ii = q^{2 d_i}` with free `q_ij` (`i < j`).
    Tied,
    /// Symbolic entries evaluated at rational values.
    Numeric,
    /// One-parameter entries at `q = ζ_ℓ^{(ℓ+1)/2}`, so `q_ii = ζ_ℓ^{d_i}`.
    RootOfUnity(u32),
}

/// The matrix `(q_ij)` subject to `q_ij q_ji = q_ii^{a_ij}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamMatrix {
    datum: CartanDatum,
    mode: ParamMode,
    entries: Vec<Vec<Monomial>>,
    assignment: Option<Assignment>,
}

fn qvar(i: usize, j: usize) -> ParamVar {
    ParamVar::Q(i as u8, j as u8)
}

fn int_exp(n: i64) -> Exponent {
    Exponent::from_integer(n)
}

impl ParamMatrix {
    fn generic_entries(datum: &CartanDatum, diag: impl Fn(usize) -> Monomial) -> Vec<Vec<Monomial>> {
        let n = datum.rank();
        let mut e = vec![vec![Monomial::one(); n]; n];
        for i in 0..n {
            e[i][i] = diag(i);
        }
        for i in 0..n {
            for j in i + 1..n {
                e[i][j] = Monomial::var(qvar(i, j));
                e[j][i] = e[i][i].pow(int_exp(datum.a(i, j))).div(&e[i][j]);
            }
        }
        e
    }

    pub fn symbolic(datum: &CartanDatum) -> Self {
        ParamMatrix {
            entries: Self::generic_entries(datum, |i| {
                let r = datum.component_representative(i);
                Monomial::var_pow(qvar(r, r), Rational64::new(datum.d(i), datum.d(r)))
            }),
            datum: datum.clone(),
            mode: ParamMode::Symbolic,
            assignment: None,
        }
    }

    pub fn tied(datum: &CartanDatum) -> Self {
        ParamMatrix {
            entries: Self::generic_entries(datum, |i| {
                Monomial::var_pow(ParamVar::Single, int_exp(2 * datum.d(i)))
            }),
            datum: datum.clone(),
            mode: ParamMode::Tied,
            assignment: None,
        }
    }

    pub fn one_parameter(datum: &CartanDatum) -> Self {
        let n = datum.rank();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Monomial::var_pow(ParamVar::Single, int_exp(datum.symmetrized(i, j))))
                    .collect()
            })
            .collect();
        ParamMatrix {
            entries,
            datum: datum.clone(),
            mode: ParamMode::OneParameter,
            assignment: None,
        }
    }

    /// Symbolic entries evaluated at the given values of the free variables
    /// `q_ii` and `q_ij` (`i < j`).
    pub fn numeric(datum: &CartanDatum, values: &[((usize, usize), BigRational)]) -> Result<Self> {
        let base = Self::symbolic(datum);
        let mut a = Assignment::new(1);
        for ((i, j), v) in values {
            if *i >= datum.rank() || *j >= datum.rank() || i > j {
                return Err(Error::InvalidArgument(format!(
                    "q_{}{} is not a free variable",
                    i + 1,
                    j + 1
                )));
            }
            if v.is_zero() {
                return Err(Error::InvalidArgument(format!("q_{}{} = 0", i + 1, j + 1)));
            }
            a.set(qvar(*i, *j), SpecValue::Rational(v.clone()));
        }
        for v in base.free_variables() {
            if a.get(v).is_none() {
                return Err(Error::InvalidArgument(format!("no value for {v}")));
            }
        }
        Ok(ParamMatrix {
            mode: ParamMode::Numeric,
            assignment: Some(a),
            ..base
        })
    }

    /// Numeric parameters at distinct prime powers, each a perfect
    /// `denominator²`-th power so that pairings of weights with that
    /// coordinate denominator stay rational.
    pub fn numeric_generic(datum: &CartanDatum, denominator: i64) -> Result<Self> {
        const PRIMES: [i64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
        let n = datum.rank();
        let mut values = Vec::new();
        let mut k = 0;
        let power = denominator.max(1) * denominator.max(1);
        for i in 0..n {
            for j in i..n {
                if i == j && datum.component_representative(i) != i {
                    continue;
                }
                let p = BigInt::from(PRIMES[k % PRIMES.len()]);
                k += 1;
                let v = num_traits::pow(p, power as usize);
                values.push(((i, j), BigRational::from_integer(v)));
            }
        }
        Self::numeric(datum, &values)
    }

    /// `q = ζ_ℓ^{(ℓ+1)/2}`, a square root of `ζ_ℓ`, so `ord(q_ii) = ℓ`
    /// whenever `gcd(d_i, ℓ) = 1`.
    pub fn root_of_unity(datum: &CartanDatum, ell: u32) -> Result<Self> {
        if ell < 3 || ell % 2 == 0 {
            return Err(Error::Hypothesis(format!("order {ell} must be odd and at least 3")));
        }
        for i in 0..datum.rank() {
            if datum.d(i).gcd(&i64::from(ell)) != 1 {
                return Err(Error::Hypothesis(format!(
                    "d_{} = {} shares a factor with {ell}",
                    i + 1,
                    datum.d(i)
                )));
            }
        }
        let a = Assignment::new(ell).with(ParamVar::Single, SpecValue::ZetaPower(i64::from((ell + 1) / 2)));
        Ok(ParamMatrix {
            mode: ParamMode::RootOfUnity(ell),
            assignment: Some(a),
            ..Self::one_parameter(datum)
        })
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn mode(&self) -> &ParamMode {
        &self.mode
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn assignment(&self) -> Option<&Assignment> {
        self.assignment.as_ref()
    }

    /// The root-of-unity order, when in that mode.
    pub fn ell(&self) -> Option<u32> {
        match self.mode {
            ParamMode::RootOfUnity(l) => Some(l),
            _ => None,
        }
    }

    pub fn entry_monomial(&self, i: usize, j: usize) -> &Monomial {
        &self.entries[i][j]
    }

    /// Symbolic `q_ij`.
    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        Scalar::monomial(self.entries[i][j].clone())
    }

    /// `q_ij` in the field `F`, evaluated through the assignment.
    pub fn entry_in<F: Field>(&self, i: usize, j: usize) -> Result<F> {
        F::from_symbolic(&self.entry(i, j), self.assignment.as_ref())
    }

    pub fn free_variables(&self) -> Vec<ParamVar> {
        let mut vars: Vec<ParamVar> = self
            .entries
            .iter()
            .flatten()
            .flat_map(|m| m.variables().collect::<Vec<_>>())
            .collect();
        vars.sort();
        vars.dedup();
        vars
    }

    /// `q_{μν} = ∏ q_ij^{μ_i ν_j}` as a symbolic monomial.
    pub fn q_pairing(&self, mu: &LatticeVector, nu: &LatticeVector) -> Scalar {
        let n = self.rank();
        let mut m = Monomial::one();
        for i in 0..n {
            for j in 0..n {
                let e = mu.0[i] * nu.0[j];
                if !e.is_zero() {
                    m = m.mul(&self.entries[i][j].pow(e));
                }
            }
        }
        Scalar::monomial(m)
    }

    pub fn q_pairing_in<F: Field>(&self, mu: &LatticeVector, nu: &LatticeVector) -> Result<F> {
        F::from_symbolic(&self.q_pairing(mu, nu), self.assignment.as_ref())
    }

    /// Pairs `(i, j)` where `q_ij q_ji = q_ii^{a_ij}` fails symbolically.
    pub fn constraint_violations(&self) -> Vec<(usize, usize)> {
        let n = self.rank();
        let mut bad = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.entries[i][j].mul(&self.entries[j][i]);
                let rhs = self.entries[i][i].pow(int_exp(self.datum.a(i, j)));
                if lhs != rhs {
                    bad.push((i, j));
                }
            }
        }
        bad
    }

    /// The multiplicative order of `q_ii` in root-of-unity mode.
    pub fn root_orders(&self) -> Option<Vec<u32>> {
        let ell = self.ell()?;
        Some(
            (0..self.rank())
                .map(|i| ell / (self.datum.d(i).gcd(&i64::from(ell)) as u32))
                .collect(),
        )
    }
}

impl fmt::Display for ParamMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_rejects_bad_symmetrizer() {
        assert!(CartanDatum::new(vec![vec![2, -1], vec![-2, 2]], vec![1, 1]).is_err());
        assert!(CartanDatum::new(vec![vec![2, -1], vec![0, 2]], vec![1, 1]).is_err());
    }

    #[test]
    fn named_types_are_valid_and_finite() {
        for name in ["A1", "A1xA1", "A2", "A3", "B2", "C2", "G2"] {
            let d = CartanDatum::named(name).unwrap();
            assert!(d.is_finite_type(), "{name}");
        }
        let affine = CartanDatum::new(vec![vec![2, -2], vec![-2, 2]], vec![1, 1]).unwrap();
        assert!(!affine.is_finite_type());
        assert_eq!(affine.positive_roots(), Err(Error::NotFiniteType));
    }

    #[test]
    fn positive_root_counts() {
        for (name, count) in [("A1", 1), ("A1xA1", 2), ("A2", 3), ("A3", 6), ("B2", 4), ("G2", 6)] {
            let d = CartanDatum::named(name).unwrap();
            assert_eq!(d.positive_roots().unwrap().len(), count, "{name}");
        }
        let a2 = CartanDatum::named("A2").unwrap();
        let roots = a2.positive_roots().unwrap();
        assert!(roots.contains(&LatticeVector::from_ints(&[1, 1])));
    }

    #[test]
    fn pairing_and_heights() {
        let a2 = CartanDatum::named("A2").unwrap();
        let a1 = a2.simple_root(0);
        assert_eq!(a2.coweight_pairing(&a1, 0), Rational64::from_integer(2));
        assert_eq!(a2.coweight_pairing(&a1, 1), Rational64::from_integer(-1));
        assert_eq!(LatticeVector::from_ints(&[1, 2]).height().unwrap(), 3);
        assert!(LatticeVector::from_ints(&[1, -1]).height().is_err());
    }

    #[test]
    fn fundamental_weights() {
        let a2 = CartanDatum::named("A2").unwrap();
        let w1 = a2.weight_from_labels(&[1, 0]).unwrap();
        assert_eq!(w1, LatticeVector(vec![Rational64::new(2, 3), Rational64::new(1, 3)]));
        assert_eq!(a2.rho().unwrap(), LatticeVector::from_ints(&[1, 1]));
    }

    #[test]
    fn symbolic_a2_derives_q21() {
        let a2 = CartanDatum::named("A2").unwrap();
        let p = ParamMatrix::symbolic(&a2);
        assert_eq!(p.free_variables().len(), 2);
        let expect = Monomial::var(qvar(0, 0))
            .inv()
            .div(&Monomial::var(qvar(0, 1)));
        assert_eq!(p.entry_monomial(1, 0), &expect);
        assert!(p.constraint_violations().is_empty());
    }

    #[test]
    fn constraint_holds_in_all_modes() {
        for name in ["A1xA1", "A3", "B2", "C2", "G2"] {
            let d = CartanDatum::named(name).unwrap();
            assert!(ParamMatrix::symbolic(&d).constraint_violations().is_empty(), "{name}");
            assert!(ParamMatrix::tied(&d).constraint_violations().is_empty(), "{name}");
            assert!(ParamMatrix::one_parameter(&d).constraint_violations().is_empty(), "{name}");
        }
        let b2 = CartanDatum::named("B2").unwrap();
        let p = ParamMatrix::symbolic(&b2);
        assert_eq!(p.entry_monomial(0, 0), &Monomial::var(qvar(1, 1)).pow(int_exp(2)));
    }

    #[test]
    fn half_exponent_pairing() {
        let a1 = CartanDatum::named("A1").unwrap();
        let p = ParamMatrix::symbolic(&a1);
        let lam = LatticeVector(vec![Rational64::new(1, 2)]);
        let v = p.q_pairing(&a1.simple_root(0), &lam);
        assert_eq!(v, Scalar::var_pow(qvar(0, 0), Rational64::new(1, 2)));
    }
}
