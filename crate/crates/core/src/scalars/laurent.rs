//! Laurent polynomials over `Q` in the parameter variables, with rational
//! exponents.
//!
//! Monomials are kept sorted by variable and never store a zero exponent, so
//! structural equality is mathematical equality. The monomial order used for
//! leading terms is lexicographic on the fixed variable order: the smallest
//! variable is the most significant one.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

/// A parameter variable.
///
/// `Q(i, j)` is the multi-parameter entry `q_ij` (0-based indices), `Single`
/// is the auxiliary parameter `q` of the one-parameter specialization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParamVar {
    Q(u8, u8),
    Single,
}

impl fmt::Display for ParamVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ParamVar::Q(i, j) if i < 9 && j < 9 => write!(f, "q{}{}", i + 1, j + 1),
            ParamVar::Q(i, j) => write!(f, "q_{{{},{}}}", i + 1, j + 1),
            ParamVar::Single => write!(f, "q"),
        }
    }
}

/// Rational exponent of a monomial.
pub type Exponent = Rational64;

/// A Laurent monomial `∏ v^{e_v}` with rational exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: SmallVec<[(ParamVar, Exponent); 4]>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: ParamVar) -> Self {
        Self::var_pow(v, Exponent::one())
    }

    pub fn var_pow(v: ParamVar, e: Exponent) -> Self {
        let mut exps = SmallVec::new();
        if !e.is_zero() {
            exps.push((v, e));
        }
        Monomial { exps }
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs, merging
    /// repeated variables.
    pub fn from_pairs<I: IntoIterator<Item = (ParamVar, Exponent)>>(pairs: I) -> Self {
        let mut map: BTreeMap<ParamVar, Exponent> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert_with(Exponent::zero) += e;
        }
        Monomial {
            exps: map.into_iter().filter(|(_, e)| !e.is_zero()).collect(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: ParamVar) -> Exponent {
        self.exps
            .iter()
            .find(|(w, _)| *w == v)
            .map(|(_, e)| *e)
            .unwrap_or_else(Exponent::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = &(ParamVar, Exponent)> {
        self.exps.iter()
    }

    pub fn variables(&self) -> impl Iterator<Item = ParamVar> + '_ {
        self.exps.iter().map(|(v, _)| *v)
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        let mut out: SmallVec<[(ParamVar, Exponent); 4]> = SmallVec::new();
        let (mut a, mut b) = (self.exps.iter().peekable(), other.exps.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        out.push((va, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((vb, eb * sign));
                        b.next();
                    }
                    Ordering::Equal => {
                        let e = ea + eb * sign;
                        if !e.is_zero() {
                            out.push((va, e));
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some(&&p), None) => {
                    out.push(p);
                    a.next();
                }
                (None, Some(&&(vb, eb))) => {
                    out.push((vb, eb * sign));
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial { exps: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.combine(other, 1)
    }

    pub fn div(&self, other: &Self) -> Self {
        self.combine(other, -1)
    }

    pub fn inv(&self) -> Self {
        Monomial {
            exps: self.exps.iter().map(|&(v, e)| (v, -e)).collect(),
        }
    }

    pub fn pow(&self, e: Exponent) -> Self {
        if e.is_zero() {
            return Monomial::one();
        }
        Monomial {
            exps: self.exps.iter().map(|&(v, x)| (v, x * e)).collect(),
        }
    }

    /// True when every exponent is non-negative.
    pub fn is_polynomial(&self) -> bool {
        self.exps.iter().all(|(_, e)| !e.is_negative())
    }

    /// Componentwise minimum (exponents of absent variables count as zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut vars: Vec<ParamVar> = self.variables().chain(other.variables()).collect();
        vars.sort();
        vars.dedup();
        Monomial::from_pairs(vars.into_iter().map(|v| {
            let (a, b) = (self.exponent(v), other.exponent(v));
            (v, if a < b { a } else { b })
        }))
    }

    /// Least common multiple of the exponent denominators.
    pub fn denominator_lcm(&self) -> i64 {
        self.exps.iter().fold(1i64, |acc, (_, e)| acc.lcm(e.denom()))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.exps.iter().peekable(), other.exps.iter().peekable());
        loop {
            let (va, ea, vb, eb) = match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(&&(va, ea)), Some(&&(vb, eb))) => (va, ea, vb, eb),
                (Some(&&(_, ea)), None) => {
                    return ea.cmp(&Exponent::zero());
                }
                (None, Some(&&(_, eb))) => {
                    return Exponent::zero().cmp(&eb);
                }
            };
            match va.cmp(&vb) {
                Ordering::Less => return ea.cmp(&Exponent::zero()),
                Ordering::Greater => return Exponent::zero().cmp(&eb),
                Ordering::Equal => match ea.cmp(&eb) {
                    Ordering::Equal => {
                        a.next();
                        b.next();
                    }
                    o => return o,
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn fmt_exponent(e: &Exponent) -> String {
    if e.is_integer() {
        format!("{}", e.numer())
    } else {
        format!("({}/{})", e.numer(), e.denom())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.exps.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e.is_one() {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{}", fmt_exponent(e))?;
            }
        }
        Ok(())
    }
}

/// A finitely supported `Q`-linear combination of monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(BigRational::one(), m)
    }

    pub fn var(v: ParamVar) -> Self {
        Self::monomial(Monomial::var(v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// The single term of a one-term polynomial.
    pub fn as_term(&self) -> Option<(&Monomial, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        match self.as_term() {
            Some((m, c)) if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut big, small) = if self.len() >= other.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        big
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational, m: &Monomial) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Componentwise minimum of all exponents over the support.
    pub fn content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::one();
        };
        it.fold(first.clone(), |acc, m| acc.gcd(m))
    }

    /// Splits `self = c · m · p` where `p` has content `1` and leading
    /// coefficient `1`. Returns `None` for the zero polynomial.
    pub fn split_content(&self) -> Option<(BigRational, Monomial, LaurentPoly)> {
        let (_, lc) = self.leading_term()?;
        let lc = lc.clone();
        let content = self.content();
        let inv_c = lc.recip();
        let p = self.scale(&inv_c, &content.inv());
        Some((lc, content, p))
    }

    /// Exact division by a content-free divisor with leading coefficient 1.
    /// Returns `None` when the division is not exact.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let (dm, dc) = divisor.leading_term()?;
        if divisor.len() == 1 {
            return Some(self.scale(&dc.recip(), &dm.inv()));
        }
        let shift = self.content();
        let mut rem = self.scale(&BigRational::one(), &shift.inv());
        let mut quot = LaurentPoly::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            let t = rm.div(dm);
            if !t.is_polynomial() {
                return None;
            }
            let c = rc / dc;
            for (m, v) in &divisor.terms {
                rem.add_term(m.mul(&t), -(v * &c));
            }
            quot.add_term(t, c);
        }
        Some(quot.scale(&BigRational::one(), &shift))
    }

    /// Substitutes each monomial through `f` and sums.
    pub fn eval<T, E>(
        &self,
        zero: T,
        mut f: impl FnMut(&Monomial, &BigRational) -> Result<T, E>,
        add: impl Fn(T, T) -> T,
    ) -> Result<T, E> {
        let mut acc = zero;
        for (m, c) in &self.terms {
            acc = add(acc, f(m, c)?);
        }
        Ok(acc)
    }

    pub fn variables(&self) -> Vec<ParamVar> {
        let mut vars: Vec<ParamVar> = self.terms.keys().flat_map(|m| m.variables()).collect();
        vars.sort();
        vars.dedup();
        vars
    }

    /// Least common multiple of all exponent denominators.
    pub fn denominator_lcm(&self) -> i64 {
        self.terms
            .keys()
            .fold(1i64, |acc, m| acc.lcm(&m.denominator_lcm()))
    }
}

fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Descending monomial order, leading term first.
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_rational(&abs))?;
            }
        }
        Ok(())
    }
}
