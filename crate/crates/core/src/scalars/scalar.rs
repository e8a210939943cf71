//! The fraction field of Laurent polynomials in the parameters.
//!
//! A [`Scalar`] is a numerator polynomial over a product of normalized
//! denominator factors. A normalized factor has trivial monomial content,
//! leading coefficient one and at least two terms. Numerator and denominator
//! are cancelled by exact division against each stored factor; no
//! multivariate gcd is ever computed, so a value may carry a common factor
//! that was never exposed. Zero testing stays exact because a fraction is zero
//! exactly when its numerator is.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::cyclotomic::Cyclo;
use super::laurent::{Exponent, LaurentPoly, Monomial, ParamVar};
use super::Field;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default)]
pub struct Scalar {
    num: LaurentPoly,
    den: Vec<(LaurentPoly, u32)>,
}

/// Value assigned to a parameter variable by [`Scalar::specialize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecValue {
    Rational(BigRational),
    /// `ζ^k` for the primitive root `ζ` of the assignment's order.
    ZetaPower(i64),
}

/// A substitution of parameter variables, landing in `Q(ζ_N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    order: u32,
    values: BTreeMap<ParamVar, SpecValue>,
}

impl Assignment {
    /// Assignment into `Q(ζ_order)`; use order 1 for rational values only.
    pub fn new(order: u32) -> Self {
        Assignment {
            order: order.max(1),
            values: BTreeMap::new(),
        }
    }

    pub fn with(mut self, v: ParamVar, value: SpecValue) -> Self {
        self.values.insert(v, value);
        self
    }

    pub fn set(&mut self, v: ParamVar, value: SpecValue) {
        self.values.insert(v, value);
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn get(&self, v: ParamVar) -> Option<&SpecValue> {
        self.values.get(&v)
    }

    fn eval_monomial(&self, m: &Monomial) -> Result<Cyclo> {
        let n = i64::from(self.order);
        let mut rational = BigRational::one();
        let mut zeta = 0i64;
        for &(v, e) in m.iter() {
            match self.values.get(&v) {
                None => return Err(Error::Specialization(format!("no value for {v}"))),
                Some(SpecValue::Rational(r)) => {
                    if r.is_zero() {
                        return Err(Error::Specialization(format!("{v} assigned zero")));
                    }
                    let root = exact_root(r, *e.denom()).ok_or_else(|| {
                        Error::Specialization(format!(
                            "fractional power {e} of rational value {r} for {v}"
                        ))
                    })?;
                    let p = *e.numer();
                    let base = if p < 0 { root.recip() } else { root };
                    rational *= num_traits::pow(base, p.unsigned_abs() as usize);
                }
                Some(SpecValue::ZetaPower(k)) => {
                    let (a, b) = (*e.numer(), *e.denom());
                    let inv_b = mod_inverse(b.rem_euclid(n.max(1)), n).ok_or_else(|| {
                        Error::Specialization(format!(
                            "exponent {e} of {v} has denominator not invertible mod {n}"
                        ))
                    })?;
                    zeta = (zeta + (k * a).rem_euclid(n) * inv_b).rem_euclid(n);
                }
            }
        }
        Ok(Cyclo::zeta_power(self.order, zeta).scale(&rational))
    }

    pub fn eval_poly(&self, p: &LaurentPoly) -> Result<Cyclo> {
        let mut acc = Cyclo::zero();
        for (m, c) in p.terms() {
            acc = acc.add(&self.eval_monomial(m)?.scale(c));
        }
        Ok(acc)
    }
}

/// The exact `b`-th root of a rational, when it exists.
fn exact_root(r: &BigRational, b: i64) -> Option<BigRational> {
    if b == 1 {
        return Some(r.clone());
    }
    if r.is_negative() && b % 2 == 0 {
        return None;
    }
    let b32 = u32::try_from(b).ok()?;
    let root = |x: &BigInt| {
        let y = x.nth_root(b32);
        (num_traits::pow(y.clone(), b32 as usize) == *x).then_some(y)
    };
    Some(BigRational::new(root(r.numer())?, root(r.denom())?))
}

fn mod_inverse(a: i64, n: i64) -> Option<i64> {
    if n == 1 {
        return Some(0);
    }
    let g = a.extended_gcd(&n);
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.rem_euclid(n))
}

impl Scalar {
    pub fn from_poly(p: LaurentPoly) -> Self {
        Scalar {
            num: p,
            den: Vec::new(),
        }
    }

    pub fn var(v: ParamVar) -> Self {
        Self::from_poly(LaurentPoly::var(v))
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::from_poly(LaurentPoly::monomial(m))
    }

    pub fn var_pow(v: ParamVar, e: Exponent) -> Self {
        Self::monomial(Monomial::var_pow(v, e))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator_factors(&self) -> &[(LaurentPoly, u32)] {
        &self.den
    }

    pub fn denominator(&self) -> LaurentPoly {
        self.den
            .iter()
            .fold(LaurentPoly::one(), |acc, (f, m)| acc.mul(&f.pow(*m)))
    }

    /// True when the value is a Laurent polynomial (no denominator factor).
    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    /// The monomial `m` when `self == m` exactly.
    pub fn as_monomial(&self) -> Option<Monomial> {
        if !self.den.is_empty() {
            return None;
        }
        match self.num.as_term() {
            Some((m, c)) if c.is_one() => Some(m.clone()),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.den.is_empty() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// Builds `num / den` from two arbitrary polynomials.
    pub fn fraction(num: LaurentPoly, den: &LaurentPoly) -> Result<Self> {
        Scalar::from_poly(num).mul_checked_inv_poly(den)
    }

    fn mul_checked_inv_poly(self, p: &LaurentPoly) -> Result<Self> {
        let (c, m, norm) = p.split_content().ok_or(Error::DivisionByZero)?;
        let mut den = self.den;
        push_factor(&mut den, norm, 1);
        let num = self.num.scale(&c.recip(), &m.inv());
        Ok(Self::reduced(num, den))
    }

    fn reduced(mut num: LaurentPoly, mut den: Vec<(LaurentPoly, u32)>) -> Self {
        if num.is_zero() {
            return Scalar::default();
        }
        for (f, mult) in den.iter_mut() {
            while *mult > 0 {
                match num.exact_div(f) {
                    Some(q) => {
                        num = q;
                        *mult -= 1;
                    }
                    None => break,
                }
            }
        }
        den.retain(|(_, m)| *m > 0);
        Scalar { num, den }
    }

    /// Evaluates under an assignment.
    pub fn specialize(&self, a: &Assignment) -> Result<Cyclo> {
        let num = a.eval_poly(&self.num)?;
        let mut den = Cyclo::one();
        for (f, m) in &self.den {
            let v = a.eval_poly(f)?;
            if v.is_zero() {
                return Err(Error::VanishingDenominator {
                    factor: f.to_string(),
                });
            }
            den = den.mul(&v.pow(i64::from(*m))?);
        }
        num.div(&den)
    }

    /// Re-runs cancellation; a no-op on already reduced values.
    pub fn normalize(&self) -> Self {
        Self::reduced(self.num.clone(), self.den.clone())
    }
}

/// Adds `p^mult` to a factor list, splitting `p` against existing factors.
fn push_factor(den: &mut Vec<(LaurentPoly, u32)>, mut p: LaurentPoly, mult: u32) {
    loop {
        if p.len() <= 1 {
            return;
        }
        if let Some(entry) = den.iter_mut().find(|(f, _)| *f == p) {
            entry.1 += mult;
            return;
        }
        let split = den
            .iter()
            .position(|(f, _)| p.len() > f.len() && p.exact_div(f).is_some());
        match split {
            Some(i) => {
                let q = p.exact_div(&den[i].0).expect("checked above");
                den[i].1 += mult;
                p = q;
            }
            None => {
                let pos = den.partition_point(|(f, _)| *f < p);
                den.insert(pos, (p, mult));
                return;
            }
        }
    }
}

fn merge_max(a: &[(LaurentPoly, u32)], b: &[(LaurentPoly, u32)]) -> Vec<(LaurentPoly, u32)> {
    let mut out: Vec<(LaurentPoly, u32)> = a.to_vec();
    for (f, m) in b {
        match out.iter_mut().find(|(g, _)| g == f) {
            Some(e) => e.1 = e.1.max(*m),
            None => {
                let pos = out.partition_point(|(g, _)| g < f);
                out.insert(pos, (f.clone(), *m));
            }
        }
    }
    out
}

fn lift(num: &LaurentPoly, have: &[(LaurentPoly, u32)], want: &[(LaurentPoly, u32)]) -> LaurentPoly {
    let mut out = num.clone();
    for (f, m) in want {
        let h = have.iter().find(|(g, _)| g == f).map_or(0, |e| e.1);
        if *m > h {
            out = out.mul(&f.pow(m - h));
        }
    }
    out
}

impl Field for Scalar {
    fn zero() -> Self {
        Scalar::default()
    }

    fn one() -> Self {
        Scalar::from_poly(LaurentPoly::one())
    }

    fn from_rational(r: &BigRational) -> Self {
        Scalar::from_poly(LaurentPoly::constant(r.clone()))
    }

    fn from_int(n: i64) -> Self {
        Scalar::from_poly(LaurentPoly::integer(n))
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        (self.den.is_empty() && self.num.is_one()) || self.sub(&Scalar::one()).is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::reduced(self.num.add(&other.num), self.den.clone());
        }
        let den = merge_max(&self.den, &other.den);
        let a = lift(&self.num, &self.den, &den);
        let b = lift(&other.num, &other.den, &den);
        Self::reduced(a.add(&b), den)
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Scalar::default();
        }
        let num = self.num.mul(&other.num);
        if self.den.is_empty() && other.den.is_empty() {
            return Scalar {
                num,
                den: Vec::new(),
            };
        }
        let mut den = self.den.clone();
        for (f, m) in &other.den {
            match den.iter_mut().find(|(g, _)| g == f) {
                Some(e) => e.1 += m,
                None => {
                    let pos = den.partition_point(|(g, _)| g < f);
                    den.insert(pos, (f.clone(), *m));
                }
            }
        }
        Self::reduced(num, den)
    }

    fn neg(&self) -> Self {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn inv(&self) -> Result<Self> {
        let (c, m, norm) = self.num.split_content().ok_or(Error::DivisionByZero)?;
        let num = self
            .den
            .iter()
            .fold(LaurentPoly::one(), |acc, (f, k)| acc.mul(&f.pow(*k)))
            .scale(&c.recip(), &m.inv());
        let mut den = Vec::new();
        push_factor(&mut den, norm, 1);
        Ok(Self::reduced(num, den))
    }

    fn pow(&self, e: i64) -> Result<Self> {
        if let Some((m, c)) = self.num.as_term() {
            if self.den.is_empty() {
                if c.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                let cc = if e < 0 { c.recip() } else { c.clone() };
                let cc = num_traits::pow(cc, e.unsigned_abs() as usize);
                return Ok(Scalar::from_poly(LaurentPoly::term(
                    cc,
                    m.pow(Exponent::from_integer(e)),
                )));
            }
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    fn complexity(&self) -> usize {
        self.num.len() + self.den.iter().map(|(f, m)| f.len() * *m as usize).sum::<usize>()
    }

    fn from_symbolic(s: &Scalar, assignment: Option<&Assignment>) -> Result<Self> {
        match assignment {
            None => Ok(s.clone()),
            Some(a) => {
                let v = s.specialize(a)?;
                v.as_rational()
                    .map(|r| Scalar::from_rational(&r))
                    .ok_or_else(|| {
                        Error::Specialization(format!("value {v} is not rational"))
                    })
            }
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        (self.num == other.num && self.den == other.den) || self.sub(other).is_zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigInt> for Scalar {
    fn from(n: BigInt) -> Self {
        Scalar::from_rational(&BigRational::from_integer(n))
    }
}

macro_rules! forward_ops {
    ($t:ty) => {
        impl std::ops::Add for &$t {
            type Output = $t;
            fn add(self, rhs: Self) -> $t {
                Field::add(self, rhs)
            }
        }
        impl std::ops::Sub for &$t {
            type Output = $t;
            fn sub(self, rhs: Self) -> $t {
                Field::sub(self, rhs)
            }
        }
        impl std::ops::Mul for &$t {
            type Output = $t;
            fn mul(self, rhs: Self) -> $t {
                Field::mul(self, rhs)
            }
        }
        impl std::ops::Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                Field::neg(self)
            }
        }
    };
}
pub(crate) use forward_ops;

forward_ops!(Scalar);

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        let num = if self.num.len() > 1 {
            format!("({})", self.num)
        } else {
            self.num.to_string()
        };
        let parts: Vec<String> = self
            .den
            .iter()
            .map(|(p, m)| {
                if *m == 1 {
                    format!("({p})")
                } else {
                    format!("({p})^{m}")
                }
            })
            .collect();
        write!(f, "{num} / {}", parts.join("*"))
    }
}
