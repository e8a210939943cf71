//! Cyclotomic fields `Q(ζ_N)`.
//!
//! Elements are polynomials in `ζ` reduced modulo the `N`-th cyclotomic
//! polynomial. A value without a field tag is a plain rational and promotes
//! into any cyclotomic field on contact.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::scalar::forward_ops;
use super::{Assignment, Field, Scalar};
use crate::error::{Error, Result};

type Poly = Vec<BigRational>;

#[derive(Debug, PartialEq, Eq)]
struct CycloField {
    order: u32,
    /// Monic `Φ_N`, lowest degree first.
    modulus: Poly,
}

#[derive(Clone, Debug)]
pub struct Cyclo {
    field: Option<Arc<CycloField>>,
    coeffs: Poly,
}

fn trim(p: &mut Poly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_sub(a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    let mut out: Poly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(&mut out);
    out
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
fn poly_divrem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let mut r = a.clone();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = b[db].clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let c = &r[r.len() - 1] / &lb;
        for (i, y) in b.iter().enumerate() {
            r[k + i] -= &c * y;
        }
        q[k] = c;
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

/// The `n`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    let n = n.max(1);
    let mut p: Poly = vec![BigRational::zero(); n as usize + 1];
    p[0] = -BigRational::one();
    p[n as usize] = BigRational::one();
    for d in 1..n {
        if n % d == 0 {
            let phi: Poly = cyclotomic_polynomial(d)
                .into_iter()
                .map(BigRational::from_integer)
                .collect();
            p = poly_divrem(&p, &phi).0;
        }
    }
    p.into_iter().map(|c| c.to_integer()).collect()
}

impl CycloField {
    fn new(order: u32) -> Self {
        CycloField {
            order,
            modulus: cyclotomic_polynomial(order)
                .into_iter()
                .map(BigRational::from_integer)
                .collect(),
        }
    }

    fn reduce(&self, p: &Poly) -> Poly {
        poly_divrem(p, &self.modulus).1
    }
}

impl Cyclo {
    pub fn rational(r: BigRational) -> Self {
        let mut coeffs = vec![r];
        trim(&mut coeffs);
        Cyclo {
            field: None,
            coeffs,
        }
    }

    /// `ζ_N^k`; orders 1 and 2 give rational values.
    pub fn zeta_power(order: u32, k: i64) -> Self {
        let n = i64::from(order.max(1));
        let k = k.rem_euclid(n);
        match order {
            0 | 1 => Cyclo::one(),
            2 => Cyclo::from_int(if k == 0 { 1 } else { -1 }),
            _ => {
                let field = Arc::new(CycloField::new(order));
                let mut p = vec![BigRational::zero(); k as usize + 1];
                p[k as usize] = BigRational::one();
                let coeffs = field.reduce(&p);
                Cyclo {
                    field: Some(field),
                    coeffs,
                }
            }
        }
    }

    /// A primitive `N`-th root of unity.
    pub fn zeta(order: u32) -> Self {
        Self::zeta_power(order, 1)
    }

    pub fn order(&self) -> u32 {
        self.field.as_ref().map_or(1, |f| f.order)
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut coeffs: Poly = self.coeffs.iter().map(|x| x * c).collect();
        trim(&mut coeffs);
        Cyclo {
            field: self.field.clone(),
            coeffs,
        }
    }

    fn joint_field(&self, other: &Self) -> Option<Arc<CycloField>> {
        match (&self.field, &other.field) {
            (Some(a), Some(b)) => {
                assert_eq!(a.order, b.order, "mixing cyclotomic fields of different order");
                Some(a.clone())
            }
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (None, None) => None,
        }
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for Cyclo {}

impl Field for Cyclo {
    fn zero() -> Self {
        Cyclo {
            field: None,
            coeffs: Vec::new(),
        }
    }

    fn one() -> Self {
        Cyclo::rational(BigRational::one())
    }

    fn from_rational(r: &BigRational) -> Self {
        Cyclo::rational(r.clone())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    fn add(&self, other: &Self) -> Self {
        Cyclo {
            field: self.joint_field(other),
            coeffs: poly_sub(&self.coeffs, &other.neg().coeffs),
        }
    }

    fn sub(&self, other: &Self) -> Self {
        Cyclo {
            field: self.joint_field(other),
            coeffs: poly_sub(&self.coeffs, &other.coeffs),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        let field = self.joint_field(other);
        let prod = poly_mul(&self.coeffs, &other.coeffs);
        let coeffs = match &field {
            Some(f) => f.reduce(&prod),
            None => prod,
        };
        Cyclo { field, coeffs }
    }

    fn neg(&self) -> Self {
        Cyclo {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let Some(field) = &self.field else {
            return Ok(Cyclo::rational(self.coeffs[0].recip()));
        };
        // Extended Euclid: track s with s·a ≡ r (mod Φ).
        let (mut r0, mut r1) = (field.modulus.clone(), self.coeffs.clone());
        let (mut s0, mut s1): (Poly, Poly) = (Vec::new(), vec![BigRational::one()]);
        while r1.len() > 1 {
            let (q, r) = poly_divrem(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        if r1.is_empty() {
            return Err(Error::DivisionByZero);
        }
        let c = r1[0].recip();
        let coeffs = field.reduce(&s1.iter().map(|x| x * &c).collect());
        Ok(Cyclo {
            field: Some(field.clone()),
            coeffs,
        })
    }

    fn complexity(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    fn from_symbolic(s: &Scalar, assignment: Option<&Assignment>) -> Result<Self> {
        match assignment {
            Some(a) => s.specialize(a),
            None => s.as_rational().map(Cyclo::rational).ok_or_else(|| {
                Error::Specialization(format!("symbolic value {s} needs an assignment"))
            }),
        }
    }
}

forward_ops!(Cyclo);

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let z = format!("z{}", self.order());
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let cs = if abs.is_integer() {
                abs.numer().to_string()
            } else {
                format!("{}/{}", abs.numer(), abs.denom())
            };
            match k {
                0 => write!(f, "{cs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{cs}*")?;
                    }
                    write!(f, "{z}")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(5), ints(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn zeta_has_exact_order() {
        for n in [3u32, 5, 7, 9, 12] {
            let z = Cyclo::zeta(n);
            assert!(z.pow(i64::from(n)).unwrap().is_one());
            for k in 1..n {
                assert!(!z.pow(i64::from(k)).unwrap().is_one(), "order {n} power {k}");
            }
        }
    }

    #[test]
    fn inverses_are_exact() {
        let z = Cyclo::zeta(5);
        let x = z.add(&Cyclo::from_int(2)).mul(&z);
        let y = x.inv().unwrap();
        assert!(x.mul(&y).is_one());
    }

    #[test]
    fn rationals_promote() {
        let z = Cyclo::zeta(5);
        let s = z.add(&Cyclo::one()).sub(&z);
        assert!(s.is_one());
        assert_eq!(Cyclo::zeta_power(2, 1), Cyclo::from_int(-1));
    }
}
