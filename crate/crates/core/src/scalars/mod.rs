//! Exact coefficient arithmetic.
//!
//! Two coefficient fields are provided: [`Scalar`], the fraction field of
//! Laurent polynomials in the parameters, and [`Cyclo`], elements of a
//! cyclotomic field used once the parameters are specialized to roots of
//! unity. Everything above this layer is generic over [`Field`].

mod cyclotomic;
mod laurent;
pub mod linalg;
mod qnum;
mod scalar;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::Result;

pub use cyclotomic::{cyclotomic_polynomial, Cyclo};
pub use laurent::{Exponent, LaurentPoly, Monomial, ParamVar};
pub use linalg::{solve_linear, LinearQuery, LinearResult, Matrix};
pub use qnum::{q_binomial, q_factorial, q_int};
pub use scalar::{Assignment, Scalar, SpecValue};

/// A commutative field with exact arithmetic.
///
/// The method names shadow `std::ops`; the concrete types also implement the
/// operator traits on references so `&a * &b` works in non-generic code.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: &BigRational) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;

    /// Size measure used to pick cheap pivots.
    fn complexity(&self) -> usize;

    /// Brings a symbolic value into this field, evaluating through the
    /// assignment when one is given.
    fn from_symbolic(s: &Scalar, assignment: Option<&Assignment>) -> Result<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    fn is_one(&self) -> bool {
        self.sub(&Self::one()).is_zero()
    }

    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&sq);
            }
            n >>= 1;
            if n > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }
}
