//! Quantum integers, factorials and binomial coefficients.
//!
//! All three are computed as polynomials in `v`, so they are defined (and
//! exact) even where `v − 1` is not invertible.

use super::Field;
use crate::error::{Error, Result};

/// `(n)_v = 1 + v + ⋯ + v^{n−1}`.
pub fn q_int<F: Field>(n: u32, v: &F) -> F {
    let mut acc = F::zero();
    let mut p = F::one();
    for _ in 0..n {
        acc = acc.add(&p);
        p = p.mul(v);
    }
    acc
}

/// `(n)_v! = (1)_v (2)_v ⋯ (n)_v`.
pub fn q_factorial<F: Field>(n: u32, v: &F) -> F {
    (1..=n).fold(F::one(), |acc, k| acc.mul(&q_int(k, v)))
}

/// Gaussian binomial, built row by row from
/// `[n, k] = v^{n−k}[n−1, k−1] + [n−1, k]`.
pub fn q_binomial<F: Field>(n: u32, k: u32, v: &F) -> Result<F> {
    if k > n {
        return Err(Error::BinomialRange { n, k });
    }
    let mut row: Vec<F> = vec![F::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m as usize + 1);
        for j in 0..=m {
            let left = if j >= 1 {
                let shift = v.pow(i64::from(m - j))?;
                shift.mul(&row[j as usize - 1])
            } else {
                F::zero()
            };
            let right = row.get(j as usize).cloned().unwrap_or_else(F::zero);
            next.push(left.add(&right));
        }
        row = next;
    }
    Ok(row.swap_remove(k as usize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{LaurentPoly, ParamVar, Scalar};

    fn v() -> Scalar {
        Scalar::var(ParamVar::Single)
    }

    fn poly(coeffs: &[i64]) -> Scalar {
        let x = v();
        coeffs
            .iter()
            .enumerate()
            .fold(Scalar::zero(), |acc, (k, &c)| {
                acc.add(&Scalar::from_int(c).mul(&x.pow(k as i64).unwrap()))
            })
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(q_binomial(2, 1, &v()).unwrap(), poly(&[1, 1]));
        assert_eq!(q_binomial(7, 0, &v()).unwrap(), Scalar::one());
        assert_eq!(q_binomial(4, 2, &v()).unwrap(), poly(&[1, 1, 2, 1, 1]));
        assert!(q_binomial(2, 3, &v()).is_err());
    }

    #[test]
    fn binomial_matches_factorial_quotient() {
        let x = v();
        for n in 0..8 {
            for k in 0..=n {
                let b = q_binomial(n, k, &x).unwrap();
                let f = q_factorial(n, &x)
                    .div(&q_factorial(k, &x).mul(&q_factorial(n - k, &x)))
                    .unwrap();
                assert_eq!(b, f);
                assert!(b.is_polynomial());
            }
        }
    }

    #[test]
    fn q_int_equals_geometric_quotient() {
        let x = v();
        let one = Scalar::one();
        for n in 0..7 {
            let lhs = q_int(n, &x);
            let rhs = x.pow(i64::from(n)).unwrap().sub(&one).div(&x.sub(&one)).unwrap();
            assert_eq!(lhs, rhs);
        }
        assert_eq!(q_int(3, &x).numerator(), &LaurentPoly::one().add(&x.numerator().clone()).add(&x.numerator().mul(x.numerator())));
    }
}
