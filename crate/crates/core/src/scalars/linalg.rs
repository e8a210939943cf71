//! Dense exact linear algebra over any [`Field`].
//!
//! Gauss–Jordan elimination with the cheapest available pivot in each
//! column, measured by [`Field::complexity`].

use std::fmt;

use super::Field;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).add(&a.mul(b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, F::add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, F::sub)
    }

    fn zip(&self, other: &Self, f: impl Fn(&F, &F) -> F) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension("shape mismatch".into()));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(F::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect()
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows)
                .filter(|&i| !m.get(i, c).is_zero())
                .min_by_key(|&i| m.get(i, c).complexity())
            else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j).mul(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let pv = m.get(r, j);
                    if pv.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j).sub(&f.mul(pv));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of `{x : M x = 0}`, each vector checked against `M`.
    pub fn kernel_basis(&self) -> Result<Vec<Vec<F>>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![F::zero(); self.cols];
            v[f] = F::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = r.get(row, f).neg();
            }
            if self.mul_vec(&v).iter().any(|x| !x.is_zero()) {
                return Err(Error::Internal("kernel vector fails back-substitution".into()));
            }
            basis.push(v);
        }
        Ok(basis)
    }

    /// One solution of `M x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &[F]) -> Result<Option<Vec<F>>> {
        if rhs.len() != self.rows {
            return Err(Error::Dimension("right-hand side length".into()));
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, rhs[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![F::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(row, self.cols).clone();
        }
        if self.mul_vec(&x) != rhs {
            return Err(Error::Internal("solution fails back-substitution".into()));
        }
        Ok(Some(x))
    }

    pub fn det(&self) -> Result<F> {
        if self.rows != self.cols {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let mut m = self.clone();
        let n = self.rows;
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n)
                .filter(|&i| !m.get(i, c).is_zero())
                .min_by_key(|&i| m.get(i, c).complexity())
            else {
                return Ok(F::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = det.neg();
            }
            let pivot = m.get(c, c).clone();
            det = det.mul(&pivot);
            let inv = pivot.inv()?;
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).mul(&inv);
                for j in c..n {
                    let v = m.get(i, j).sub(&f.mul(m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }
}

impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// The questions [`solve_linear`] answers.
#[derive(Clone, Debug)]
pub enum LinearQuery<F> {
    Rank,
    KernelBasis,
    Solve(Vec<F>),
    Det,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LinearResult<F> {
    Rank(usize),
    KernelBasis(Vec<Vec<F>>),
    Solution(Vec<F>),
    NoSolution,
    Det(F),
}

pub fn solve_linear<F: Field>(m: &Matrix<F>, query: LinearQuery<F>) -> Result<LinearResult<F>> {
    Ok(match query {
        LinearQuery::Rank => LinearResult::Rank(m.rank()),
        LinearQuery::KernelBasis => LinearResult::KernelBasis(m.kernel_basis()?),
        LinearQuery::Solve(b) => match m.solve(&b)? {
            Some(x) => LinearResult::Solution(x),
            None => LinearResult::NoSolution,
        },
        LinearQuery::Det => LinearResult::Det(m.det()?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{ParamVar, Scalar};

    fn cofactor_det(m: &Matrix<Scalar>) -> Scalar {
        let n = m.rows();
        if n == 0 {
            return Scalar::one();
        }
        let mut acc = Scalar::zero();
        for j in 0..n {
            let minor: Vec<Vec<Scalar>> = (1..n)
                .map(|i| (0..n).filter(|&c| c != j).map(|c| m.get(i, c).clone()).collect())
                .collect();
            let sub = cofactor_det(&Matrix::from_rows(minor).unwrap_or_else(|_| Matrix::zeros(0, 0)));
            let term = m.get(0, j).mul(&sub);
            acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    fn q(i: u8, j: u8) -> Scalar {
        Scalar::var(ParamVar::Q(i, j))
    }

    #[test]
    fn identity_rank_and_det() {
        let m: Matrix<Scalar> = Matrix::identity(3);
        assert_eq!(m.rank(), 3);
        assert!(m.det().unwrap().is_one());
    }

    #[test]
    fn proportional_rows_have_kernel() {
        let m = Matrix::from_rows(vec![vec![q(0, 0), q(0, 0)], vec![Scalar::one(), Scalar::one()]]).unwrap();
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis().unwrap();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0][0], k[0][1].neg());
    }

    #[test]
    fn inconsistent_system_is_a_value() {
        let m = Matrix::from_rows(vec![vec![Scalar::one()], vec![Scalar::one()]]).unwrap();
        let r = solve_linear(&m, LinearQuery::Solve(vec![Scalar::one(), Scalar::zero()])).unwrap();
        assert_eq!(r, LinearResult::NoSolution);
    }

    #[test]
    fn elimination_det_matches_cofactor_expansion() {
        let x = q(0, 0);
        let y = q(0, 1);
        let one = Scalar::one();
        let rows = vec![
            vec![x.clone(), y.clone(), one.clone()],
            vec![one.clone(), x.add(&y), y.mul(&y)],
            vec![x.mul(&y), one.clone(), x.sub(&one)],
        ];
        let m = Matrix::from_rows(rows).unwrap();
        assert_eq!(m.det().unwrap(), cofactor_det(&m));
    }
}
