use num_complex::Complex;
use num_traits::Zero;

use super::matrix::{Matrix, Vector};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// LU factorization with row pivoting, `P A = L U`.
#[derive(Debug, Clone)]
pub struct Lu<T: Real> {
    lu: Matrix<T>,
    perm: Vec<usize>,
}

impl<T: Real> Lu<T> {
    /// Fails with [`Error::Singular`] when a pivot drops below `1e-14 * max|a_ij|`.
    pub fn factor(a: &Matrix<T>) -> Result<Self> {
        let n = a.dim();
        let mut lu = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let threshold = T::tol(1e-14) * a.max_abs();
        for k in 0..n {
            let (piv_row, piv_abs) = (k..n)
                .map(|i| (i, lu[(i, k)].norm()))
                .fold((k, -T::one()), |best, cur| if cur.1 > best.1 { cur } else { best });
            if piv_abs <= threshold || piv_abs == T::zero() {
                return Err(Error::Singular {
                    column: k,
                    pivot: piv_abs.to_f64().unwrap_or(0.0),
                });
            }
            if piv_row != k {
                perm.swap(k, piv_row);
                for j in 0..n {
                    let tmp = lu[(k, j)];
                    lu[(k, j)] = lu[(piv_row, j)];
                    lu[(piv_row, j)] = tmp;
                }
            }
            let pivot = lu[(k, k)];
            for i in k + 1..n {
                let factor = lu[(i, k)] / pivot;
                lu[(i, k)] = factor;
                if factor.is_zero() {
                    continue;
                }
                for j in k + 1..n {
                    let u = lu[(k, j)];
                    lu[(i, j)] -= factor * u;
                }
            }
        }
        Ok(Self { lu, perm })
    }

    pub fn solve(&self, b: &Vector<T>) -> Result<Vector<T>> {
        let n = self.lu.dim();
        if b.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: b.len(),
            });
        }
        let mut x: Vec<Complex<T>> = self.perm.iter().map(|&p| b.0[p]).collect();
        for i in 0..n {
            let mut acc = x[i];
            for j in 0..i {
                acc -= self.lu[(i, j)] * x[j];
            }
            x[i] = acc;
        }
        for i in (0..n).rev() {
            let mut acc = x[i];
            for j in i + 1..n {
                acc -= self.lu[(i, j)] * x[j];
            }
            x[i] = acc / self.lu[(i, i)];
        }
        Ok(Vector(x))
    }

    /// Solves column by column.
    pub fn solve_matrix(&self, b: &Matrix<T>) -> Result<Matrix<T>> {
        let cols = (0..b.dim())
            .map(|j| self.solve(&b.column(j)))
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(&cols)
    }

    pub fn inverse(&self) -> Result<Matrix<T>> {
        self.solve_matrix(&Matrix::identity(self.lu.dim()))
    }
}

/// Solves `t x = b` with row pivoting.
pub fn solve<T: Real>(t: &Matrix<T>, b: &Vector<T>) -> Result<Vector<T>> {
    Lu::factor(t)?.solve(b)
}

