use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T: Real> {
    n: usize,
    data: Vec<Complex<T>>,
}

/// Dense complex vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector<T: Real>(pub Vec<Complex<T>>);

impl<T: Real> Matrix<T> {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Complex::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex::one();
        }
        m
    }

    /// Builds a matrix from `n * n` row-major entries, rejecting non-finite values.
    pub fn from_row_major(n: usize, data: Vec<Complex<T>>) -> Result<Self> {
        if n == 0 || data.len() != n * n {
            return Err(Error::NotSquare {
                rows: n,
                len: data.len(),
            });
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { n, data })
    }

    /// Builds from nested rows; every row must have the same length as the row count.
    pub fn from_rows(rows: &[Vec<Complex<T>>]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            if r.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    len: n * r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Self::from_row_major(n, data)
    }

    /// Real-valued convenience constructor.
    pub fn from_real_rows(rows: &[Vec<T>]) -> Result<Self> {
        let rows: Vec<Vec<Complex<T>>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Complex::new(x, T::zero())).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn diag(values: &[Complex<T>]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Complex<T>] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn adjoint(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|&z| z * s).collect(),
        }
    }

    /// `self + shift * I`.
    pub fn shifted(&self, shift: Complex<T>) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            out[(i, i)] += shift;
        }
        out
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |acc, z| acc.max(z.norm()))
    }

    pub fn frobenius_norm(&self) -> T {
        self.data.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()
    }

    /// Largest modulus of `self - selfᴴ`.
    pub fn hermitian_deviation(&self) -> T {
        let n = self.n;
        let mut dev = T::zero();
        for i in 0..n {
            for j in i..n {
                dev = dev.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        dev
    }

    /// `(self + selfᴴ) / 2`, exactly Hermitian.
    pub fn hermitian_part(&self) -> Self {
        let n = self.n;
        let half = T::lit(0.5);
        let mut out = Self::zeros(n);
        for i in 0..n {
            out[(i, i)] = Complex::new(self[(i, i)].re, T::zero());
            for j in i + 1..n {
                let v = (self[(i, j)] + self[(j, i)].conj()) * half;
                out[(i, j)] = v;
                out[(j, i)] = v.conj();
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &Vector<T>) -> Result<Vector<T>> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        Ok(Vector(
            (0..self.n)
                .map(|i| {
                    self.row(i)
                        .iter()
                        .zip(&x.0)
                        .fold(Complex::zero(), |acc, (&a, &b)| acc + a * b)
                })
                .collect(),
        ))
    }

    /// `(self x, x) = xᴴ self x`.
    pub fn quadratic_form(&self, x: &Vector<T>) -> Result<Complex<T>> {
        let y = self.mul_vec(x)?;
        Ok(x.inner(&y))
    }

    /// Principal submatrix on the given index set.
    pub fn submatrix(&self, idx: &[usize]) -> Self {
        let k = idx.len();
        let mut out = Self::zeros(k);
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                out[(a, b)] = self[(i, j)];
            }
        }
        out
    }

    pub fn column(&self, j: usize) -> Vector<T> {
        Vector((0..self.n).map(|i| self[(i, j)]).collect())
    }

    pub fn from_columns(cols: &[Vector<T>]) -> Result<Self> {
        let n = cols.len();
        let mut m = Self::zeros(n);
        for (j, c) in cols.iter().enumerate() {
            if c.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: c.len(),
                });
            }
            for i in 0..n {
                m[(i, j)] = c.0[i];
            }
        }
        Ok(m)
    }
}

impl<T: Real> Index<(usize, usize)> for Matrix<T> {
    type Output = Complex<T>;
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i * self.n + j]
    }
}

impl<T: Real> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i * self.n + j]
    }
}

impl<T: Real> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        Matrix {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a + b).collect(),
        }
    }
}

impl<T: Real> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        Matrix {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a - b).collect(),
        }
    }
}

impl<T: Real> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let row = rhs.row(k);
                let dst = &mut out.data[i * n..(i + 1) * n];
                for (d, &b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        out
    }
}

impl<T: Real> Vector<T> {
    pub fn zeros(n: usize) -> Self {
        Vector(vec![Complex::zero(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(self, other)` is conjugate-linear in `self`: returns `selfᴴ other`.
    pub fn inner(&self, other: &Vector<T>) -> Complex<T> {
        self.0
            .iter()
            .zip(&other.0)
            .fold(Complex::zero(), |acc, (&a, &b)| acc + a.conj() * b)
    }

    pub fn norm(&self) -> T {
        self.0.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm();
        Vector(self.0.iter().map(|&z| z / n).collect())
    }

    pub fn sub(&self, other: &Vector<T>) -> Vector<T> {
        Vector(self.0.iter().zip(&other.0).map(|(&a, &b)| a - b).collect())
    }
}
