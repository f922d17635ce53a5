use num_complex::Complex;

use super::grid::Grid;
use crate::error::{Error, Result};
use crate::numerics::{hermitian_min_eigval, Matrix};
use crate::scalar::Real;

/// 2×2 complex coefficient matrix, row-major.
pub type Mat2<T> = [[Complex<T>; 2]; 2];

pub fn mat2_to_matrix<T: Real>(mu: &Mat2<T>) -> Matrix<T> {
    Matrix::from_rows(&[mu[0].to_vec(), mu[1].to_vec()]).expect("2x2")
}

pub fn mat2_real<T: Real>(rows: [[f64; 2]; 2]) -> Mat2<T> {
    let c = |x: f64| Complex::new(T::lit(x), T::zero());
    [[c(rows[0][0]), c(rows[0][1])], [c(rows[1][0]), c(rows[1][1])]]
}

/// Smallest eigenvalue of the Hermitian part of `μ`.
pub fn ellipticity<T: Real>(mu: &Mat2<T>) -> T {
    hermitian_min_eigval(&mat2_to_matrix(mu).hermitian_part()).expect("Hermitian by construction")
}

/// Closed-form coefficient fields, evaluated at triangle centroids.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NamedField<T: Real> {
    /// `[[1, a s], [-a s, 1]]` with `s = sin(πx) sin(πy)`: real, non-symmetric,
    /// Hermitian part the identity.
    Swirl { amplitude: T },
    /// `diag(1 + x, 1) + i b y [[0, 1], [1, 0]]`: complex, coercive for `x ≥ 0`.
    Layered { amplitude: T },
}

impl<T: Real> NamedField<T> {
    pub fn from_name(name: &str, amplitude: T) -> Result<Self> {
        match name {
            "swirl" => Ok(Self::Swirl { amplitude }),
            "layered" => Ok(Self::Layered { amplitude }),
            other => Err(Error::Invalid(format!("unknown named field '{other}'"))),
        }
    }

    pub fn eval(&self, x: T, y: T) -> Mat2<T> {
        let zero = T::zero();
        let one = T::one();
        match *self {
            Self::Swirl { amplitude } => {
                let s = amplitude * (T::PI() * x).sin() * (T::PI() * y).sin();
                [
                    [Complex::new(one, zero), Complex::new(s, zero)],
                    [Complex::new(-s, zero), Complex::new(one, zero)],
                ]
            }
            Self::Layered { amplitude } => {
                let b = amplitude * y;
                [
                    [Complex::new(one + x, zero), Complex::new(zero, b)],
                    [Complex::new(zero, b), Complex::new(one, zero)],
                ]
            }
        }
    }
}

/// Coefficient field `μ : Ω → ℂ^{2×2}`, constant on each triangle.
#[derive(Debug, Clone, PartialEq)]
pub enum CoefficientField<T: Real> {
    Constant(Mat2<T>),
    /// One matrix per grid cell, row-major over cells; both triangles of a
    /// cell share it.
    PerCell(Vec<Mat2<T>>),
    Named(NamedField<T>),
}

fn check_elliptic<T: Real>(mu: &Mat2<T>, at: impl FnOnce() -> String) -> Result<()> {
    if mu.iter().flatten().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    let value = ellipticity(mu);
    if value <= T::zero() {
        return Err(Error::NotElliptic {
            at: at(),
            value: value.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(())
}

impl<T: Real> CoefficientField<T> {
    pub fn constant(mu: Mat2<T>) -> Result<Self> {
        check_elliptic(&mu, || "everywhere".into())?;
        Ok(Self::Constant(mu))
    }

    pub fn per_cell(cells: Vec<Mat2<T>>) -> Result<Self> {
        for (k, mu) in cells.iter().enumerate() {
            check_elliptic(mu, || format!("in cell {k}"))?;
        }
        Ok(Self::PerCell(cells))
    }

    pub fn identity() -> Self {
        Self::Constant(mat2_real([[1.0, 0.0], [0.0, 1.0]]))
    }

    /// Coefficient on every triangle of `grid`, in [`Grid::triangles`] order.
    pub fn on_triangles(&self, grid: &Grid<T>) -> Result<Vec<Mat2<T>>> {
        let tris = grid.triangles();
        if let Self::PerCell(cells) = self {
            if cells.len() != grid.cell_count() {
                return Err(Error::DimensionMismatch {
                    expected: grid.cell_count(),
                    got: cells.len(),
                });
            }
        }
        tris.iter()
            .map(|tri| {
                let (x, y) = grid.centroid(tri);
                let mu = match self {
                    Self::Constant(mu) => *mu,
                    Self::PerCell(cells) => cells[tri.cell],
                    Self::Named(f) => f.eval(x, y),
                };
                check_elliptic(&mu, || format!("at ({x}, {y})"))?;
                Ok(mu)
            })
            .collect()
    }
}
