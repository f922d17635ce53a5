//! Cyclic Jacobi eigensolver for complex Hermitian matrices.

use num_complex::Complex;
use num_traits::Zero;

use super::matrix::{Matrix, Vector};
use crate::error::{Error, Result};
use crate::scalar::Real;

pub const MAX_SWEEPS: usize = 60;

/// Eigenpairs of a Hermitian matrix, eigenvalues ascending.
#[derive(Debug, Clone)]
pub struct HermitianEigen<T: Real> {
    pub values: Vec<T>,
    /// Columns are unit eigenvectors matching `values`.
    pub vectors: Matrix<T>,
}

impl<T: Real> HermitianEigen<T> {
    pub fn vector(&self, k: usize) -> Vector<T> {
        self.vectors.column(k)
    }

    pub fn pairs(&self) -> Vec<(T, Vector<T>)> {
        self.values
            .iter()
            .enumerate()
            .map(|(k, &v)| (v, self.vector(k)))
            .collect()
    }
}

/// Checks the Hermitian tolerance `1e-12 * max|h_ij|` and returns the exactly
/// symmetrized matrix.
pub(crate) fn symmetrized<T: Real>(h: &Matrix<T>) -> Result<Matrix<T>> {
    let dev = h.hermitian_deviation();
    let tolerance = T::tol(1e-12) * h.max_abs();
    if dev > tolerance {
        return Err(Error::NotHermitian {
            deviation: dev.to_f64().unwrap_or(f64::NAN),
            tolerance: tolerance.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(h.hermitian_part())
}

fn off_diagonal_mass<T: Real>(a: &Matrix<T>) -> T {
    let n = a.dim();
    let mut s = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Full eigendecomposition by cyclic Jacobi rotations.
///
/// Stops once the off-diagonal Frobenius mass falls below `1e-13 * ‖H‖_F`.
/// Degenerate eigenspaces come back as an arbitrary orthonormal basis.
pub fn hermitian_eigs<T: Real>(h: &Matrix<T>) -> Result<HermitianEigen<T>> {
    let mut a = symmetrized(h)?;
    let n = a.dim();
    let mut v = Matrix::<T>::identity(n);
    let target = T::tol(1e-13) * a.frobenius_norm();

    let mut converged = off_diagonal_mass(&a) <= target;
    let mut sweeps = 0;
    while !converged {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        converged = off_diagonal_mass(&a) <= target;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.partial_cmp(&a[(j, j)].re).unwrap());
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let cols: Vec<Vector<T>> = order.iter().map(|&i| v.column(i)).collect();
    Ok(HermitianEigen {
        values,
        vectors: Matrix::from_columns(&cols)?,
    })
}

/// Annihilates `a[p][q]` with the unitary
/// `U = [[c, s e^{iα}], [-s e^{-iα}, c]]` on coordinates (p, q),
/// where `a[p][q] = |a[p][q]| e^{iα}`; `a ← Uᴴ a U`, `v ← v U`.
fn rotate<T: Real>(a: &mut Matrix<T>, v: &mut Matrix<T>, p: usize, q: usize) {
    let g = a[(p, q)];
    let g_abs = g.norm();
    if g_abs == T::zero() {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    // Off-diagonal entry already negligible against both diagonal entries.
    if g_abs <= T::epsilon() * T::lit(0.01) * (app.abs().min(aqq.abs())) {
        a[(p, q)] = Complex::zero();
        a[(q, p)] = Complex::zero();
        return;
    }
    let phase = g / g_abs;
    let theta = (aqq - app) / (T::lit(2.0) * g_abs);
    let t = if theta.is_infinite() {
        T::zero()
    } else {
        let sign = if theta >= T::zero() { T::one() } else { -T::one() };
        sign / (theta.abs() + (theta * theta + T::one()).sqrt())
    };
    let c = T::one() / (t * t + T::one()).sqrt();
    let s = t * c;
    let c_c = Complex::new(c, T::zero());
    let s_ph = phase * s; // s e^{iα}
    let s_ph_conj = s_ph.conj(); // s e^{-iα}

    let n = a.dim();
    // Columns: A U.
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = c_c * akp - s_ph_conj * akq;
        a[(k, q)] = s_ph * akp + c_c * akq;
    }
    // Rows: Uᴴ (A U).
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = c_c * apk - s_ph * aqk;
        a[(q, k)] = s_ph_conj * apk + c_c * aqk;
    }
    a[(p, q)] = Complex::zero();
    a[(q, p)] = Complex::zero();
    a[(p, p)] = Complex::new(app - t * g_abs, T::zero());
    a[(q, q)] = Complex::new(aqq + t * g_abs, T::zero());

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = c_c * vkp - s_ph_conj * vkq;
        v[(k, q)] = s_ph * vkp + c_c * vkq;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn diagonal_is_sorted() {
        let h = Matrix::diag(&[c(3.0, 0.0), c(1.0, 0.0)]);
        let e = hermitian_eigs(&h).unwrap();
        assert_eq!(e.values, vec![1.0, 3.0]);
    }

    #[test]
    fn pauli_y() {
        let h = Matrix::from_rows(&[vec![c(0.0, 0.0), c(0.0, -1.0)], vec![c(0.0, 1.0), c(0.0, 0.0)]])
            .unwrap();
        let e = hermitian_eigs(&h).unwrap();
        assert!((e.values[0] + 1.0).abs() < 1e-14);
        assert!((e.values[1] - 1.0).abs() < 1e-14);
        for (lam, v) in e.pairs() {
            let hv = h.mul_vec(&v).unwrap();
            let res: f64 = hv.0.iter().zip(&v.0).map(|(a, b)| (a - b * lam).norm_sqr()).sum();
            assert!(res.sqrt() < 1e-12);
        }
    }

    #[test]
    fn identity_any_basis() {
        let e = hermitian_eigs(&Matrix::<f64>::identity(4)).unwrap();
        assert!(e.values.iter().all(|&x| (x - 1.0).abs() < 1e-15));
        let g = &e.vectors.adjoint() * &e.vectors;
        assert!((&g - &Matrix::identity(4)).max_abs() < 1e-12);
    }

    #[test]
    fn rejects_non_hermitian() {
        let h = Matrix::from_real_rows(&[vec![1.0, 2.0], vec![0.0, 1.0]]).unwrap();
        assert!(matches!(hermitian_eigs(&h), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn works_in_f32() {
        let h = Matrix::<f32>::from_real_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let e = hermitian_eigs(&h).unwrap();
        assert!((e.values[0] - 1.0).abs() < 1e-5);
        assert!((e.values[1] - 3.0).abs() < 1e-5);
    }

    #[test]
    fn one_by_one() {
        let e = hermitian_eigs(&Matrix::diag(&[c(-2.5, 0.0)])).unwrap();
        assert_eq!(e.values, vec![-2.5]);
        assert_eq!(e.vectors[(0, 0)], Complex::one());
    }
}
