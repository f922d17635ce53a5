//! Dense complex linear algebra: Hermitian eigensolvers, singular values and
//! pivoted LU solves.

mod jacobi;
mod lu;
mod matrix;
mod tridiag;

pub use jacobi::{hermitian_eigs, HermitianEigen, MAX_SWEEPS};
pub use lu::{solve, Lu};
pub use matrix::{Matrix, Vector};
pub use tridiag::hermitian_eigvals;

use crate::scalar::Real;

/// `Tᴴ T`, formed exactly Hermitian.
fn gram<T: Real>(t: &Matrix<T>) -> Matrix<T> {
    (&t.adjoint() * t).hermitian_part()
}

/// Singular values in ascending order, from the eigenvalues of `Tᴴ T`.
pub fn singular_values<T: Real>(t: &Matrix<T>) -> Vec<T> {
    hermitian_eigvals(&gram(t))
        .expect("Gram matrix is Hermitian by construction")
        .into_iter()
        .map(|l| l.max(T::zero()).sqrt())
        .collect()
}

/// Largest singular value.
pub fn operator_norm<T: Real>(t: &Matrix<T>) -> T {
    *singular_values(t).last().expect("nonempty matrix")
}

/// Smallest singular value; zero for singular `t` up to eigensolver accuracy.
pub fn smallest_singular<T: Real>(t: &Matrix<T>) -> T {
    singular_values(t)[0]
}

/// Largest eigenvalue of a Hermitian matrix.
pub fn hermitian_max_eigval<T: Real>(h: &Matrix<T>) -> crate::Result<T> {
    Ok(*hermitian_eigvals(h)?.last().expect("nonempty matrix"))
}

/// Smallest eigenvalue of a Hermitian matrix.
pub fn hermitian_min_eigval<T: Real>(h: &Matrix<T>) -> crate::Result<T> {
    Ok(hermitian_eigvals(h)?[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;
    use num_complex::Complex;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn rot() -> Matrix<f64> {
        Matrix::from_real_rows(&[vec![1.0, 1.0], vec![-1.0, 1.0]]).unwrap()
    }

    #[test]
    fn norms_of_examples() {
        assert!((operator_norm(&rot()) - 2f64.sqrt()).abs() < 1e-14);
        assert!((operator_norm(&Matrix::<f64>::identity(3)) - 1.0).abs() < 1e-15);
        assert!((operator_norm(&Matrix::diag(&[c(2.0, 0.0), c(0.0, -3.0)])) - 3.0).abs() < 1e-14);
    }

    #[test]
    fn smallest_singular_examples() {
        assert!((smallest_singular(&Matrix::diag(&[c(2.0, 0.0), c(5.0, 0.0)])) - 2.0).abs() < 1e-14);
        let ones = Matrix::from_real_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap();
        assert!(smallest_singular(&ones) < 1e-7);
        assert!((smallest_singular(&rot()) - 2f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn solve_examples() {
        let b = Vector(vec![c(1.0, 2.0), c(-3.0, 0.5)]);
        assert_eq!(solve(&Matrix::identity(2), &b).unwrap(), b);

        let d = Matrix::diag(&[c(2.0, 0.0), c(4.0, 0.0)]);
        let x = solve(&d, &Vector(vec![c(2.0, 0.0), c(4.0, 0.0)])).unwrap();
        assert_eq!(x.0, vec![c(1.0, 0.0), c(1.0, 0.0)]);

        // x1 + x2 = 2i, -x1 + x2 = 2: the gradient of -x + y + i(x + y).
        let x = solve(&rot(), &Vector(vec![c(0.0, 2.0), c(2.0, 0.0)])).unwrap();
        assert!((x.0[0] - c(-1.0, 1.0)).norm() < 1e-15);
        assert!((x.0[1] - c(1.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn singular_solve_is_an_error() {
        let ones = Matrix::from_real_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap();
        assert!(matches!(solve(&ones, &Vector::zeros(2)), Err(Error::Singular { .. })));
    }

    #[test]
    fn eigvals_agree_with_jacobi_on_pauli() {
        let h = Matrix::from_rows(&[vec![c(0.0, 0.0), c(0.0, -1.0)], vec![c(0.0, 1.0), c(0.0, 0.0)]])
            .unwrap();
        let v = hermitian_eigvals(&h).unwrap();
        assert!((v[0] + 1.0).abs() < 1e-15 && (v[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_ragged_input() {
        let rows = vec![vec![c(1.0, 0.0), c(0.0, 0.0)], vec![c(1.0, 0.0)]];
        assert!(matches!(Matrix::from_rows(&rows), Err(Error::NotSquare { .. })));
        assert!(matches!(
            Matrix::from_row_major(2, vec![c(f64::NAN, 0.0); 4]),
            Err(Error::NonFinite)
        ));
    }
}
