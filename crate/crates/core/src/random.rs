//! Seeded random matrices and vectors for property checks.

use num_complex::Complex;

use crate::numerics::{hermitian_eigs, hermitian_min_eigval, operator_norm, Matrix, Vector};
use crate::rng::SplitMix64;
use crate::scalar::Real;

pub fn complex_normal<T: Real>(rng: &mut SplitMix64) -> Complex<T> {
    let re = rng.normal();
    let im = rng.normal();
    Complex::new(T::lit(re), T::lit(im))
}

/// Entries i.i.d. complex Gaussian.
pub fn gaussian_matrix<T: Real>(rng: &mut SplitMix64, n: usize) -> Matrix<T> {
    let data = (0..n * n).map(|_| complex_normal(rng)).collect();
    Matrix::from_row_major(n, data).expect("finite entries")
}

pub fn hermitian_matrix<T: Real>(rng: &mut SplitMix64, n: usize) -> Matrix<T> {
    gaussian_matrix(rng, n).hermitian_part()
}

pub fn unit_vector<T: Real>(rng: &mut SplitMix64, n: usize) -> Vector<T> {
    Vector((0..n).map(|_| complex_normal(rng)).collect()).normalized()
}

/// Unitary matrix from the eigenvectors of a random Hermitian matrix.
pub fn unitary_matrix<T: Real>(rng: &mut SplitMix64, n: usize) -> Matrix<T> {
    hermitian_eigs(&hermitian_matrix::<T>(rng, n))
        .expect("Hermitian by construction")
        .vectors
}

/// Random Gaussian matrix shifted along the identity so that the smallest
/// eigenvalue of its Hermitian part is `c * ‖G‖` with `c` uniform in
/// `[lo, hi]`.
pub fn coercive_matrix<T: Real>(rng: &mut SplitMix64, n: usize, lo: f64, hi: f64) -> Matrix<T> {
    let g = gaussian_matrix::<T>(rng, n);
    let scale = operator_norm(&g);
    let target = T::lit(rng.uniform_in(lo, hi)) * scale;
    let current = hermitian_min_eigval(&g.hermitian_part()).expect("Hermitian by construction");
    g.shifted(Complex::new(target - current, T::zero()))
}
