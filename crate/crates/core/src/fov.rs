//! Numerical range `Λ(T) = { (Tu, u) : ‖u‖ = 1 }` by the rotation method.
//!
//! For each direction `φ` the top eigenpair of `Re(e^{-iφ} T)` gives the support
//! value `h(φ)` and a boundary point `(T u_φ, u_φ)`. The half-planes
//! `Re(e^{-iφ} z) ≤ h(φ)` bound a polygon containing `Λ(T)`.

use num_complex::Complex;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{hermitian_eigs, hermitian_max_eigval, operator_norm, Matrix};
use crate::random::unit_vector;
use crate::rng::SplitMix64;
use crate::scalar::{arg, cis, Real};
use crate::sector::minimal_enclosing_angle;

pub const DEFAULT_N_ANGLES: usize = 720;

/// Sampled boundary of the numerical range.
#[derive(Debug, Clone, PartialEq)]
pub struct FovBoundary<T: Real> {
    pub angles: Vec<T>,
    pub support: Vec<T>,
    pub points: Vec<Complex<T>>,
}

fn rotated_real_part<T: Real>(t: &Matrix<T>, phi: T) -> Matrix<T> {
    t.scale(cis(-phi)).hermitian_part()
}

/// Support value `h(φ) = λ_max(Re(e^{-iφ} T))` and the boundary point it exposes.
pub fn support_point<T: Real>(t: &Matrix<T>, phi: T) -> Result<(T, Complex<T>)> {
    let eig = hermitian_eigs(&rotated_real_part(t, phi))?;
    let top = t.dim() - 1;
    let u = eig.vector(top);
    Ok((eig.values[top], t.quadratic_form(&u)?))
}

/// Support value only.
pub fn support_value<T: Real>(t: &Matrix<T>, phi: T) -> Result<T> {
    hermitian_max_eigval(&rotated_real_part(t, phi))
}

/// Uniform grid `φ_k = 2πk / n`.
pub fn fov_boundary<T: Real>(t: &Matrix<T>, n_angles: usize) -> Result<FovBoundary<T>> {
    if n_angles < 8 {
        return Err(Error::Domain(format!("n_angles = {n_angles} must be at least 8")));
    }
    let step = T::TAU() / T::lit(n_angles as f64);
    let angles: Vec<T> = (0..n_angles).map(|k| step * T::lit(k as f64)).collect();
    let pairs = angles
        .par_iter()
        .map(|&phi| support_point(t, phi))
        .collect::<Result<Vec<_>>>()?;
    let (support, points) = pairs.into_iter().unzip();
    Ok(FovBoundary {
        angles,
        support,
        points,
    })
}

impl<T: Real> FovBoundary<T> {
    /// Whether `z` satisfies every sampled support inequality up to `tol`.
    pub fn hull_contains(&self, z: Complex<T>, tol: T) -> bool {
        self.angles
            .iter()
            .zip(&self.support)
            .all(|(&phi, &h)| (cis(-phi) * z).re <= h + tol)
    }

    /// Vertices of the circumscribed polygon: intersections of consecutive
    /// support lines. Contains `Λ(T)`.
    pub fn outer_vertices(&self) -> Vec<Complex<T>> {
        let n = self.angles.len();
        (0..n)
            .map(|k| {
                let j = (k + 1) % n;
                let (a1, h1) = (self.angles[k], self.support[k]);
                let (a2, h2) = (self.angles[j], self.support[j]);
                // cos(a) x + sin(a) y = h for both lines.
                let det = (a2 - a1).sin();
                let x = (h1 * a2.sin() - h2 * a1.sin()) / det;
                let y = (a1.cos() * h2 - a2.cos() * h1) / det;
                Complex::new(x, y)
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ContainmentReport<T: Real> {
    pub max_arg: T,
    pub theta: T,
    pub pass: bool,
}

/// Largest argument among the sampled boundary points against `θ`, with slack 1e-8.
pub fn verify_sector_containment<T: Real>(
    t: &Matrix<T>,
    theta: T,
    n_angles: usize,
) -> Result<ContainmentReport<T>> {
    let boundary = fov_boundary(t, n_angles)?;
    Ok(containment_report(&boundary, theta))
}

pub fn containment_report<T: Real>(boundary: &FovBoundary<T>, theta: T) -> ContainmentReport<T> {
    let max_arg = minimal_enclosing_angle(&boundary.points);
    ContainmentReport {
        max_arg,
        theta,
        pass: max_arg <= theta + T::tol(1e-8),
    }
}

/// `(Tu, u)` for seeded pseudo-random unit vectors.
pub fn brute_force_fov_sample<T: Real>(t: &Matrix<T>, n_random: usize, seed: u64) -> Vec<Complex<T>> {
    let mut rng = SplitMix64::new(seed);
    (0..n_random)
        .map(|_| {
            let u = unit_vector::<T>(&mut rng, t.dim());
            t.quadratic_form(&u).expect("matching dimension")
        })
        .collect()
}

/// Largest support value in the outward normal directions of the two edges of
/// `Σ(θ)`. `Λ(T) ⊂ Σ(θ)` iff the result is ≤ 0, for `θ ∈ [0, π/2)`.
pub fn sector_support_margin<T: Real>(t: &Matrix<T>, theta: T) -> Result<T> {
    let normal = theta + T::FRAC_PI_2();
    Ok(support_value(t, normal)?.max(support_value(t, -normal)?))
}

/// Smallest `θ` with `Λ(T) ⊂ Σ(θ)`, by bisection on [`sector_support_margin`].
pub fn tightest_sector_angle<T: Real>(t: &Matrix<T>) -> Result<T> {
    let slack = T::tol(1e-14) * operator_norm(t);
    let contained = |theta: T| sector_support_margin(t, theta).map(|h| h <= slack);
    if contained(T::zero())? {
        return Ok(T::zero());
    }
    let mut hi = T::FRAC_PI_2();
    if !contained(hi)? {
        return Err(Error::NotCoercive(
            (-support_value(t, T::PI())?).to_f64().unwrap_or(f64::NAN),
        ));
    }
    let mut lo = T::zero();
    for _ in 0..64 {
        let mid = (lo + hi) * T::lit(0.5);
        if mid <= lo || mid >= hi {
            break;
        }
        if contained(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// Angle `arctan(√(‖T‖² − m²) / m)` of the sector guaranteed to contain
/// `Λ(T)` for coercive `T` with constant `m`.
pub fn norm_bound_angle<T: Real>(t: &Matrix<T>) -> Result<T> {
    let m = crate::sector::coercivity_constant(t);
    if m <= T::zero() {
        return Err(Error::NotCoercive(m.to_f64().unwrap_or(f64::NAN)));
    }
    let norm = operator_norm(t);
    Ok((((norm - m) * (norm + m)).max(T::zero()).sqrt() / m).atan())
}

/// Largest `|arg|` of the circumscribed polygon; an upper bound on the
/// tightest sector angle.
pub fn outer_enclosing_angle<T: Real>(boundary: &FovBoundary<T>) -> T {
    boundary
        .outer_vertices()
        .iter()
        .fold(T::zero(), |acc, &z| acc.max(arg(z).abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn rot() -> Matrix<f64> {
        Matrix::from_real_rows(&[vec![1.0, 1.0], vec![-1.0, 1.0]]).unwrap()
    }

    #[test]
    fn support_point_examples() {
        let d = Matrix::diag(&[c(1.0, 0.0), c(3.0, 0.0)]);
        let (h, p) = support_point(&d, 0.0).unwrap();
        assert!((h - 3.0).abs() < 1e-14 && (p - c(3.0, 0.0)).norm() < 1e-14);
        let (h, p) = support_point(&d, PI).unwrap();
        assert!((h + 1.0).abs() < 1e-14 && (p - c(1.0, 0.0)).norm() < 1e-14);
        let (h, p) = support_point(&rot(), FRAC_PI_2).unwrap();
        assert!((h - 1.0).abs() < 1e-14 && (p - c(1.0, 1.0)).norm() < 1e-14);
    }

    #[test]
    fn boundary_of_hermitian_is_real_segment() {
        let d = Matrix::diag(&[c(1.0, 0.0), c(3.0, 0.0)]);
        let b = fov_boundary(&d, 64).unwrap();
        for p in &b.points {
            assert!(p.im.abs() < 1e-12 && p.re > 1.0 - 1e-12 && p.re < 3.0 + 1e-12);
        }
    }

    #[test]
    fn boundary_of_rotation_is_vertical_segment() {
        let b = fov_boundary(&rot(), 360).unwrap();
        for p in &b.points {
            assert!((p.re - 1.0).abs() < 1e-8 && p.im.abs() <= 1.0 + 1e-8);
        }
    }

    #[test]
    fn identity_collapses_to_a_point() {
        let b = fov_boundary(&Matrix::<f64>::identity(3), 16).unwrap();
        assert!(b.points.iter().all(|p| (p - c(1.0, 0.0)).norm() < 1e-12));
    }

    #[test]
    fn too_few_angles() {
        assert!(fov_boundary(&rot(), 7).is_err());
    }

    #[test]
    fn containment_is_sharp_for_rotation() {
        let r = verify_sector_containment(&rot(), FRAC_PI_4, DEFAULT_N_ANGLES).unwrap();
        assert!(r.pass && (r.max_arg - FRAC_PI_4).abs() < 1e-12);
        assert!(verify_sector_containment(&Matrix::<f64>::identity(2), 0.0, 64).unwrap().pass);
        assert!(!verify_sector_containment(&rot(), FRAC_PI_4 - 0.01, DEFAULT_N_ANGLES).unwrap().pass);
    }

    #[test]
    fn brute_force_samples() {
        let s = brute_force_fov_sample(&Matrix::<f64>::identity(3), 50, 1);
        assert!(s.iter().all(|z| (z - c(1.0, 0.0)).norm() < 1e-14));
        let s = brute_force_fov_sample(&Matrix::diag(&[c(0.0, 0.0), c(1.0, 0.0)]), 50, 2);
        assert!(s.iter().all(|z| z.im.abs() < 1e-15 && z.re >= -1e-15 && z.re <= 1.0 + 1e-15));
        let s = brute_force_fov_sample(&rot(), 200, 3);
        assert!(s.iter().all(|z| (z.re - 1.0).abs() < 1e-14 && z.im.abs() <= 1.0 + 1e-14));
        assert_eq!(s, brute_force_fov_sample(&rot(), 200, 3));
    }

    #[test]
    fn tightest_angle_of_rotation() {
        let k = tightest_sector_angle(&rot()).unwrap();
        assert!((k - FRAC_PI_4).abs() < 1e-12);
        assert!(tightest_sector_angle(&Matrix::<f64>::identity(2)).unwrap() < 1e-12);
        let nil = Matrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert!(tightest_sector_angle(&nil).is_err());
    }

    #[test]
    fn outer_polygon_bounds_angle_from_above() {
        let b = fov_boundary(&rot(), 720).unwrap();
        let outer = outer_enclosing_angle(&b);
        assert!((FRAC_PI_4 - 1e-12..FRAC_PI_4 + 1e-2).contains(&outer));
    }
}
