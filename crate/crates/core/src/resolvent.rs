//! Resolvent-norm scans and rational functional-calculus checks.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use rayon::prelude::*;
use serde::Serialize;

use crate::elliptic::AssembledForm;
use crate::error::{Error, Result};
use crate::fov::sector_support_margin;
use crate::numerics::{operator_norm, singular_values, Lu, Matrix};
use crate::scalar::{cis, Real};
use crate::sector::{distance_to_sector, resolvent_constant, sector_contains};

/// Absolute slack on every pointwise bound comparison.
pub const BOUND_TOL: f64 = 1e-8;

/// `2 + 2/√3`.
pub fn crouzeix_delyon_constant<T: Real>() -> T {
    T::lit(2.0) + T::lit(2.0) / T::lit(3.0).sqrt()
}

/// `‖(A + λI)^{-1}‖ = 1 / σ_min(A + λI)`.
pub fn resolvent_norm<T: Real>(a: &Matrix<T>, lambda: Complex<T>) -> Result<T> {
    let sv = singular_values(&a.shifted(lambda));
    let (smin, smax) = (sv[0], sv[sv.len() - 1]);
    // σ² comes from an eigenvalue of BᴴB, so σ below ~√ε ‖B‖ is indistinguishable from 0.
    if smin == T::zero() || smin * smin <= T::tol(0.0) * smax * smax {
        return Err(Error::InSpectrum);
    }
    Ok(T::one() / smin)
}

fn check_numerical_range<T: Real>(a: &Matrix<T>, kappa: T) -> Result<()> {
    if !(kappa >= T::zero() && kappa < T::FRAC_PI_2()) {
        return Err(Error::Domain(format!("kappa = {kappa} outside [0, pi/2)")));
    }
    let margin = sector_support_margin(a, kappa)?;
    if margin > T::tol(1e-10) * (T::one() + operator_norm(a)) {
        return Err(Error::Precondition(format!(
            "numerical range leaves the sector of half-angle {kappa} (support margin {margin:e})"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KatoSample<T: Real> {
    pub lambda_re: T,
    pub lambda_im: T,
    pub norm: T,
    pub bound: T,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KatoReport<T: Real> {
    pub kappa: T,
    pub samples: Vec<KatoSample<T>>,
    /// Largest `norm - bound`.
    pub max_violation: T,
    pub pass: bool,
}

/// Checks `‖(A + λI)^{-1}‖ ≤ 1 / d(−λ, Σ(κ))` for each `λ` with `−λ ∉ Σ(κ)`.
pub fn kato_bound_check<T: Real>(a: &Matrix<T>, kappa: T, lambdas: &[Complex<T>]) -> Result<KatoReport<T>> {
    check_numerical_range(a, kappa)?;
    if lambdas.iter().any(|&l| sector_contains(-l, kappa, T::zero())) {
        return Err(Error::NotAdmissible);
    }
    let samples = lambdas
        .par_iter()
        .map(|&l| {
            let norm = resolvent_norm(a, l)?;
            Ok(KatoSample {
                lambda_re: l.re,
                lambda_im: l.im,
                norm,
                bound: T::one() / distance_to_sector(-l, kappa),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let max_violation = samples
        .iter()
        .fold(T::neg_infinity(), |acc, s| acc.max(s.norm - s.bound));
    Ok(KatoReport {
        kappa,
        pass: max_violation <= T::lit(BOUND_TOL),
        samples,
        max_violation,
    })
}

/// `count` radii log-spaced over `[min, max]`.
pub fn log_spaced<T: Real>(min: T, max: T, count: usize) -> Result<Vec<T>> {
    if !(min > T::zero() && max >= min) || count == 0 {
        return Err(Error::Domain(format!(
            "radii need 0 < min <= max and count >= 1 (got {min}:{max}:{count})"
        )));
    }
    if count == 1 {
        return Ok(vec![min]);
    }
    let (lo, hi) = (min.ln(), max.ln());
    let step = (hi - lo) / T::lit((count - 1) as f64);
    Ok((0..count)
        .map(|k| if k + 1 == count { max } else { (lo + step * T::lit(k as f64)).exp() })
        .collect())
}

/// Resolvent samples along rays of `Σ(π − θ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ResolventScan<T: Real> {
    pub theta: T,
    pub lambdas: Vec<Complex<T>>,
    pub norms: Vec<T>,
    pub bound_constant: T,
    /// Largest `norm · |λ| − bound_constant`.
    pub max_violation: T,
    pub pass: bool,
}

impl<T: Real> ResolventScan<T> {
    /// Pointwise bound `bound_constant / |λ|`.
    pub fn bounds(&self) -> Vec<T> {
        self.lambdas.iter().map(|l| self.bound_constant / l.norm()).collect()
    }
}

/// Ray angles `ψ_k` spanning `[−(π − θ), π − θ]` uniformly.
pub fn ray_angles<T: Real>(theta: T, n_rays: usize) -> Vec<T> {
    let half = T::PI() - theta;
    if n_rays == 1 {
        return vec![T::zero()];
    }
    let step = T::lit(2.0) * half / T::lit((n_rays - 1) as f64);
    (0..n_rays)
        .map(|k| if k + 1 == n_rays { half } else { -half + step * T::lit(k as f64) })
        .collect()
}

/// Samples `‖(A + λI)^{-1}‖ |λ|` on `λ = r e^{iψ}` and compares with
/// `M / (m sin θ − √(M² − m²) cos θ)` from the field bounds.
pub fn ray_scan<T: Real>(
    form: &AssembledForm<T>,
    theta: T,
    n_rays: usize,
    radii: &[T],
) -> Result<ResolventScan<T>> {
    let angles = &form.field_angles;
    let bound_constant = resolvent_constant(theta, angles.m, angles.big_m)?;
    scan_matrix(&form.a, theta, bound_constant, n_rays, radii)
}

/// [`ray_scan`] on a bare matrix with a given constant.
pub fn scan_matrix<T: Real>(
    a: &Matrix<T>,
    theta: T,
    bound_constant: T,
    n_rays: usize,
    radii: &[T],
) -> Result<ResolventScan<T>> {
    if n_rays == 0 {
        return Err(Error::Domain("n_rays must be at least 1".into()));
    }
    if radii.is_empty() || radii.iter().any(|&r| !(r > T::zero() && r.is_finite())) {
        return Err(Error::Domain("radii must be positive and finite".into()));
    }
    let lambdas: Vec<Complex<T>> = ray_angles(theta, n_rays)
        .into_iter()
        .flat_map(|psi| radii.iter().map(move |&r| cis(psi) * r))
        .collect();
    let norms = lambdas
        .par_iter()
        .map(|&l| resolvent_norm(a, l))
        .collect::<Result<Vec<_>>>()?;
    let max_violation = lambdas
        .iter()
        .zip(&norms)
        .fold(T::neg_infinity(), |acc, (l, &n)| acc.max(n * l.norm() - bound_constant));
    Ok(ResolventScan {
        theta,
        pass: max_violation <= T::lit(BOUND_TOL),
        lambdas,
        norms,
        bound_constant,
        max_violation,
    })
}

/// Rational test functions holomorphic on every sector of half-angle < π and
/// vanishing at 0 and ∞.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RationalFn {
    /// `z/(1+z)^2`
    Bump,
    /// `z^2/(1+z)^3`
    SkewBump,
    /// `1/(1+z) − 1/(2+z)`
    ResolventDifference,
}

impl RationalFn {
    pub const ALL: [RationalFn; 3] = [Self::Bump, Self::SkewBump, Self::ResolventDifference];

    pub fn id(&self) -> &'static str {
        match self {
            Self::Bump => "z/(1+z)^2",
            Self::SkewBump => "z^2/(1+z)^3",
            Self::ResolventDifference => "1/(1+z) - 1/(2+z)",
        }
    }

    pub fn eval<T: Real>(&self, z: Complex<T>) -> Complex<T> {
        let one = Complex::new(T::one(), T::zero());
        let two = Complex::new(T::lit(2.0), T::zero());
        match self {
            Self::Bump => z / ((one + z) * (one + z)),
            Self::SkewBump => z * z / ((one + z) * (one + z) * (one + z)),
            Self::ResolventDifference => one / (one + z) - one / (two + z),
        }
    }

    /// `f(A)` through LU solves; every factor commutes with `A`.
    pub fn apply<T: Real>(&self, a: &Matrix<T>) -> Result<Matrix<T>> {
        let n = a.dim();
        let one = Complex::new(T::one(), T::zero());
        let lu1 = Lu::factor(&a.shifted(one))?;
        match self {
            Self::Bump => lu1.solve_matrix(&lu1.solve_matrix(a)?),
            Self::SkewBump => {
                let a2 = a * a;
                lu1.solve_matrix(&lu1.solve_matrix(&lu1.solve_matrix(&a2)?)?)
            }
            Self::ResolventDifference => {
                let lu2 = Lu::factor(&a.shifted(one + one))?;
                let id = Matrix::identity(n);
                Ok(&lu1.solve_matrix(&id)? - &lu2.solve_matrix(&id)?)
            }
        }
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for RationalFn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match compact.as_str() {
            "z/(1+z)^2" | "bump" => Ok(Self::Bump),
            "z^2/(1+z)^3" | "skew-bump" => Ok(Self::SkewBump),
            "1/(1+z)-1/(2+z)" | "resolvent-difference" => Ok(Self::ResolventDifference),
            _ => Err(Error::Invalid(format!(
                "unknown function '{s}'; expected one of z/(1+z)^2, z^2/(1+z)^3, 1/(1+z) - 1/(2+z)"
            ))),
        }
    }
}

pub const DEFAULT_N_BOUNDARY: usize = 2000;
pub const DEFAULT_EPS: f64 = 0.05;

/// Largest `|f|` over `2 n_boundary` log-spaced radii in `[1e-6, 1e6]` on both
/// rays `arg z = ±half_angle`, together with the limits at 0 and ∞ (both 0).
pub fn boundary_sup<T: Real>(f: RationalFn, half_angle: T, n_boundary: usize) -> Result<T> {
    let radii = log_spaced(T::lit(1e-6), T::lit(1e6), 2 * n_boundary)?;
    let rays = [cis(half_angle), cis(-half_angle)];
    Ok(rays
        .iter()
        .flat_map(|&dir| radii.iter().map(move |&r| f.eval(dir * r).norm()))
        .fold(T::zero(), T::max))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CalculusReport<T: Real> {
    pub f: String,
    pub kappa: T,
    pub eps: T,
    pub lhs: T,
    pub boundary_sup: T,
    pub rhs: T,
    pub pass: bool,
}

/// Checks `‖f(A)‖ ≤ (2 + 2/√3) sup |f|` with the supremum over `Σ(κ + ε)`.
pub fn rational_calculus_check<T: Real>(
    a: &Matrix<T>,
    kappa: T,
    eps: T,
    f: RationalFn,
    n_boundary: usize,
) -> Result<CalculusReport<T>> {
    if !(eps > T::zero()) || !(kappa + eps < T::PI()) {
        return Err(Error::Domain(format!("eps = {eps} must be positive with kappa + eps < pi")));
    }
    if n_boundary == 0 {
        return Err(Error::Domain("n_boundary must be positive".into()));
    }
    check_numerical_range(a, kappa)?;
    let sv = singular_values(a);
    if sv[0] * sv[0] <= T::tol(0.0) * sv[sv.len() - 1] * sv[sv.len() - 1] {
        return Err(Error::Precondition("operator is not injective; shift it by delta I".into()));
    }
    let lhs = operator_norm(&f.apply(a)?);
    let sup = boundary_sup(f, kappa + eps, n_boundary)?;
    let rhs = crouzeix_delyon_constant::<T>() * sup;
    Ok(CalculusReport {
        f: f.id().to_string(),
        kappa,
        eps,
        lhs,
        boundary_sup: sup,
        rhs,
        pass: lhs <= rhs + T::lit(BOUND_TOL) * (T::one() + rhs),
    })
}

/// Operator for functional-calculus checks: `A` itself when the form has a
/// Dirichlet part, otherwise `A + δ I`. Returns the applied shift.
pub fn calculus_operator<T: Real>(form: &AssembledForm<T>, delta: T) -> (Matrix<T>, T) {
    if form.has_dirichlet() {
        (form.a.clone(), T::zero())
    } else {
        (form.a.shifted(Complex::new(delta, T::zero())), delta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, SQRT_2};

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn rot() -> Matrix<f64> {
        Matrix::from_real_rows(&[vec![1.0, 1.0], vec![-1.0, 1.0]]).unwrap()
    }

    #[test]
    fn resolvent_norm_examples() {
        let one = Matrix::diag(&[c(1.0, 0.0)]);
        assert!((resolvent_norm(&one, c(1.0, 0.0)).unwrap() - 0.5).abs() < 1e-15);
        let d = Matrix::diag(&[c(1.0, 0.0), c(2.0, 0.0)]);
        assert!((resolvent_norm(&d, c(0.0, 1.0)).unwrap() - 1.0 / SQRT_2).abs() < 1e-15);
        assert!((resolvent_norm(&rot(), c(0.0, 0.0)).unwrap() - 1.0 / SQRT_2).abs() < 1e-15);
        assert_eq!(resolvent_norm(&one, c(-1.0, 0.0)), Err(Error::InSpectrum));
    }

    #[test]
    fn kato_examples() {
        let h = Matrix::diag(&[c(0.5, 0.0), c(2.0, 0.0)]);
        let r = kato_bound_check(&h, 0.0, &[c(1.0, 0.0)]).unwrap();
        assert!(r.pass && (r.samples[0].bound - 1.0).abs() < 1e-15);

        assert_eq!(
            kato_bound_check(&rot(), FRAC_PI_4, &[c(-2.0, 0.0)]),
            Err(Error::NotAdmissible)
        );

        let r = kato_bound_check(&rot(), FRAC_PI_4, &[c(0.0, 2.0)]).unwrap();
        assert!((r.samples[0].bound - 1.0 / SQRT_2).abs() < 1e-14);
        assert!(r.pass);
    }

    #[test]
    fn kato_rejects_wrong_sector() {
        assert!(matches!(
            kato_bound_check(&rot(), 0.5, &[c(0.0, 2.0)]),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn log_spacing() {
        let r = log_spaced::<f64>(1e-2, 1e4, 7).unwrap();
        assert_eq!(r.len(), 7);
        for (k, x) in r.iter().enumerate() {
            assert!((x.log10() - (k as f64 - 2.0)).abs() < 1e-12);
        }
        assert!(log_spaced(0.0, 1.0, 3).is_err());
        assert_eq!(log_spaced(2.0, 5.0, 1).unwrap(), vec![2.0]);
    }

    #[test]
    fn ray_angles_cover_closed_sector() {
        let a = ray_angles(FRAC_PI_2, 9);
        assert_eq!(a.len(), 9);
        assert!((a[0] + FRAC_PI_2).abs() < 1e-15 && a[8] == FRAC_PI_2 && a[4].abs() < 1e-15);
    }

    #[test]
    fn scan_of_scalar() {
        let a = Matrix::diag(&[c(1.0, 0.0)]);
        let s = scan_matrix(&a, FRAC_PI_2, 1.0, 1, &[1.0]).unwrap();
        assert!((s.norms[0] - 0.5).abs() < 1e-15 && s.pass);
        assert!(scan_matrix(&a, FRAC_PI_2, 1.0, 0, &[1.0]).is_err());
        assert!(scan_matrix(&a, FRAC_PI_2, 1.0, 3, &[-1.0]).is_err());
    }

    #[test]
    fn rational_function_ids_round_trip() {
        for f in RationalFn::ALL {
            assert_eq!(f.id().parse::<RationalFn>().unwrap(), f);
        }
        assert!("z^3".parse::<RationalFn>().is_err());
    }

    #[test]
    fn calculus_scalar_and_diagonal() {
        let one = Matrix::diag(&[c(1.0, 0.0)]);
        let r = rational_calculus_check(&one, 0.0, 0.1, RationalFn::Bump, 500).unwrap();
        assert!((r.lhs - 0.25).abs() < 1e-15);
        assert!(r.boundary_sup >= 0.25 - 1e-6 && r.pass);

        let d = Matrix::diag(&[c(1.0, 0.0), c(4.0, 0.0)]);
        let r = rational_calculus_check(&d, 0.0, 0.1, RationalFn::Bump, 500).unwrap();
        assert!((r.lhs - 0.25).abs() < 1e-15 && r.pass);
    }

    #[test]
    fn calculus_on_rotation_matches_explicit_inverse() {
        // (I + A)^{-1} for A = [[1,1],[-1,1]]: I + A = [[2,1],[-1,2]], det 5.
        let inv = Matrix::from_real_rows(&[vec![0.4, -0.2], vec![0.2, 0.4]]).unwrap();
        let expected = &(&inv * &rot()) * &inv;
        let got = RationalFn::Bump.apply(&rot()).unwrap();
        assert!((&got - &expected).max_abs() < 1e-15);
        let r = rational_calculus_check(&rot(), FRAC_PI_4, 0.05, RationalFn::Bump, 2000).unwrap();
        assert!(r.pass);
    }

    #[test]
    fn calculus_preconditions() {
        let zero = Matrix::diag(&[c(0.0, 0.0), c(1.0, 0.0)]);
        assert!(matches!(
            rational_calculus_check(&zero, 0.0, 0.1, RationalFn::Bump, 10),
            Err(Error::Precondition(_))
        ));
        assert!(rational_calculus_check(&rot(), FRAC_PI_4, 0.0, RationalFn::Bump, 10).is_err());
        assert!(matches!(
            rational_calculus_check(&rot(), 0.2, 0.05, RationalFn::Bump, 10),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn diagonal_functional_calculus() {
        let vals = [c(0.5, 0.2), c(3.0, -1.0), c(1.0, 0.0)];
        let d = Matrix::diag(&vals);
        for f in RationalFn::ALL {
            let lhs = operator_norm(&f.apply(&d).unwrap());
            let expected = vals.iter().map(|&z| f.eval(z).norm()).fold(0.0, f64::max);
            assert!((lhs - expected).abs() < 1e-10);
        }
    }
}
