//! Sector geometry and the closed-form angle and resolvent constants.
//!
//! `Σ(θ) = { r e^{iφ} : r ≥ 0, |φ| ≤ θ }` is closed and contains 0.

use num_complex::Complex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{hermitian_min_eigval, operator_norm, Matrix};
use crate::scalar::{arg, Real};

/// Closed sector around the positive real axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sector<T: Real> {
    half_angle: T,
}

impl<T: Real> Sector<T> {
    pub fn new(half_angle: T) -> Result<Self> {
        if !(half_angle >= T::zero() && half_angle < T::PI()) {
            return Err(Error::Domain(format!(
                "sector half-angle {half_angle} outside [0, pi)"
            )));
        }
        Ok(Self { half_angle })
    }

    pub fn half_angle(&self) -> T {
        self.half_angle
    }

    /// Exact membership.
    pub fn contains(&self, z: Complex<T>) -> bool {
        sector_contains(z, self.half_angle, T::zero())
    }

    /// Euclidean distance from `w` to the sector.
    pub fn distance(&self, w: Complex<T>) -> T {
        distance_to_sector(w, self.half_angle)
    }
}

/// Coercivity constant, uniform bound, sharp angle and classical angle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SectorAngles<T: Real> {
    pub m: T,
    #[serde(rename = "M")]
    pub big_m: T,
    pub kappa: T,
    pub classical: T,
}

impl<T: Real> SectorAngles<T> {
    pub fn from_bounds(m: T, big_m: T) -> Result<Self> {
        Ok(Self {
            m,
            big_m,
            kappa: sharp_angle(m, big_m)?,
            classical: classical_angle(m, big_m)?,
        })
    }

    pub fn resolvent_constant(&self, theta: T) -> Result<T> {
        resolvent_constant(theta, self.m, self.big_m)
    }
}

/// `T = S + iE` with `S = (T + Tᴴ)/2` and `E = (T − Tᴴ)/(2i)`, both Hermitian.
pub fn cartesian_decomposition<T: Real>(t: &Matrix<T>) -> (Matrix<T>, Matrix<T>) {
    let s = t.hermitian_part();
    // E = S' where S' is the Hermitian part of -iT.
    let e = t.scale(Complex::new(T::zero(), -T::one())).hermitian_part();
    (s, e)
}

/// Best constant `m` in `Re (Tu, u) ≥ m ‖u‖²`, i.e. `λ_min` of the Hermitian part.
/// May be nonpositive.
pub fn coercivity_constant<T: Real>(t: &Matrix<T>) -> T {
    hermitian_min_eigval(&t.hermitian_part()).expect("Hermitian by construction")
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ImaginaryPartReport<T: Real> {
    pub e_norm: T,
    pub bound: T,
    /// `bound - e_norm`; negative when violated.
    pub margin: T,
    pub pass: bool,
}

/// Checks `‖E‖ ≤ √(‖T‖² − m²)` for the imaginary part `E` of a coercive `T`.
pub fn imaginary_part_bound_check<T: Real>(t: &Matrix<T>) -> Result<ImaginaryPartReport<T>> {
    let m = coercivity_constant(t);
    if m <= T::zero() {
        return Err(Error::NotCoercive(m.to_f64().unwrap_or(f64::NAN)));
    }
    let (_, e) = cartesian_decomposition(t);
    let e_norm = operator_norm(&e);
    let t_norm = operator_norm(t);
    // ‖T‖ ≥ m always holds up to rounding; clamp the radicand.
    let bound = ((t_norm - m) * (t_norm + m)).max(T::zero()).sqrt();
    let slack = T::tol(1e-10) * (T::one() + bound);
    Ok(ImaginaryPartReport {
        e_norm,
        bound,
        margin: bound - e_norm,
        pass: e_norm <= bound + slack,
    })
}

fn check_bounds<T: Real>(m: T, big_m: T) -> Result<()> {
    if !(m > T::zero()) || !m.is_finite() {
        return Err(Error::Domain(format!("m = {m} must be positive")));
    }
    if !(big_m >= m) || !big_m.is_finite() {
        return Err(Error::Domain(format!("M < m (M = {big_m}, m = {m})")));
    }
    Ok(())
}

/// `κ = arctan √((M/m)² − 1)`.
pub fn sharp_angle<T: Real>(m: T, big_m: T) -> Result<T> {
    check_bounds(m, big_m)?;
    Ok((((big_m - m) * (big_m + m)).sqrt() / m).atan())
}

/// `arctan(M/m)`.
pub fn classical_angle<T: Real>(m: T, big_m: T) -> Result<T> {
    check_bounds(m, big_m)?;
    Ok((big_m / m).atan())
}

/// Interpolated angle on `L_p`; `limit` marks the excluded endpoint `p = ∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterpolatedAngle<T: Real> {
    pub value: T,
    pub limit: bool,
}

/// `κ_p = (1 − |1 − 2/p|) κ + |1 − 2/p| π/2` for `p ∈ (1, ∞)`.
pub fn kappa_p<T: Real>(kappa: T, p: T) -> Result<InterpolatedAngle<T>> {
    if !(kappa >= T::zero() && kappa < T::FRAC_PI_2()) {
        return Err(Error::Domain(format!("kappa = {kappa} outside [0, pi/2)")));
    }
    if p.is_nan() || p <= T::one() {
        return Err(Error::Domain(format!("p = {p} must exceed 1")));
    }
    if p.is_infinite() {
        return Ok(InterpolatedAngle {
            value: T::FRAC_PI_2(),
            limit: true,
        });
    }
    let w = (T::one() - T::lit(2.0) / p).abs();
    Ok(InterpolatedAngle {
        value: (T::one() - w) * kappa + w * T::FRAC_PI_2(),
        limit: false,
    })
}

/// `M / (m sin θ − √(M² − m²) cos θ)` for `θ ∈ (κ, π/2]`; equals `1 / sin(θ − κ)`.
pub fn resolvent_constant<T: Real>(theta: T, m: T, big_m: T) -> Result<T> {
    let kappa = sharp_angle(m, big_m)?;
    if !(theta <= T::FRAC_PI_2()) {
        return Err(Error::Domain(format!("theta = {theta} exceeds pi/2")));
    }
    let denom = m * theta.sin() - ((big_m - m) * (big_m + m)).sqrt() * theta.cos();
    if !(theta > kappa) || !(denom > T::zero()) {
        return Err(Error::Domain(format!(
            "denominator nonpositive: theta = {theta} must exceed the sharp angle {kappa}"
        )));
    }
    Ok(big_m / denom)
}

/// `z = 0` or `|arg z| ≤ θ + tol`.
pub fn sector_contains<T: Real>(z: Complex<T>, theta: T, tol: T) -> bool {
    if z.re == T::zero() && z.im == T::zero() {
        return true;
    }
    arg(z).abs() <= theta + tol
}

/// Largest `|arg z|` over nonzero points; 0 if every point is zero.
pub fn minimal_enclosing_angle<T: Real>(points: &[Complex<T>]) -> T {
    points
        .iter()
        .filter(|z| !(z.re == T::zero() && z.im == T::zero()))
        .fold(T::zero(), |acc, &z| acc.max(arg(z).abs()))
}

/// Distance from `w` to `Σ(κ)`, `κ ∈ [0, π/2)`:
/// 0 inside, `|w| sin(|arg w| − κ)` when the nearest point lies on a ray,
/// `|w|` when it is the origin.
pub fn distance_to_sector<T: Real>(w: Complex<T>, kappa: T) -> T {
    let r = w.norm();
    if r == T::zero() {
        return T::zero();
    }
    let a = arg(w).abs();
    if a <= kappa {
        T::zero()
    } else if a <= kappa + T::FRAC_PI_2() {
        r * (a - kappa).sin()
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, SQRT_2};

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn rot() -> Matrix<f64> {
        Matrix::from_real_rows(&[vec![1.0, 1.0], vec![-1.0, 1.0]]).unwrap()
    }

    #[test]
    fn decomposition_of_rotation() {
        let (s, e) = cartesian_decomposition(&rot());
        assert!((&s - &Matrix::identity(2)).max_abs() < 1e-15);
        let expected =
            Matrix::from_rows(&[vec![c(0.0, 0.0), c(0.0, -1.0)], vec![c(0.0, 1.0), c(0.0, 0.0)]]).unwrap();
        assert!((&e - &expected).max_abs() < 1e-15);
        let recon = &s + &e.scale(c(0.0, 1.0));
        assert!((&recon - &rot()).max_abs() < 1e-15);
    }

    #[test]
    fn decomposition_of_hermitian_and_skew() {
        let h = Matrix::from_rows(&[vec![c(2.0, 0.0), c(1.0, -1.0)], vec![c(1.0, 1.0), c(-1.0, 0.0)]]).unwrap();
        let (s, e) = cartesian_decomposition(&h);
        assert!((&s - &h).max_abs() < 1e-15);
        assert!(e.max_abs() < 1e-15);
        let (s, e) = cartesian_decomposition(&h.scale(c(0.0, 1.0)));
        assert!(s.max_abs() < 1e-15);
        assert!((&e - &h).max_abs() < 1e-15);
    }

    #[test]
    fn coercivity_examples() {
        assert!((coercivity_constant(&rot()) - 1.0).abs() < 1e-14);
        assert!((coercivity_constant(&Matrix::diag(&[c(2.0, 0.0), c(5.0, 0.0)])) - 2.0).abs() < 1e-14);
        let nil = Matrix::<f64>::from_real_rows(&[vec![0.0f64, 1.0], vec![0.0, 0.0]]).unwrap();
        assert!((coercivity_constant(&nil) + 0.5).abs() < 1e-14);
    }

    #[test]
    fn imaginary_part_equality_cases() {
        let t = Matrix::diag(&[c(1.0, 1.0), c(1.0, -1.0)]);
        let r = imaginary_part_bound_check(&t).unwrap();
        assert!((r.e_norm - 1.0).abs() < 1e-14 && (r.bound - 1.0).abs() < 1e-14 && r.pass);

        let r = imaginary_part_bound_check(&Matrix::<f64>::identity(3)).unwrap();
        assert!(r.e_norm.abs() < 1e-15 && r.bound.abs() < 1e-7 && r.pass);

        let r = imaginary_part_bound_check(&rot()).unwrap();
        assert!((r.e_norm - 1.0).abs() < 1e-14 && (r.bound - 1.0).abs() < 1e-14 && r.pass);
    }

    #[test]
    fn imaginary_part_rejects_noncoercive() {
        let nil = Matrix::<f64>::from_real_rows(&[vec![0.0f64, 1.0], vec![0.0, 0.0]]).unwrap();
        assert!(matches!(imaginary_part_bound_check(&nil), Err(Error::NotCoercive(_))));
    }

    #[test]
    fn angle_examples() {
        assert!((sharp_angle(1.0, SQRT_2).unwrap() - FRAC_PI_4).abs() < 1e-15);
        assert_eq!(sharp_angle(0.7, 0.7).unwrap(), 0.0);
        assert!((sharp_angle(1.0, 2.0).unwrap() - PI / 3.0).abs() < 1e-15);
        assert!((classical_angle(1.0f64, SQRT_2).unwrap() - 0.955_316_618_124_509_3).abs() < 1e-15);
        assert!((classical_angle(1.0, 1.0).unwrap() - FRAC_PI_4).abs() < 1e-15);
        assert!((classical_angle(1.0f64, 2.0).unwrap() - 1.107_148_717_794_090_4).abs() < 1e-15);
    }

    #[test]
    fn angle_domain_errors() {
        assert!(sharp_angle(0.0, 1.0).is_err());
        assert!(sharp_angle(-1.0, 1.0).is_err());
        assert!(classical_angle(2.0, 1.0).is_err());
        assert!(sharp_angle(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn kappa_p_examples() {
        assert_eq!(kappa_p(FRAC_PI_4, 2.0).unwrap().value, FRAC_PI_4);
        assert!((kappa_p(FRAC_PI_4, 4.0).unwrap().value - 3.0 * PI / 8.0).abs() < 1e-15);
        for p in [1.5f64, 3.0, 7.0] {
            let w = (1.0 - 2.0 / p).abs();
            assert!((kappa_p(0.0, p).unwrap().value - w * FRAC_PI_2).abs() < 1e-15);
        }
        assert!(kappa_p(0.3, 1.0).is_err());
        assert!(kappa_p(0.3, 0.5).is_err());
        let lim = kappa_p(0.3, f64::INFINITY).unwrap();
        assert!(lim.limit && lim.value == FRAC_PI_2);
    }

    #[test]
    fn resolvent_constant_examples() {
        assert!((resolvent_constant(FRAC_PI_2, 1.0, 3.0).unwrap() - 3.0).abs() < 1e-14);
        assert!((resolvent_constant(FRAC_PI_2, 1.0, 1.0).unwrap() - 1.0).abs() < 1e-15);
        assert!(resolvent_constant(FRAC_PI_4, 1.0, SQRT_2).is_err());
        assert!(resolvent_constant(0.5, 1.0, SQRT_2).is_err());
        assert!(resolvent_constant(2.0, 1.0, SQRT_2).is_err());
    }

    #[test]
    fn containment_examples() {
        assert!(sector_contains(c(0.0, 0.0), 0.0, 0.0));
        assert!(sector_contains(c(1.0, 1.0), FRAC_PI_4, 0.0));
        assert!(!sector_contains(c(-1.0, 0.0), FRAC_PI_4, 0.0));
        assert!(Sector::new(FRAC_PI_4).unwrap().contains(c(3.0, -2.0)));
        assert!(Sector::<f64>::new(PI).is_err());
    }

    #[test]
    fn enclosing_angle_examples() {
        let pts = [c(1.0, 1.0), c(1.0, -1.0), c(2.0, 0.0)];
        assert!((minimal_enclosing_angle(&pts) - FRAC_PI_4).abs() < 1e-15);
        assert_eq!(minimal_enclosing_angle(&[c(5.0, 0.0)]), 0.0);
        assert!((minimal_enclosing_angle(&[c(4.0, -4.0)]) - FRAC_PI_4).abs() < 1e-15);
        assert_eq!(minimal_enclosing_angle(&[c(0.0, 0.0)]), 0.0);
    }

    #[test]
    fn sector_distance_cases() {
        // inside
        assert_eq!(distance_to_sector(c(2.0, 0.0), FRAC_PI_4), 0.0);
        // nearest point on the ray: -2i against Σ(π/4)
        assert!((distance_to_sector(c(0.0, -2.0), FRAC_PI_4) - SQRT_2).abs() < 1e-15);
        // nearest point is the origin
        assert!((distance_to_sector(c(-3.0, 0.0), FRAC_PI_4) - 3.0).abs() < 1e-15);
        // κ = 0: distance of -1 to [0, ∞)
        assert!((distance_to_sector(c(-1.0, 0.0), 0.0) - 1.0).abs() < 1e-15);
    }
}
