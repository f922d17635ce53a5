//! The acceptance criteria, runnable from the CLI (`selftest`) and from the
//! `acceptance` test target. Every tolerance is fixed here.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, SQRT_2};
use std::fmt;

use num_complex::Complex;

use crate::elliptic::{assemble, field_bounds, form_value, interpolate, mat2_real, BoundarySpec, CoefficientField, Grid};
use crate::error::Result;
use crate::fov::{brute_force_fov_sample, fov_boundary, tightest_sector_angle, verify_sector_containment, DEFAULT_N_ANGLES};
use crate::numerics::{hermitian_eigs, operator_norm, Matrix};
use crate::random::{coercive_matrix, gaussian_matrix, hermitian_matrix};
use crate::resolvent::{
    calculus_operator, kato_bound_check, log_spaced, rational_calculus_check, ray_scan, RationalFn, DEFAULT_EPS,
    DEFAULT_N_BOUNDARY,
};
use crate::rng::SplitMix64;
use crate::scalar::arg;
use crate::sector::{classical_angle, coercivity_constant, imaginary_part_bound_check, kappa_p, sector_contains, sharp_angle};

type C = Complex<f64>;

#[derive(Debug, Clone, PartialEq)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] criterion {}: {} -- {}", self.id, self.title, self.detail)
    }
}

fn report(id: u8, title: &'static str, outcome: Result<(bool, String)>) -> CriterionReport {
    let (pass, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
    CriterionReport { id, title, pass, detail }
}

/// `μ = [[1, 1], [-1, 1]]`.
pub fn rotation_field() -> CoefficientField<f64> {
    CoefficientField::Constant(mat2_real([[1.0, 1.0], [-1.0, 1.0]]))
}

pub fn rotation_matrix() -> Matrix<f64> {
    Matrix::from_real_rows(&[vec![1.0, 1.0], vec![-1.0, 1.0]]).expect("2x2")
}

/// `u(x, y) = -x + y + i(x + y)`.
pub fn example_u(x: f64, y: f64) -> C {
    C::new(-x + y, x + y)
}

pub const SEED: u64 = 0x05EC_70A1;

pub fn criterion_1() -> CriterionReport {
    report(1, "golden form value a[u] = 4 - 4i and m = 1, M = sqrt 2, kappa = pi/4", (|| {
        let mut worst = 0.0f64;
        for n in [1, 2, 3, 4, 8, 16, 32] {
            let grid = Grid::unit_square(n)?;
            let form = assemble(&grid, &rotation_field(), &BoundarySpec::neumann())?;
            let v = form_value(&form, &interpolate(&grid, example_u))?;
            worst = worst.max((v - C::new(4.0, -4.0)).norm());
        }
        let a = field_bounds(&rotation_field(), &Grid::unit_square(4)?)?;
        let m_err = (a.m - 1.0).abs();
        let big_m_err = (a.big_m - SQRT_2).abs();
        let k_err = (sharp_angle(a.m, a.big_m)? - FRAC_PI_4).abs();
        let pass = worst <= 1e-10 && m_err <= 1e-12 && big_m_err <= 1e-12 && k_err <= 1e-12;
        Ok((pass, format!(
            "max |a[u] - (4-4i)| = {worst:.2e} over grids 1..32; |m-1| = {m_err:.1e}, |M-sqrt2| = {big_m_err:.1e}, |kappa-pi/4| = {k_err:.1e}"
        )))
    })())
}

pub fn criterion_2() -> CriterionReport {
    report(2, "sharpness of kappa = pi/4", (|| {
        let grid = Grid::unit_square(8)?;
        let form = assemble(&grid, &rotation_field(), &BoundarySpec::neumann())?;
        let v = form_value(&form, &interpolate(&grid, example_u))?;
        let arg_err = (arg(v).abs() - FRAC_PI_4).abs();
        let at = verify_sector_containment(&rotation_matrix(), FRAC_PI_4, DEFAULT_N_ANGLES)?;
        let below = verify_sector_containment(&rotation_matrix(), FRAC_PI_4 - 0.01, DEFAULT_N_ANGLES)?;
        let pass = arg_err <= 1e-12 && at.pass && !below.pass;
        Ok((pass, format!(
            "||arg a[u]| - pi/4| = {arg_err:.1e}; containment at pi/4: {} (max_arg {:.15}); at pi/4 - 0.01: {}",
            at.pass, at.max_arg, below.pass
        )))
    })())
}

pub fn criterion_3() -> CriterionReport {
    report(3, "imaginary-part bound and sector inclusion on 1000 random coercive matrices", (|| {
        let mut rng = SplitMix64::new(SEED ^ 3);
        let mut worst_norm = f64::NEG_INFINITY;
        let mut worst_arg = f64::NEG_INFINITY;
        let mut failures = 0usize;
        for k in 0..1000u64 {
            let n = rng.int_in(2, 8);
            let t = coercive_matrix::<f64>(&mut rng, n, 0.01, 2.0);
            let r = imaginary_part_bound_check(&t)?;
            worst_norm = worst_norm.max(r.e_norm - r.bound);
            let m = coercivity_constant(&t);
            let norm = operator_norm(&t);
            let theta = (((norm - m) * (norm + m)).max(0.0).sqrt() / m).atan();
            for z in brute_force_fov_sample(&t, 500, SEED.wrapping_add(k)) {
                worst_arg = worst_arg.max(arg(z).abs() - theta);
                if !sector_contains(z, theta, 1e-9) {
                    failures += 1;
                }
            }
        }
        let eq = Matrix::diag(&[C::new(1.0, 1.0), C::new(1.0, -1.0)]);
        let r = imaginary_part_bound_check(&eq)?;
        let eq_gap = (r.e_norm - r.bound).abs();
        let pass = worst_norm <= 1e-10 && failures == 0 && eq_gap <= 1e-10;
        Ok((pass, format!(
            "max(‖E‖ - bound) = {worst_norm:.2e}; samples outside sector: {failures} (max excess {worst_arg:.2e}); equality gap {eq_gap:.1e}"
        )))
    })())
}

pub fn criterion_4() -> CriterionReport {
    report(4, "sharp angle strictly below classical angle", (|| {
        let mut rng = SplitMix64::new(SEED ^ 4);
        let mut min_gap = f64::INFINITY;
        let mut all_below = true;
        for _ in 0..100 {
            let m = rng.uniform_in(0.1, 10.0);
            let ratio = 1.0 + 99.0 * (1.0 - rng.uniform()); // (1, 100]
            let big_m = m * ratio;
            let (k, c) = (sharp_angle(m, big_m)?, classical_angle(m, big_m)?);
            min_gap = min_gap.min(c - k);
            all_below &= k < FRAC_PI_2 && c < FRAC_PI_2;
        }
        let gap = classical_angle(1.0, SQRT_2)? - sharp_angle(1.0, SQRT_2)?;
        let gap_err = (gap - (SQRT_2.atan() - FRAC_PI_4)).abs();
        let pass = min_gap > 0.0 && all_below && gap_err <= 1e-12;
        Ok((pass, format!("min gap {min_gap:.3e}; gap at (1, sqrt2) error {gap_err:.1e}")))
    })())
}

pub fn criterion_5() -> CriterionReport {
    report(5, "resolvent constant on the assembled operator (16x16, Dirichlet)", (|| {
        let grid = Grid::unit_square(16)?;
        let form = assemble(&grid, &rotation_field(), &BoundarySpec::dirichlet())?;
        let kappa = form.field_angles.kappa;
        let radii = log_spaced(1e-2, 1e4, 12)?;
        let mut pass = true;
        let mut parts = Vec::new();
        for theta in [kappa + 0.1, kappa + 0.3, FRAC_PI_2] {
            let scan = ray_scan(&form, theta, 9, &radii)?;
            pass &= scan.pass && scan.lambdas.len() == 108;
            parts.push(format!("theta={theta:.4}: C={:.4}, max(norm|l|-C)={:.3e}", scan.bound_constant, scan.max_violation));
        }
        Ok((pass, parts.join("; ")))
    })())
}

/// `λ` with `-λ` outside `Σ(κ)`: `|arg(-λ)|` uniform in `(κ, π]`, radius
/// log-uniform in `[1e-2, 1e2]`.
fn admissible_lambdas(rng: &mut SplitMix64, kappa: f64, count: usize) -> Vec<C> {
    (0..count)
        .map(|_| {
            let a = kappa + 1e-6 + (std::f64::consts::PI - kappa - 1e-6) * (1.0 - rng.uniform());
            let sign = if rng.uniform() < 0.5 { -1.0 } else { 1.0 };
            let r = 10f64.powf(rng.uniform_in(-2.0, 2.0));
            -C::from_polar(r, sign * a)
        })
        .collect()
}

pub fn criterion_6() -> CriterionReport {
    report(6, "Kato resolvent bound on 200 random sectorial matrices", (|| {
        let mut rng = SplitMix64::new(SEED ^ 6);
        let mut worst = f64::NEG_INFINITY;
        let mut pass = true;
        for _ in 0..200 {
            let n = rng.int_in(2, 8);
            let a = coercive_matrix::<f64>(&mut rng, n, 0.05, 1.0);
            let kappa = tightest_sector_angle(&a)?;
            pass &= verify_sector_containment(&a, kappa, DEFAULT_N_ANGLES)?.pass;
            let lambdas = admissible_lambdas(&mut rng, kappa, 50);
            let r = kato_bound_check(&a, kappa, &lambdas)?;
            worst = worst.max(r.max_violation);
            pass &= r.pass;
        }
        Ok((pass, format!("max(norm - 1/d) = {worst:.3e}")))
    })())
}

pub fn criterion_7() -> CriterionReport {
    report(7, "interpolated angles kappa_p", (|| {
        let k2 = kappa_p(FRAC_PI_4, 2.0)?.value;
        let k4 = kappa_p(FRAC_PI_4, 4.0)?.value;
        let k43 = kappa_p(FRAC_PI_4, 4.0 / 3.0)?.value;
        let target = 3.0 * std::f64::consts::PI / 8.0;
        let mut below = true;
        for p in [1.01, 1.1, 2.0, 10.0, 100.0] {
            below &= kappa_p(FRAC_PI_4, p)?.value < FRAC_PI_2;
        }
        let pass = k2 == FRAC_PI_4 && (k4 - target).abs() <= 1e-12 && (k43 - target).abs() <= 1e-12 && below;
        Ok((pass, format!("kappa_2 = {k2:.16}, kappa_4 = {k4:.16}, kappa_4/3 = {k43:.16}, all < pi/2: {below}")))
    })())
}

pub fn criterion_8() -> CriterionReport {
    report(8, "rational functional calculus within 2 + 2/sqrt3", (|| {
        let mut rng = SplitMix64::new(SEED ^ 8);
        let mut worst_ratio = 0.0f64;
        let mut pass = true;
        let mut check = |a: &Matrix<f64>, kappa: f64| -> Result<()> {
            for f in RationalFn::ALL {
                let r = rational_calculus_check(a, kappa, DEFAULT_EPS, f, DEFAULT_N_BOUNDARY)?;
                worst_ratio = worst_ratio.max(r.lhs / r.boundary_sup);
                pass &= r.pass;
            }
            Ok(())
        };
        for _ in 0..200 {
            let n = rng.int_in(2, 8);
            let a = coercive_matrix::<f64>(&mut rng, n, 0.05, 1.0);
            check(&a, tightest_sector_angle(&a)?)?;
        }
        let grid = Grid::unit_square(8)?;
        let mut shifts = Vec::new();
        for bc in [BoundarySpec::dirichlet(), BoundarySpec::neumann()] {
            let form = assemble(&grid, &rotation_field(), &bc)?;
            let (a, shift) = calculus_operator(&form, 1.0);
            shifts.push(shift);
            check(&a, form.field_angles.kappa)?;
        }
        pass &= shifts == [0.0, 1.0];
        Ok((pass, format!("max ‖f(A)‖ / sup|f| = {worst_ratio:.4} (limit {:.4}); shifts {shifts:?}", 2.0 + 2.0 / 3f64.sqrt())))
    })())
}

/// Closed-form eigenvalues of a 2×2 Hermitian matrix.
fn analytic_2x2(h: &Matrix<f64>) -> (f64, f64) {
    let (a, d, b) = (h[(0, 0)].re, h[(1, 1)].re, h[(0, 1)]);
    let mean = 0.5 * (a + d);
    let rad = (0.25 * (a - d) * (a - d) + b.norm_sqr()).sqrt();
    (mean - rad, mean + rad)
}

pub fn criterion_9() -> CriterionReport {
    report(9, "oracle equivalence: support hull vs brute force, Jacobi vs closed form", (|| {
        let mut rng = SplitMix64::new(SEED ^ 9);
        let mut outside = 0usize;
        for k in 0..200u64 {
            let n = rng.int_in(2, 8);
            let t = gaussian_matrix::<f64>(&mut rng, n);
            let tol = 1e-8 * operator_norm(&t);
            let b = fov_boundary(&t, DEFAULT_N_ANGLES)?;
            outside += brute_force_fov_sample(&t, 200, SEED.wrapping_add(1000 + k))
                .into_iter()
                .filter(|&z| !b.hull_contains(z, tol))
                .count();
        }
        let mut worst = 0.0f64;
        for _ in 0..100 {
            let h = hermitian_matrix::<f64>(&mut rng, 2);
            let e = hermitian_eigs(&h)?;
            let (lo, hi) = analytic_2x2(&h);
            worst = worst.max((e.values[0] - lo).abs()).max((e.values[1] - hi).abs());
        }
        let pass = outside == 0 && worst <= 1e-12;
        Ok((pass, format!("samples outside hull: {outside}; max eigenvalue error {worst:.2e}")))
    })())
}

pub fn run_all() -> Vec<CriterionReport> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
    ]
}
