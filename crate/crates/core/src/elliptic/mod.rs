//! P1 finite-element assembly of `a[u, v] = ∫_Ω μ ∇u · conj(∇v)` on a rectangle
//! with a Dirichlet part `D` on the boundary and natural conditions elsewhere.

mod boundary;
mod field;
mod grid;

pub use boundary::BoundarySpec;
pub use field::{ellipticity, mat2_real, mat2_to_matrix, CoefficientField, Mat2, NamedField};
pub use grid::{Grid, Triangle};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::numerics::{operator_norm, Matrix, Vector};
use crate::scalar::Real;
use crate::sector::SectorAngles;

/// Grid, coefficient field and Dirichlet set.
#[derive(Debug, Clone, PartialEq)]
pub struct EllipticProblem<T: Real> {
    pub grid: Grid<T>,
    pub mu: CoefficientField<T>,
    pub bc: BoundarySpec<T>,
}

impl<T: Real> EllipticProblem<T> {
    pub fn assemble(&self) -> Result<AssembledForm<T>> {
        assemble(&self.grid, &self.mu, &self.bc)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AssembledForm<T: Real> {
    /// Form matrix on all nodes.
    pub a_full: Matrix<T>,
    /// Non-Dirichlet node indices, ascending.
    pub free_nodes: Vec<usize>,
    pub dirichlet_nodes: Vec<usize>,
    /// `a_full` restricted to `free_nodes`.
    pub a: Matrix<T>,
    pub field_angles: SectorAngles<T>,
}

impl<T: Real> AssembledForm<T> {
    pub fn has_dirichlet(&self) -> bool {
        !self.dirichlet_nodes.is_empty()
    }

    /// Restriction of a nodal vector to the free nodes.
    pub fn restrict(&self, u: &Vector<T>) -> Vector<T> {
        Vector(self.free_nodes.iter().map(|&k| u.0[k]).collect())
    }
}

/// `m = min λ_min(Re μ)` and `M = max ‖μ‖` over the triangles.
pub fn field_bounds<T: Real>(mu: &CoefficientField<T>, grid: &Grid<T>) -> Result<SectorAngles<T>> {
    let values = mu.on_triangles(grid)?;
    field_bounds_of(&values)
}

fn field_bounds_of<T: Real>(values: &[Mat2<T>]) -> Result<SectorAngles<T>> {
    let (m, big_m) = values.iter().fold((T::infinity(), T::zero()), |(m, big_m), mu| {
        (m.min(ellipticity(mu)), big_m.max(operator_norm(&mat2_to_matrix(mu))))
    });
    // ‖μ‖ ≥ λ_min(Re μ) exactly; rounding can invert them when μ is a multiple of I.
    SectorAngles::from_bounds(m, big_m.max(m))
}

/// Gradients of the three barycentric hat functions on a triangle.
fn hat_gradients<T: Real>(p: [(T, T); 3]) -> (T, [(T, T); 3]) {
    let area2 = (p[1].0 - p[0].0) * (p[2].1 - p[0].1) - (p[2].0 - p[0].0) * (p[1].1 - p[0].1);
    let g = |a: usize, b: usize| ((p[a].1 - p[b].1) / area2, (p[b].0 - p[a].0) / area2);
    (area2 / T::lit(2.0), [g(1, 2), g(2, 0), g(0, 1)])
}

/// Assembles `A_full[i][j] = Σ_tri area · (μ ∇φ_j) · ∇φ_i` and eliminates the
/// Dirichlet rows and columns.
pub fn assemble<T: Real>(
    grid: &Grid<T>,
    mu: &CoefficientField<T>,
    bc: &BoundarySpec<T>,
) -> Result<AssembledForm<T>> {
    let values = mu.on_triangles(grid)?;
    let field_angles = field_bounds_of(&values)?;
    let n = grid.node_count();
    let mut a_full = Matrix::<T>::zeros(n);
    for (tri, mu_t) in grid.triangles().iter().zip(&values) {
        let coords = tri.nodes.map(|k| grid.node_coords(k));
        let (area, grads) = hat_gradients(coords);
        for (a, &i) in tri.nodes.iter().enumerate() {
            let gi = grads[a];
            for (b, &j) in tri.nodes.iter().enumerate() {
                let gj = grads[b];
                // (μ ∇φ_j) · ∇φ_i with real gradients.
                let mg0 = mu_t[0][0] * gj.0 + mu_t[0][1] * gj.1;
                let mg1 = mu_t[1][0] * gj.0 + mu_t[1][1] * gj.1;
                a_full[(i, j)] += (mg0 * gi.0 + mg1 * gi.1) * area;
            }
        }
    }
    let dirichlet_nodes = bc.dirichlet_nodes(grid)?;
    let mut is_dirichlet = vec![false; n];
    for &k in &dirichlet_nodes {
        is_dirichlet[k] = true;
    }
    let free_nodes: Vec<usize> = (0..n).filter(|&k| !is_dirichlet[k]).collect();
    if free_nodes.is_empty() {
        return Err(Error::Invalid("every node is Dirichlet; no free nodes".into()));
    }
    let a = a_full.submatrix(&free_nodes);
    Ok(AssembledForm {
        a_full,
        free_nodes,
        dirichlet_nodes,
        a,
        field_angles,
    })
}

/// Nodal values `f(x_k, y_k)`.
pub fn interpolate<T: Real, F>(grid: &Grid<T>, f: F) -> Vector<T>
where
    F: Fn(T, T) -> Complex<T>,
{
    Vector(
        (0..grid.node_count())
            .map(|k| {
                let (x, y) = grid.node_coords(k);
                f(x, y)
            })
            .collect(),
    )
}

/// `a[u] = Σ_{i,j} A_full[i][j] u_j conj(u_i)` for a vector on all nodes.
pub fn form_value<T: Real>(form: &AssembledForm<T>, u: &Vector<T>) -> Result<Complex<T>> {
    form.a_full.quadratic_form(u)
}
