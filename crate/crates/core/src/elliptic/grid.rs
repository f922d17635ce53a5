use crate::error::{Error, Result};
use crate::scalar::Real;

/// Uniform rectangle `[0, Lx] × [0, Ly]` with `nx × ny` cells. Nodes are
/// numbered row-major with x fastest; every cell is split along its
/// lower-left to upper-right diagonal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid<T: Real> {
    nx: usize,
    ny: usize,
    lx: T,
    ly: T,
}

/// One P1 triangle: vertex node indices (counter-clockwise) and owning cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Triangle {
    pub nodes: [usize; 3],
    pub cell: usize,
}

impl<T: Real> Grid<T> {
    pub fn new(nx: usize, ny: usize, lx: T, ly: T) -> Result<Self> {
        if nx == 0 || ny == 0 {
            return Err(Error::Invalid(format!("grid needs at least one cell per side, got {nx}x{ny}")));
        }
        if !(lx > T::zero() && lx.is_finite() && ly > T::zero() && ly.is_finite()) {
            return Err(Error::Invalid(format!("side lengths must be positive, got {lx} x {ly}")));
        }
        Ok(Self { nx, ny, lx, ly })
    }

    pub fn unit_square(n: usize) -> Result<Self> {
        Self::new(n, n, T::one(), T::one())
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn lx(&self) -> T {
        self.lx
    }

    pub fn ly(&self) -> T {
        self.ly
    }

    pub fn node_count(&self) -> usize {
        (self.nx + 1) * (self.ny + 1)
    }

    pub fn cell_count(&self) -> usize {
        self.nx * self.ny
    }

    pub fn node_index(&self, i: usize, j: usize) -> usize {
        j * (self.nx + 1) + i
    }

    /// Lattice position `(i, j)` of a node.
    pub fn node_ij(&self, node: usize) -> (usize, usize) {
        (node % (self.nx + 1), node / (self.nx + 1))
    }

    pub fn node_coords(&self, node: usize) -> (T, T) {
        let (i, j) = self.node_ij(node);
        (
            self.lx * T::lit(i as f64) / T::lit(self.nx as f64),
            self.ly * T::lit(j as f64) / T::lit(self.ny as f64),
        )
    }

    pub fn area(&self) -> T {
        self.lx * self.ly
    }

    pub fn triangle_area(&self) -> T {
        self.area() / T::lit((2 * self.nx * self.ny) as f64)
    }

    pub fn triangles(&self) -> Vec<Triangle> {
        let mut out = Vec::with_capacity(2 * self.cell_count());
        for cj in 0..self.ny {
            for ci in 0..self.nx {
                let cell = cj * self.nx + ci;
                let ll = self.node_index(ci, cj);
                let lr = self.node_index(ci + 1, cj);
                let ur = self.node_index(ci + 1, cj + 1);
                let ul = self.node_index(ci, cj + 1);
                out.push(Triangle { nodes: [ll, lr, ur], cell });
                out.push(Triangle { nodes: [ll, ur, ul], cell });
            }
        }
        out
    }

    pub fn centroid(&self, tri: &Triangle) -> (T, T) {
        let three = T::lit(3.0);
        let (sx, sy) = tri.nodes.iter().fold((T::zero(), T::zero()), |(ax, ay), &k| {
            let (x, y) = self.node_coords(k);
            (ax + x, ay + y)
        });
        (sx / three, sy / three)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_areas() {
        let g = Grid::new(3, 2, 1.5, 1.0).unwrap();
        assert_eq!(g.node_count(), 12);
        let tris = g.triangles();
        assert_eq!(tris.len(), 12);
        for t in &tris {
            let p: Vec<(f64, f64)> = t.nodes.iter().map(|&k| g.node_coords(k)).collect();
            let area2 = (p[1].0 - p[0].0) * (p[2].1 - p[0].1) - (p[2].0 - p[0].0) * (p[1].1 - p[0].1);
            assert!((area2 / 2.0 - g.triangle_area()).abs() < 1e-15);
            assert!(area2 > 0.0);
        }
    }

    #[test]
    fn row_major_x_fastest() {
        let g = Grid::<f64>::unit_square(1).unwrap();
        let xs: Vec<(f64, f64)> = (0..4).map(|k| g.node_coords(k)).collect();
        assert_eq!(xs, vec![(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0)]);
    }

    #[test]
    fn rejects_degenerate() {
        assert!(Grid::new(0, 1, 1.0, 1.0).is_err());
        assert!(Grid::new(1, 1, 0.0, 1.0).is_err());
    }
}
