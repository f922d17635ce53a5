use super::grid::Grid;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Closed parameter intervals in `[0, 1]` marking the Dirichlet part of each
/// side. Bottom and top are parametrized by `x / Lx`, left and right by `y / Ly`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct BoundarySpec<T: Real> {
    pub left: Vec<(T, T)>,
    pub right: Vec<(T, T)>,
    pub bottom: Vec<(T, T)>,
    pub top: Vec<(T, T)>,
}

impl<T: Real> BoundarySpec<T> {
    /// Pure Neumann: no Dirichlet part.
    pub fn neumann() -> Self {
        Self {
            left: vec![],
            right: vec![],
            bottom: vec![],
            top: vec![],
        }
    }

    /// Dirichlet on the whole boundary.
    pub fn dirichlet() -> Self {
        let full = vec![(T::zero(), T::one())];
        Self {
            left: full.clone(),
            right: full.clone(),
            bottom: full.clone(),
            top: full,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (side, list) in self.sides() {
            for &(a, b) in list {
                if !(a >= T::zero() && b <= T::one() && a <= b) {
                    return Err(Error::Invalid(format!(
                        "{side} interval [{a}, {b}] must satisfy 0 <= a <= b <= 1"
                    )));
                }
            }
        }
        Ok(())
    }

    fn sides(&self) -> [(&'static str, &Vec<(T, T)>); 4] {
        [
            ("left", &self.left),
            ("right", &self.right),
            ("bottom", &self.bottom),
            ("top", &self.top),
        ]
    }

    /// Sorted indices of nodes lying on a marked interval.
    pub fn dirichlet_nodes(&self, grid: &Grid<T>) -> Result<Vec<usize>> {
        self.validate()?;
        let slack = T::tol(1e-12);
        let hit = |list: &[(T, T)], t: T| list.iter().any(|&(a, b)| t >= a - slack && t <= b + slack);
        let nx = T::lit(grid.nx() as f64);
        let ny = T::lit(grid.ny() as f64);
        Ok((0..grid.node_count())
            .filter(|&k| {
                let (i, j) = grid.node_ij(k);
                let s = T::lit(i as f64) / nx;
                let t = T::lit(j as f64) / ny;
                (i == 0 && hit(&self.left, t))
                    || (i == grid.nx() && hit(&self.right, t))
                    || (j == 0 && hit(&self.bottom, s))
                    || (j == grid.ny() && hit(&self.top, s))
            })
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_dirichlet_marks_the_ring() {
        let g = Grid::<f64>::unit_square(3).unwrap();
        let d = BoundarySpec::dirichlet().dirichlet_nodes(&g).unwrap();
        assert_eq!(d.len(), 12);
        assert!(!d.contains(&g.node_index(1, 1)));
    }

    #[test]
    fn partial_side() {
        let g = Grid::<f64>::unit_square(4).unwrap();
        let bc = BoundarySpec {
            left: vec![(0.0, 0.5)],
            ..BoundarySpec::neumann()
        };
        let d = bc.dirichlet_nodes(&g).unwrap();
        assert_eq!(d, vec![g.node_index(0, 0), g.node_index(0, 1), g.node_index(0, 2)]);
    }

    #[test]
    fn degenerate_interval_is_a_point() {
        let g = Grid::<f64>::unit_square(2).unwrap();
        let bc = BoundarySpec {
            top: vec![(1.0, 1.0)],
            ..BoundarySpec::neumann()
        };
        assert_eq!(bc.dirichlet_nodes(&g).unwrap(), vec![g.node_index(2, 2)]);
    }

    #[test]
    fn rejects_bad_intervals() {
        let bc = BoundarySpec {
            right: vec![(0.6, 0.2)],
            ..BoundarySpec::<f64>::neumann()
        };
        assert!(bc.validate().is_err());
        let bc = BoundarySpec {
            right: vec![(-0.1, 0.2)],
            ..BoundarySpec::<f64>::neumann()
        };
        assert!(bc.validate().is_err());
    }
}
