use serde::Serialize;

use crate::error::{Error, Result};
use crate::nucore::PotentialExpr;

/// Uniform Dirichlet grid with `count` interior nodes `left + i·h`, `i = 1..=count`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Grid {
    pub left: f64,
    pub right: f64,
    pub count: usize,
}

impl Grid {
    pub const MIN_COUNT: usize = 16;

    pub fn new(left: f64, right: f64, count: usize) -> Result<Self> {
        if !(left.is_finite() && right.is_finite() && left < right) {
            return Err(Error::InvalidGrid(format!(
                "need finite left < right, got ({left}, {right})"
            )));
        }
        if count < Self::MIN_COUNT {
            return Err(Error::InvalidGrid(format!(
                "count {count} < {}",
                Self::MIN_COUNT
            )));
        }
        Ok(Self { left, right, count })
    }

    pub fn spacing(&self) -> f64 {
        (self.right - self.left) / (self.count + 1) as f64
    }

    /// Node `i` for `1 <= i <= count`.
    pub fn node(&self, i: usize) -> f64 {
        self.left + i as f64 * self.spacing()
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (1..=self.count).map(|i| self.node(i))
    }

    /// Same interval with the spacing halved.
    pub fn halved(&self) -> Self {
        Self {
            count: 2 * self.count + 1,
            ..*self
        }
    }

    pub(crate) fn check_inside(&self, domain: (f64, f64)) -> Result<()> {
        if self.left >= domain.0 && self.right <= domain.1 {
            Ok(())
        } else {
            Err(Error::InvalidGrid(format!(
                "[{}, {}] is not inside the domain ({}, {})",
                self.left, self.right, domain.0, domain.1
            )))
        }
    }
}

/// Symmetric tridiagonal `-d²/dr² + V` with diagonal `2/h² + V(r_i)` and
/// constant off-diagonal `-1/h²`.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalOperator {
    pub diagonal: Vec<f64>,
    pub off_diagonal: f64,
}

impl TridiagonalOperator {
    pub fn from_potential(potential: &PotentialExpr, grid: &Grid) -> Result<Self> {
        let h = grid.spacing();
        let diagonal = grid
            .nodes()
            .map(|r| {
                let v = potential.eval(r);
                if v.is_finite() {
                    Ok(2.0 / (h * h) + v)
                } else {
                    Err(Error::GridPlacement(r))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            diagonal,
            off_diagonal: -1.0 / (h * h),
        })
    }

    pub fn dimension(&self) -> usize {
        self.diagonal.len()
    }

    /// Number of eigenvalues strictly below `x`.
    pub fn sturm_count(&self, x: f64) -> usize {
        let b2 = self.off_diagonal * self.off_diagonal;
        let mut count = 0;
        let mut q = 1.0;
        for (i, &d) in self.diagonal.iter().enumerate() {
            q = if i == 0 { d - x } else { d - x - b2 / q };
            if q == 0.0 {
                q = -f64::EPSILON * (d.abs() + x.abs() + self.off_diagonal.abs());
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    pub fn gershgorin_bounds(&self) -> (f64, f64) {
        let radius = 2.0 * self.off_diagonal.abs();
        let lo = self.diagonal.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = self
            .diagonal
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max);
        (lo - radius, hi + radius)
    }

    /// Eigenvalue `index` (0-based, ascending), bracketed to width
    /// `1e-10·(1 + |λ|)`.
    pub fn eigenvalue(&self, index: usize) -> f64 {
        let (mut lo, mut hi) = self.gershgorin_bounds();
        loop {
            let mid = 0.5 * (lo + hi);
            if hi - lo <= 1e-10 * (1.0 + mid.abs()) || mid <= lo || mid >= hi {
                return mid;
            }
            if self.sturm_count(mid) > index {
                hi = mid;
            } else {
                lo = mid;
            }
        }
    }
}

/// The `k` lowest Dirichlet eigenvalues of `-d²/dr² + V` on `grid`.
pub fn fd_eigensolve(potential: &PotentialExpr, grid: &Grid, k: usize) -> Result<Vec<f64>> {
    if k > grid.count / 4 {
        return Err(Error::InvalidGrid(format!(
            "k = {k} exceeds count/4 = {} for a {}-node grid",
            grid.count / 4,
            grid.count
        )));
    }
    grid.check_inside(potential.domain())?;
    let op = TridiagonalOperator::from_potential(potential, grid)?;
    Ok((0..k).map(|i| op.eigenvalue(i)).collect())
}

/// Errors of eigenvalue `index` on a grid and on the same grid with the
/// spacing halved.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConvergenceStudy {
    pub index: usize,
    pub exact: f64,
    pub coarse: f64,
    pub fine: f64,
    pub coarse_error: f64,
    pub fine_error: f64,
    /// `coarse_error / fine_error`, close to 4 for second-order convergence.
    pub ratio: f64,
}

pub fn convergence_study(
    potential: &PotentialExpr,
    grid: &Grid,
    index: usize,
    exact: f64,
) -> Result<ConvergenceStudy> {
    let coarse = fd_eigensolve(potential, grid, index + 1)?[index];
    let fine = fd_eigensolve(potential, &grid.halved(), index + 1)?[index];
    let coarse_error = (coarse - exact).abs();
    let fine_error = (fine - exact).abs();
    Ok(ConvergenceStudy {
        index,
        exact,
        coarse,
        fine,
        coarse_error,
        fine_error,
        ratio: coarse_error / fine_error,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nucore::Basis;
    use std::f64::consts::PI;

    fn free(right: f64) -> PotentialExpr {
        PotentialExpr::new((0.0, right))
    }

    #[test]
    fn box_spectrum() {
        let grid = Grid::new(0.0, PI, 4000).unwrap();
        let e = fd_eigensolve(&free(PI), &grid, 3).unwrap();
        for (k, v) in e.iter().enumerate() {
            let exact = ((k + 1) * (k + 1)) as f64;
            assert!((v - exact).abs() / exact < 1e-3);
        }
    }

    #[test]
    fn box_matches_discrete_formula() {
        // (2 - 2cos(kh))/h²
        let grid = Grid::new(0.0, PI, 99).unwrap();
        let h = grid.spacing();
        let e = fd_eigensolve(&free(PI), &grid, 3).unwrap();
        for (k, v) in e.iter().enumerate() {
            let exact = (2.0 - 2.0 * ((k + 1) as f64 * h).cos()) / (h * h);
            assert!((v - exact).abs() < 1e-9 * (1.0 + exact));
        }
    }

    #[test]
    fn box_converges_at_second_order() {
        let grid = Grid::new(0.0, PI, 200).unwrap();
        let c = convergence_study(&free(PI), &grid, 0, 1.0).unwrap();
        assert!((3.5..=4.5).contains(&c.ratio), "{c:?}");
    }

    #[test]
    fn sturm_count_is_monotone() {
        let grid = Grid::new(0.0, PI, 64).unwrap();
        let op = TridiagonalOperator::from_potential(&free(PI), &grid).unwrap();
        let (lo, hi) = op.gershgorin_bounds();
        assert_eq!(op.sturm_count(lo), 0);
        assert_eq!(op.sturm_count(hi), 64);
        let mut prev = 0;
        for i in 0..200 {
            let c = op.sturm_count(lo + (hi - lo) * i as f64 / 199.0);
            assert!(c >= prev);
            prev = c;
        }
    }

    #[test]
    fn singular_node_is_reported() {
        let v = PotentialExpr::from_terms((0.0, 2.0), [(1.0, Basis::InvR2)]).unwrap();
        let grid = Grid::new(-1.0, 2.0, 32).unwrap();
        assert!(matches!(
            TridiagonalOperator::from_potential(
                &v,
                &Grid {
                    left: -2.0,
                    right: 2.0,
                    count: 31
                }
            ),
            Err(Error::GridPlacement(_))
        ));
        assert!(matches!(
            fd_eigensolve(&v, &grid, 2),
            Err(Error::InvalidGrid(_))
        ));
    }

    #[test]
    fn rejects_bad_grids_and_requests() {
        assert!(Grid::new(0.0, 1.0, 8).is_err());
        assert!(Grid::new(1.0, 1.0, 32).is_err());
        let grid = Grid::new(0.0, 1.0, 32).unwrap();
        assert!(fd_eigensolve(&free(1.0), &grid, 9).is_err());
    }

    #[test]
    fn deterministic() {
        let grid = Grid::new(0.0, PI, 500).unwrap();
        let a = fd_eigensolve(&free(PI), &grid, 4).unwrap();
        let b = fd_eigensolve(&free(PI), &grid, 4).unwrap();
        assert_eq!(
            a.iter().map(|x| x.to_bits()).collect::<Vec<_>>(),
            b.iter().map(|x| x.to_bits()).collect::<Vec<_>>()
        );
    }
}
