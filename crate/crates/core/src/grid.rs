//! Uniform radial grids on [0, ρ_max] shared by the PDE solver, quadrature
//! domains, and table output.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum GridError {
    #[error("rho_max must be positive and finite, got {0}")]
    RhoMax(f64),
    #[error("grid needs at least 16 points, got {0}")]
    TooFewPoints(usize),
}

/// Strictly increasing uniform grid `0 = ρ_0 < ρ_1 < ... < ρ_{n-1} = ρ_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialGrid {
    rho_max: f64,
    n_points: usize,
}

impl RadialGrid {
    pub fn new(rho_max: f64, n_points: usize) -> Result<Self, GridError> {
        if !(rho_max > 0.0) || !rho_max.is_finite() {
            return Err(GridError::RhoMax(rho_max));
        }
        if n_points < 16 {
            return Err(GridError::TooFewPoints(n_points));
        }
        Ok(Self { rho_max, n_points })
    }

    /// Grid covering the quadrature tail cutoff for a kernel centered at
    /// `rho0`, with spacing no coarser than `h`.
    pub fn covering_tail(rho0: f64, dt_product: f64, h: f64) -> Result<Self, GridError> {
        let rho_max = tail_cutoff(rho0, dt_product);
        let n = (rho_max / h).ceil() as usize + 1;
        Self::new(rho_max, n.max(16))
    }

    pub fn rho_min(&self) -> f64 {
        0.0
    }

    pub fn rho_max(&self) -> f64 {
        self.rho_max
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn spacing(&self) -> f64 {
        self.rho_max / (self.n_points - 1) as f64
    }

    pub fn node(&self, i: usize) -> f64 {
        debug_assert!(i < self.n_points);
        i as f64 * self.spacing()
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n_points).map(|i| self.node(i))
    }
}

/// Domain cutoff beyond which the kernel's radial mass is negligible
/// (< 1e-16 of the peak): the Gaussian factor has width √(4Dt) around the
/// drifted center, the drift advances the peak by about 2Dt, and the
/// sinh²ρ volume growth is covered by the extra additive term.
pub fn tail_cutoff(rho0: f64, dt_product: f64) -> f64 {
    rho0 + 20.0f64.max(12.0 * (4.0 * dt_product).sqrt()) + 4.0 * dt_product
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_grids() {
        assert_eq!(RadialGrid::new(0.0, 32), Err(GridError::RhoMax(0.0)));
        assert_eq!(RadialGrid::new(1.0, 8), Err(GridError::TooFewPoints(8)));
    }

    #[test]
    fn nodes_are_uniform_and_cover_the_interval() {
        let g = RadialGrid::new(15.0, 1501).unwrap();
        assert_eq!(g.spacing(), 0.01);
        assert_eq!(g.node(0), 0.0);
        assert!((g.node(1500) - 15.0).abs() < 1e-12);
        assert_eq!(g.nodes().count(), 1501);
    }

    #[test]
    fn tail_cutoff_grows_with_all_arguments() {
        assert!(tail_cutoff(0.0, 1.0) >= 20.0);
        assert!(tail_cutoff(2.0, 1.0) > tail_cutoff(0.0, 1.0));
        assert!(tail_cutoff(0.0, 10.0) > tail_cutoff(0.0, 1.0));
        // large Dt switches to the 12-sigma branch
        assert!((tail_cutoff(0.0, 10.0) - (12.0 * 40.0f64.sqrt() + 40.0)).abs() < 1e-12);
    }
}
