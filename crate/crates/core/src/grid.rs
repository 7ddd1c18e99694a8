//! Discretization of the open unit cube of `(pi, r0, r1)` triples.
//!
//! The cube is partitioned into a regular `n_pi x n_r0 x n_r1` lattice of
//! boxes and a candidate distribution is a vector of nonnegative point
//! masses, one at each box centroid. Every moment functional of such a
//! distribution is exactly linear in the masses, which is what turns the
//! bounding problems into linear programs.
//!
//! Cells are enumerated with the `pi` index moving fastest, then `r0`,
//! then `r1`: cell `(i, j, l)` has flat index `i + n_pi * (j + n_r0 * l)`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance for the mass-normalization invariant.
pub const MASS_SUM_TOL: f64 = 1e-8;

/// A cell centroid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Centroid {
    pub pi: f64,
    pub r0: f64,
    pub r1: f64,
}

/// A regular partition of the open unit cube with centroid coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    n_pi: u32,
    n_r0: u32,
    n_r1: u32,
    cells: Vec<Centroid>,
}

impl Grid {
    /// Build a grid with the given number of cells per axis.
    pub fn new(n_pi: u32, n_r0: u32, n_r1: u32) -> Result<Self> {
        if n_pi == 0 || n_r0 == 0 || n_r1 == 0 {
            return Err(Error::ZeroAxisCount);
        }
        let axis = |n: u32| -> Vec<f64> {
            (0..n).map(|i| (i as f64 + 0.5) / n as f64).collect()
        };
        let (pis, r0s, r1s) = (axis(n_pi), axis(n_r0), axis(n_r1));
        let mut cells = Vec::with_capacity((n_pi * n_r0 * n_r1) as usize);
        for &r1 in &r1s {
            for &r0 in &r0s {
                for &pi in &pis {
                    cells.push(Centroid { pi, r0, r1 });
                }
            }
        }
        Ok(Self {
            n_pi,
            n_r0,
            n_r1,
            cells,
        })
    }

    /// Equal cell count on every axis.
    pub fn cubic(n: u32) -> Result<Self> {
        Self::new(n, n, n)
    }

    pub fn axis_counts(&self) -> (u32, u32, u32) {
        (self.n_pi, self.n_r0, self.n_r1)
    }

    /// Number of cells.
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Centroids in enumeration order.
    pub fn cells(&self) -> &[Centroid] {
        &self.cells
    }

    /// Refine every axis by an odd factor.
    ///
    /// Odd factors keep each coarse centroid exactly representable as a
    /// fine centroid, so coarse distributions embed into fine grids with
    /// no change to any integral.
    pub fn refine(&self, factor: u32) -> Result<Self> {
        if factor < 3 || factor % 2 == 0 {
            return Err(Error::InvalidRefinementFactor { factor });
        }
        Self::new(self.n_pi * factor, self.n_r0 * factor, self.n_r1 * factor)
    }

    /// Flat index of cell `(i, j, l)`.
    pub fn flat_index(&self, i: u32, j: u32, l: u32) -> usize {
        debug_assert!(i < self.n_pi && j < self.n_r0 && l < self.n_r1);
        (i + self.n_pi * (j + self.n_r0 * l)) as usize
    }
}

/// Nonnegative point masses on a grid's centroids, summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteDistribution {
    grid: Arc<Grid>,
    masses: Vec<f64>,
}

impl DiscreteDistribution {
    pub fn new(grid: Arc<Grid>, masses: Vec<f64>) -> Result<Self> {
        if masses.len() != grid.len() {
            return Err(Error::MassLengthMismatch {
                expected: grid.len(),
                actual: masses.len(),
            });
        }
        for (index, &value) in masses.iter().enumerate() {
            if !value.is_finite() || value < 0.0 {
                return Err(Error::NegativeMass { index, value });
            }
        }
        let sum: f64 = masses.iter().sum();
        if (sum - 1.0).abs() > MASS_SUM_TOL {
            return Err(Error::UnnormalizedMasses {
                sum,
                tol: MASS_SUM_TOL,
            });
        }
        Ok(Self { grid, masses })
    }

    /// Uniform masses over every cell.
    pub fn uniform(grid: Arc<Grid>) -> Self {
        let n = grid.len();
        Self {
            masses: vec![1.0 / n as f64; n],
            grid,
        }
    }

    pub fn grid(&self) -> &Arc<Grid> {
        &self.grid
    }

    pub fn masses(&self) -> &[f64] {
        &self.masses
    }

    /// Integrate a function of the centroid coordinates:
    /// the mass-weighted sum over cells.
    pub fn integrate<F: Fn(f64, f64, f64) -> f64>(&self, f: F) -> f64 {
        self.masses
            .iter()
            .zip(self.grid.cells())
            .map(|(&m, c)| m * f(c.pi, c.r0, c.r1))
            .sum()
    }

    /// Re-express this distribution on the grid refined by an odd factor.
    ///
    /// Each coarse cell's mass moves to the fine cell whose centroid
    /// coincides with the coarse centroid, so every integral is unchanged.
    pub fn embed_refined(&self, factor: u32) -> Result<Self> {
        let fine = Arc::new(self.grid.refine(factor)?);
        let mut masses = vec![0.0; fine.len()];
        let half = (factor - 1) / 2;
        for l in 0..self.grid.n_r1 {
            for j in 0..self.grid.n_r0 {
                for i in 0..self.grid.n_pi {
                    let coarse = self.grid.flat_index(i, j, l);
                    let fine_idx =
                        fine.flat_index(i * factor + half, j * factor + half, l * factor + half);
                    masses[fine_idx] = self.masses[coarse];
                }
            }
        }
        Ok(Self { grid: fine, masses })
    }
}
