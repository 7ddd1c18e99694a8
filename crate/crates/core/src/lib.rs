//! Partial identification of average treatment effects from a 2x2
//! exposure/outcome contingency table and twin-concordance rates.
//!
//! The observed data are the relative frequencies of a contingency table.
//! Each individual carries a latent triple `(pi, r0, r1)` in the open unit
//! cube: a propensity probability of exposure and two prognosis
//! probabilities of the outcome without and with exposure. The average
//! treatment effect (ATE) is the population mean of `r1 - r0`. Identical-twin
//! concordance for the exposure and outcome traits bounds the variance of
//! the propensity and expected-risk distributions, and every candidate
//! distribution over the cube must also reproduce the observed frequencies.
//! Minimizing and maximizing the ATE over a discretization of the cube is a
//! linear program; the two optima are the identification interval.
//!
//! Module map:
//!
//! - [`tables`]: contingency counts and observed relative frequencies.
//! - [`concordance`]: pairwise/probandwise conversion and variance caps.
//! - [`grid`]: discretization of the cube and point-mass distributions.
//! - [`identify`]: assembly and solution of the bounding programs.
//! - [`solver`]: the deterministic revised-simplex backend.
//! - [`oracle`]: synthetic data-generating processes for end-to-end
//!   validation of the bounds and their coverage.
//! - [`sensitivity`]: bootstrap resampling of the table.
//! - [`case_studies`]: the three bundled example tables.
//!
//! ```
//! use twinbound::{case_studies, concordance, grid, identify};
//!
//! let study = case_studies::smoking_copd();
//! let freqs = study.table.frequencies().unwrap();
//! let caps = concordance::caps_for(&freqs, study.bc_e, study.bc_d).unwrap();
//! let grid = grid::Grid::cubic(20).unwrap();
//! let problem = identify::IdentificationProblem::new(
//!     freqs, caps, grid, identify::EstimandKind::Ate).unwrap();
//! let bounds = problem.solve_bounds().unwrap();
//! assert!(bounds.status.is_solved());
//! assert!(bounds.lower <= bounds.upper);
//! ```

pub mod case_studies;
pub mod concordance;
pub mod error;
pub mod grid;
pub mod identify;
pub mod oracle;
pub mod sensitivity;
pub mod solver;
pub mod tables;

mod stream;

pub use error::{Error, Result};

/// Library version, surfaced in CLI reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
