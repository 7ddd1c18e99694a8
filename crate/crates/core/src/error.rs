//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by input validation and problem construction.
///
/// Solver and identification *outcomes* (infeasible, numeric failure) are
/// statuses on their result types, not errors; `Error` is reserved for
/// inputs that violate a documented precondition.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A contingency table with total count zero.
    #[error("contingency table is empty: all four counts are zero")]
    EmptyTable,

    /// A margin (row or column total) of the table is zero, so conditional
    /// risks and the relative risk are undefined.
    #[error("degenerate margin: no observations with {margin}")]
    DegenerateMargin { margin: &'static str },

    /// A probability-like input outside its admissible range.
    #[error("{name} = {value} is outside [{lo}, {hi}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    /// Twin counts whose components do not add up to the pair count.
    #[error("twin counts are inconsistent: both + one + neither = {sum} but n_pairs = {n_pairs}")]
    InconsistentTwinCounts { sum: u64, n_pairs: u64 },

    /// No twin pair carries the trait (2C + D = 0), so concordance is undefined.
    #[error("trait absent from twin sample: 2*both + one = 0")]
    TraitAbsent,

    /// Transported concordance below the trait mean: the variance bound of
    /// the concordance inequality would be negative, signalling that either
    /// the transported value or the representativeness assumption fails for
    /// this population.
    #[error(
        "concordance {bc} is below the trait mean {trait_mean}: \
         the implied variance bound is negative; the transported concordance \
         is inconsistent with this population"
    )]
    AssumptionInconsistentConcordance { bc: f64, trait_mean: f64 },

    /// Grid axis with zero cells.
    #[error("grid axis counts must all be at least 1")]
    ZeroAxisCount,

    /// Refinement factor that does not preserve centroid nesting.
    #[error("refinement factor must be an odd integer >= 3, got {factor}")]
    InvalidRefinementFactor { factor: u32 },

    /// A mass vector whose length does not match the grid.
    #[error("mass vector has length {actual}, grid has {expected} cells")]
    MassLengthMismatch { expected: usize, actual: usize },

    /// A negative cell mass.
    #[error("cell {index} has negative mass {value}")]
    NegativeMass { index: usize, value: f64 },

    /// Masses that do not sum to one within tolerance.
    #[error("masses sum to {sum}, expected 1 within {tol}")]
    UnnormalizedMasses { sum: f64, tol: f64 },

    /// Variance-cap trait mean inconsistent with the observed margin it must match.
    #[error("{which} cap has trait mean {cap_mean} but the table implies {observed}")]
    CapMeanMismatch {
        which: &'static str,
        cap_mean: f64,
        observed: f64,
    },

    /// Structurally invalid linear program (row lengths, non-finite data).
    #[error("malformed linear program: {reason}")]
    MalformedProgram { reason: String },

    /// A sampler that can produce triples on the boundary of the unit cube.
    #[error("population sampler is degenerate: {reason}")]
    DegenerateSampler { reason: String },

    /// Bootstrap aggregation with no solved replicate.
    #[error("all {replicates} bootstrap replicates were infeasible; no percentile summary exists")]
    DegenerateBootstrapReport { replicates: u32 },

    /// Malformed CSV table input.
    #[error("invalid table CSV: {reason}")]
    MalformedCsv { reason: String },

    /// An operation that requires a different estimand.
    #[error("operation requires the {required} estimand, problem has {actual}")]
    EstimandMismatch {
        required: &'static str,
        actual: &'static str,
    },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
