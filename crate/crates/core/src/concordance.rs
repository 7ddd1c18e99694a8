//! Twin-concordance statistics and the variance caps they imply.
//!
//! A twin study with `n` pairs splits into `C` pairs where both members
//! carry the trait, `D` pairs where exactly one does, and `U = n - C - D`
//! where neither does. Probandwise concordance is `BC = 2C / (2C + D)`,
//! pairwise concordance is `PC = C / (C + D)`, and the two determine each
//! other through `1 - BC = (1 - PC) / (1 + PC)`.
//!
//! For a trait with population mean `m` and a transported probandwise
//! concordance `BC`, the variance of the individual trait propensities is
//! bounded by `m * (BC - m)` provided twins share propensities and shared
//! environments make homogeneous pairs at least as likely as independent
//! draws would. That bound is the cap enforced on the identification
//! programs' second-moment rows.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tables::JointFrequencies;

fn check_unit(name: &'static str, value: f64) -> Result<()> {
    if !value.is_finite() || !(0.0..=1.0).contains(&value) {
        return Err(Error::OutOfRange {
            name,
            value,
            lo: 0.0,
            hi: 1.0,
        });
    }
    Ok(())
}

/// Convert pairwise concordance to probandwise concordance.
///
/// `bc = 2 pc / (1 + pc)`, the inverse of [`bc_to_pc`].
pub fn pc_to_bc(pc: f64) -> Result<f64> {
    check_unit("pc", pc)?;
    Ok(2.0 * pc / (1.0 + pc))
}

/// Convert probandwise concordance to pairwise concordance.
///
/// `pc = bc / (2 - bc)`, the inverse of [`pc_to_bc`].
pub fn bc_to_pc(bc: f64) -> Result<f64> {
    check_unit("bc", bc)?;
    Ok(bc / (2.0 - bc))
}

/// Probandwise concordances of the exposure and outcome traits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConcordanceSpec {
    /// Probandwise concordance of the exposure trait, in (0, 1].
    pub bc_e: f64,
    /// Probandwise concordance of the outcome trait, in (0, 1].
    pub bc_d: f64,
}

impl ConcordanceSpec {
    pub fn new(bc_e: f64, bc_d: f64) -> Result<Self> {
        for (name, v) in [("bc_e", bc_e), ("bc_d", bc_d)] {
            check_unit(name, v)?;
            if v == 0.0 {
                return Err(Error::OutOfRange {
                    name,
                    value: v,
                    lo: f64::MIN_POSITIVE,
                    hi: 1.0,
                });
            }
        }
        Ok(Self { bc_e, bc_d })
    }
}

/// Raw pair counts from a twin study.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinCounts {
    pub n_pairs: u64,
    /// Pairs where both members have the trait (C).
    pub both: u64,
    /// Pairs where exactly one member has the trait (D).
    pub one: u64,
    /// Pairs where neither member has the trait (U).
    pub neither: u64,
}

impl TwinCounts {
    pub fn new(both: u64, one: u64, neither: u64) -> Result<Self> {
        let n_pairs = both + one + neither;
        let counts = Self {
            n_pairs,
            both,
            one,
            neither,
        };
        counts.validate()?;
        Ok(counts)
    }

    pub fn validate(&self) -> Result<()> {
        let sum = self.both + self.one + self.neither;
        if sum != self.n_pairs {
            return Err(Error::InconsistentTwinCounts {
                sum,
                n_pairs: self.n_pairs,
            });
        }
        if 2 * self.both + self.one == 0 {
            return Err(Error::TraitAbsent);
        }
        Ok(())
    }
}

/// Summary statistics of a twin sample.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TwinStats {
    /// Probandwise concordance, `2C / (2C + D)`.
    pub bc: f64,
    /// Pairwise concordance, `C / (C + D)`.
    pub pc: f64,
    /// Proportion of homogeneous pairs, `(U + C) / n`.
    pub v: f64,
    /// Proportion of individuals with the trait, `(2C + D) / (2n)`.
    pub trait_mean: f64,
}

/// Compute concordances, the homogeneous-pair proportion, and the trait
/// mean from raw twin counts.
pub fn twin_stats(tc: &TwinCounts) -> Result<TwinStats> {
    tc.validate()?;
    let c = tc.both as f64;
    let d = tc.one as f64;
    let n = tc.n_pairs as f64;
    Ok(TwinStats {
        bc: 2.0 * c / (2.0 * c + d),
        pc: if c + d == 0.0 { 0.0 } else { c / (c + d) },
        v: (tc.neither + tc.both) as f64 / n,
        trait_mean: (2.0 * c + d) / (2.0 * n),
    })
}

/// Upper bound on the variance of a trait's propensity probabilities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VarianceCap {
    /// Population mean of the trait (the pinned first moment).
    pub trait_mean: f64,
    /// The bound `trait_mean * (bc - trait_mean)`.
    pub cap: f64,
}

/// The concordance-implied variance bound for a trait with the given
/// population mean.
///
/// `bc < trait_mean` is rejected rather than clamped: a negative bound
/// means the transported concordance cannot describe this population, and
/// proceeding would silently produce misleading intervals.
pub fn variance_cap(bc: f64, trait_mean: f64) -> Result<VarianceCap> {
    check_unit("bc", bc)?;
    if !trait_mean.is_finite() || trait_mean <= 0.0 || trait_mean >= 1.0 {
        return Err(Error::OutOfRange {
            name: "trait_mean",
            value: trait_mean,
            lo: 0.0,
            hi: 1.0,
        });
    }
    if bc == 0.0 {
        return Err(Error::OutOfRange {
            name: "bc",
            value: bc,
            lo: f64::MIN_POSITIVE,
            hi: 1.0,
        });
    }
    if bc < trait_mean {
        return Err(Error::AssumptionInconsistentConcordance { bc, trait_mean });
    }
    Ok(VarianceCap {
        trait_mean,
        cap: trait_mean * (bc - trait_mean),
    })
}

/// Both identification caps for a table: the exposure cap pairs `bc_e`
/// with `P(e=1)`, the risk cap pairs `bc_d` with `P(d=1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IdentificationCaps {
    pub exposure: VarianceCap,
    pub risk: VarianceCap,
}

/// Build the pair of caps the identification programs need.
pub fn caps_for(freqs: &JointFrequencies, bc_e: f64, bc_d: f64) -> Result<IdentificationCaps> {
    Ok(IdentificationCaps {
        exposure: variance_cap(bc_e, freqs.p_e1)?,
        risk: variance_cap(bc_d, freqs.p_d1)?,
    })
}
