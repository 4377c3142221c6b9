//! Ground truth for the criteria: brute-force factorization over ℤ.
//!
//! [`kronecker_factor`] splits a polynomial into irreducible factors by
//! Kronecker's interpolation method, [`bipartitions`] enumerates every way of
//! grouping those factors into `f = g·h`, and [`validate_verdict`] checks a
//! criterion's conclusion against each grouping. [`kappa_trace`] recomputes
//! the integer `κ` that drives the divisibility argument for each grouping.
//!
//! Bivariate polynomials are not factored. For a polynomial monic in `y`,
//! [`specialization_evidence`] factors the specializations `Z(x0, y)` instead.

mod evidence;
mod kronecker;
mod validate;

use num_bigint::BigInt;
use thiserror::Error;

pub use evidence::{
    specialization_evidence, EvidenceError, SpecializationEvidence, SpecializationRecord,
    SPECIALIZATION_POINTS,
};
pub use kronecker::{kronecker_factor, Factorization};
pub use validate::{
    bipartitions, check_kappa, kappa_trace, pairs_from_factorization, validate_verdict,
    validate_with, BipartitionCheck, FactorPair, KappaCheck, ValidationReport,
};

/// Resource caps for the brute-force search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationLimits {
    pub max_degree: usize,
    pub max_abs_coefficient: BigInt,
    /// Cap on divisor choices explored while searching for one factor degree.
    pub max_sample_divisors: u64,
}

impl Default for FactorizationLimits {
    fn default() -> Self {
        FactorizationLimits {
            max_degree: 8,
            max_abs_coefficient: BigInt::from(1_000_000),
            max_sample_divisors: 100_000,
        }
    }
}

impl FactorizationLimits {
    pub fn with_max_degree(mut self, max_degree: usize) -> Self {
        self.max_degree = max_degree;
        self
    }

    pub fn with_max_sample_divisors(mut self, budget: u64) -> Self {
        self.max_sample_divisors = budget;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("cannot factor the zero polynomial")]
    ZeroPolynomial,
    #[error("degree {degree} exceeds the oracle limit {max}")]
    DegreeLimit { degree: usize, max: usize },
    #[error("coefficient magnitude {magnitude} exceeds the oracle limit {max}")]
    CoefficientLimit { magnitude: BigInt, max: BigInt },
    #[error(
        "divisor search for degree-{degree} factors exceeded the budget of {budget} combinations"
    )]
    DivisorBudget { degree: usize, budget: u64 },
    #[error("the oracle factors univariate integer polynomials under a p-adic valuation only")]
    UnsupportedValuation,
    #[error("kappa precondition violated: {0}")]
    KappaPrecondition(String),
}
