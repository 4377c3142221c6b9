//! Irreducibility and factor-degree criteria for polynomials over discrete
//! valuation domains, driven by Newton slopes and the Newton index.
//!
//! The crate is organised bottom-up:
//!
//! - [`valuation`]: p-adic and negative-degree valuations behind one interface.
//! - [`poly`]: dense polynomials over ℤ and over ℤ[x] (viewed as univariate in `y`).
//! - [`newton`]: slopes `m_i(f)`, the Newton index `e(f)`, the dominant index and
//!   the lower Newton polygon of a [`ValuationProfile`].
//! - [`criteria`]: hypothesis-by-hypothesis evaluation of the factor-degree criteria.
//! - [`oracle`]: Kronecker brute-force factorization used to validate verdicts.
//! - [`families`]: the three worked polynomial families plus seeded random instances.

pub mod criteria;
pub mod families;
pub mod newton;
pub mod oracle;
pub mod poly;
pub mod valuation;

pub use criteria::{
    analyze, check_theorem_1, check_theorem_2, check_theorem_a, check_weintraub, AnalysisReport,
    ConditionB, Criterion, CriterionReport, Hypothesis, StrongestVerdict, Verdict,
};
pub use families::{FamilyError, FamilyKind, FamilyParams, Lcg, XUnits};
pub use newton::{
    dominant_index, lower_hull, newton_index, slope_at, valuation_profile, NewtonError,
    PolygonVertex, Slope, ValuationProfile,
};
pub use oracle::{
    bipartitions, check_kappa, kappa_trace, kronecker_factor, specialization_evidence,
    validate_verdict, FactorPair, Factorization, FactorizationLimits, KappaCheck, OracleError,
    SpecializationEvidence, ValidationReport,
};
pub use poly::{BiPoly, IntPoly, PolyError, Polynomial};
pub use valuation::{
    degree_valuation, padic_valuation, DiscreteValuation, Prime, ValInt, ValuationError,
};

pub use num_bigint::BigInt;
