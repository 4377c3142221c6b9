use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::kronecker::{canonical_order, kronecker_factor, Factorization};
use super::{FactorizationLimits, OracleError};
use crate::criteria::{Criterion, CriterionReport, Verdict};
use crate::newton::ValuationProfile;
use crate::poly::IntPoly;
use crate::valuation::{padic_valuation, DiscreteValuation, Prime, ValInt};

/// A factorization `f = g·h` (up to a unit) with `deg g, deg h ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorPair {
    pub g: IntPoly,
    pub h: IntPoly,
    pub k1: usize,
    pub k2: usize,
    /// `v(g(0))`.
    pub x1: ValInt,
    /// `v(h(0))`.
    pub x2: ValInt,
}

impl FactorPair {
    pub fn new(g: IntPoly, h: IntPoly, p: &Prime) -> Self {
        FactorPair {
            k1: g.degree().unwrap_or(0),
            k2: h.degree().unwrap_or(0),
            x1: padic_valuation(&g.coeff(0), p),
            x2: padic_valuation(&h.coeff(0), p),
            g,
            h,
        }
    }

    /// The same factorization with the roles of `g` and `h` exchanged.
    pub fn swapped(&self) -> FactorPair {
        FactorPair {
            g: self.h.clone(),
            h: self.g.clone(),
            k1: self.k2,
            k2: self.k1,
            x1: self.x2.clone(),
            x2: self.x1.clone(),
        }
    }
}

/// Every unordered split of the irreducible factors of `f` into two groups
/// of positive degree, reported once each with `k1 ≤ k2`.
pub fn bipartitions(
    f: &IntPoly,
    p: &Prime,
    limits: &FactorizationLimits,
) -> Result<Vec<FactorPair>, OracleError> {
    let fac = kronecker_factor(f, limits)?;
    Ok(pairs_from_factorization(&fac, p))
}

/// [`bipartitions`] for an already computed factorization.
pub fn pairs_from_factorization(fac: &Factorization, p: &Prime) -> Vec<FactorPair> {
    // Group equal factors; `fac.factors` is sorted so equal ones are adjacent.
    let mut groups: Vec<(IntPoly, usize)> = Vec::new();
    for f in &fac.factors {
        match groups.last_mut() {
            Some((g, m)) if g == f => *m += 1,
            _ => groups.push((f.clone(), 1)),
        }
    }

    let mut pairs = Vec::new();
    let mut counts = vec![0usize; groups.len()];
    loop {
        let complement: Vec<usize> = groups
            .iter()
            .zip(&counts)
            .map(|((_, m), c)| m - c)
            .collect();
        let g = product(&groups, &counts);
        let h = product(&groups, &complement);
        let (k1, k2) = (g.degree().unwrap_or(0), h.degree().unwrap_or(0));
        if k1 > 0 && k2 > 0 && (k1 < k2 || (k1 == k2 && counts <= complement)) {
            pairs.push(FactorPair::new(g, h, p));
        }
        // Next count vector in mixed radix.
        let mut i = 0;
        while i < counts.len() && counts[i] == groups[i].1 {
            counts[i] = 0;
            i += 1;
        }
        if i == counts.len() {
            break;
        }
        counts[i] += 1;
    }
    pairs.sort_by(|a, b| a.k1.cmp(&b.k1).then_with(|| canonical_order(&a.g, &b.g)));
    pairs
}

fn product(groups: &[(IntPoly, usize)], counts: &[usize]) -> IntPoly {
    groups
        .iter()
        .zip(counts)
        .fold(IntPoly::one(), |acc, ((f, _), &c)| &acc * &f.pow(c as u32))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartitionCheck {
    pub pair: FactorPair,
    pub passed: bool,
}

/// A verdict checked against the oracle's factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub criterion: Criterion,
    pub verdict: Verdict,
    pub factorization: Factorization,
    pub checks: Vec<BipartitionCheck>,
    pub valid: bool,
}

/// Checks `report.verdict` against every bipartition of `f`.
pub fn validate_verdict(
    f: &IntPoly,
    v: &DiscreteValuation,
    report: &CriterionReport,
    limits: &FactorizationLimits,
) -> Result<ValidationReport, OracleError> {
    let p = v.prime().ok_or(OracleError::UnsupportedValuation)?;
    let fac = kronecker_factor(f, limits)?;
    let pairs = pairs_from_factorization(&fac, p);
    Ok(validate_with(&fac, &pairs, report))
}

/// [`validate_verdict`] for an already computed factorization.
pub fn validate_with(
    fac: &Factorization,
    pairs: &[FactorPair],
    report: &CriterionReport,
) -> ValidationReport {
    let checks: Vec<BipartitionCheck> = pairs
        .iter()
        .map(|pair| BipartitionCheck {
            passed: report.verdict.admits(pair.k1, pair.k2),
            pair: pair.clone(),
        })
        .collect();
    let valid = match report.verdict {
        Verdict::Irreducible => fac.is_irreducible(),
        _ => checks.iter().all(|c| c.passed),
    };
    ValidationReport {
        criterion: report.criterion,
        verdict: report.verdict.clone(),
        factorization: fac.clone(),
        checks,
        valid,
    }
}

/// `κ = ((n-s)/d_s)·x_2 - k_2·(y_s/d_s)` for the pair as ordered.
pub fn kappa_trace(
    profile: &ValuationProfile,
    pair: &FactorPair,
    s: usize,
    d_s: usize,
) -> Result<BigInt, OracleError> {
    let n = profile.n();
    let fail = |msg: String| Err(OracleError::KappaPrecondition(msg));
    if s >= n {
        return fail(format!("s = {s} is not below n = {n}"));
    }
    if pair.k1 + pair.k2 != n {
        return fail(format!("k1 + k2 = {} ≠ n = {n}", pair.k1 + pair.k2));
    }
    if d_s == 0 || !(n - s).is_multiple_of(d_s) {
        return fail(format!("d_s = {d_s} does not divide n - s = {}", n - s));
    }
    let Some(x2) = pair.x2.as_finite() else {
        return fail("x2 = v(h(0)) is infinite".into());
    };
    let Some(ys) = profile.val(s).as_finite() else {
        return fail(format!("y_s = v(a_{s}) is infinite"));
    };
    let d = BigInt::from(d_s);
    let (ys_over_d, r) = ys.div_rem(&d);
    if !r.is_zero() {
        return fail(format!("d_s = {d_s} does not divide y_s = {ys}"));
    }
    Ok(BigInt::from((n - s) / d_s) * x2 - BigInt::from(pair.k2) * ys_over_d)
}

/// `κ` together with the divisibility it forces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaCheck {
    pub kappa: BigInt,
    /// `(n-s)/d_s`.
    pub modulus: usize,
    /// `κ ∈ {0, 1}`.
    pub in_dichotomy: bool,
    /// `modulus | k2` when `κ = 0`, `modulus | k1` when `κ = 1`.
    pub divisibility_holds: bool,
}

impl KappaCheck {
    pub fn holds(&self) -> bool {
        self.in_dichotomy && self.divisibility_holds
    }
}

pub fn check_kappa(
    profile: &ValuationProfile,
    pair: &FactorPair,
    s: usize,
    d_s: usize,
) -> Result<KappaCheck, OracleError> {
    let kappa = kappa_trace(profile, pair, s, d_s)?;
    let modulus = (profile.n() - s) / d_s;
    let divisibility_holds = if kappa.is_zero() {
        pair.k2.is_multiple_of(modulus)
    } else if kappa == BigInt::from(1) {
        pair.k1.is_multiple_of(modulus)
    } else {
        false
    };
    Ok(KappaCheck {
        in_dichotomy: kappa.is_zero() || kappa == BigInt::from(1),
        kappa,
        modulus,
        divisibility_holds,
    })
}
