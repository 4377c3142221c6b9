use std::collections::BTreeSet;

use num_bigint::BigInt;

use super::kronecker::{kronecker_factor, Factorization};
use super::{FactorizationLimits, OracleError};
use crate::criteria::Verdict;
use crate::poly::{BiPoly, IntPoly, PolyError};

/// Specialization points used by default: 0, ±1, ±2, ±3.
pub const SPECIALIZATION_POINTS: [i64; 7] = [0, 1, -1, 2, -2, 3, -3];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecializationRecord {
    pub x0: BigInt,
    pub specialized: IntPoly,
    pub factorization: Factorization,
    /// Degrees `k` with `0 < k < n` of some product of the irreducible factors.
    pub achievable: BTreeSet<usize>,
}

/// What the specializations of a monic-in-`y` polynomial say about its
/// `y`-factorizations.
///
/// A factorization `Z = G·H` with `y`-degrees `(k, n-k)` specializes to a
/// factorization of every `Z(x0, y)` with the same degrees. So the only
/// degree splits `Z` can have are those achievable at every point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecializationEvidence {
    pub degree: usize,
    pub records: Vec<SpecializationRecord>,
    /// `(k1, k2)` with `k1 ≤ k2` achievable at every specialization point.
    pub surviving_splits: Vec<(usize, usize)>,
}

impl SpecializationEvidence {
    /// No split survives: `Z` has no factorization into two factors of
    /// positive `y`-degree.
    pub fn certifies_irreducible(&self) -> bool {
        self.surviving_splits.is_empty()
    }

    /// Surviving splits that `verdict` rules out.
    pub fn contradictions(&self, verdict: &Verdict) -> Vec<(usize, usize)> {
        self.surviving_splits
            .iter()
            .copied()
            .filter(|&(k1, k2)| !verdict.admits(k1, k2))
            .collect()
    }

    pub fn consistent_with(&self, verdict: &Verdict) -> bool {
        self.contradictions(verdict).is_empty()
    }
}

pub fn specialization_evidence(
    z: &BiPoly,
    points: &[i64],
    limits: &FactorizationLimits,
) -> Result<SpecializationEvidence, EvidenceError> {
    let degree = z
        .degree()
        .ok_or(EvidenceError::Poly(PolyError::NotMonicInY("0".into())))?;
    let mut records = Vec::with_capacity(points.len());
    let mut surviving: BTreeSet<usize> = (1..degree).collect();
    for &x0 in points {
        let x0 = BigInt::from(x0);
        let specialized = z.specialize(&x0)?;
        let factorization = kronecker_factor(&specialized, limits)?;
        let achievable = subset_degree_sums(&factorization.degrees(), degree);
        surviving = surviving.intersection(&achievable).copied().collect();
        records.push(SpecializationRecord {
            x0,
            specialized,
            factorization,
            achievable,
        });
    }
    let surviving_splits = surviving
        .into_iter()
        .filter(|&k| 2 * k <= degree)
        .map(|k| (k, degree - k))
        .collect();
    Ok(SpecializationEvidence {
        degree,
        records,
        surviving_splits,
    })
}

fn subset_degree_sums(degrees: &[usize], n: usize) -> BTreeSet<usize> {
    let mut reachable = vec![false; n + 1];
    reachable[0] = true;
    for &d in degrees {
        for k in (d..=n).rev() {
            if reachable[k - d] {
                reachable[k] = true;
            }
        }
    }
    (1..n).filter(|&k| reachable[k]).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvidenceError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(a0: &[i64], a1: &[i64], n: usize) -> BiPoly {
        let mut coeffs = vec![IntPoly::zero(); n + 1];
        coeffs[0] = IntPoly::from_i64s(a0);
        coeffs[1] = IntPoly::from_i64s(a1);
        coeffs[n] = IntPoly::one();
        BiPoly::new(coeffs)
    }

    #[test]
    fn subset_sums() {
        let s = subset_degree_sums(&[2, 3], 5);
        assert_eq!(s, [2, 3].into_iter().collect());
        let s = subset_degree_sums(&[1, 1, 2], 4);
        assert_eq!(s, [1, 2, 3].into_iter().collect());
        assert!(subset_degree_sums(&[5], 5).is_empty());
    }

    #[test]
    fn family_z_instance_is_certified() {
        let zz = z(&[1, 0, 1], &[1, 1, 1], 5);
        let ev =
            specialization_evidence(&zz, &SPECIALIZATION_POINTS, &FactorizationLimits::default())
                .unwrap();
        // y^5 + y + 1 = (y^2 + y + 1)(y^3 - y^2 + 1) at x0 = 0.
        assert_eq!(ev.records[0].achievable, [2, 3].into_iter().collect());
        assert!(ev.certifies_irreducible());
        assert!(ev.consistent_with(&Verdict::FactorDegreeMultipleOf(2)));
    }

    #[test]
    fn reducible_bivariate_survives() {
        // (y - x)(y^2 + 1) = y^3 - x y^2 + y - x
        let zz = BiPoly::new(vec![
            IntPoly::from_i64s(&[0, -1]),
            IntPoly::one(),
            IntPoly::from_i64s(&[0, -1]),
            IntPoly::one(),
        ]);
        let ev =
            specialization_evidence(&zz, &SPECIALIZATION_POINTS, &FactorizationLimits::default())
                .unwrap();
        assert_eq!(ev.surviving_splits, vec![(1, 2)]);
        assert!(!ev.consistent_with(&Verdict::Irreducible));
        assert!(ev.consistent_with(&Verdict::FactorDegreeMultipleOf(2)));
    }

    #[test]
    fn non_monic_rejected() {
        let zz = BiPoly::new(vec![IntPoly::one(), IntPoly::from_i64s(&[0, 2])]);
        assert!(matches!(
            specialization_evidence(&zz, &[0], &FactorizationLimits::default()),
            Err(EvidenceError::Poly(_))
        ));
    }
}
