//! Factor-degree criteria evaluated on a [`ValuationProfile`].
//!
//! Every checker records each hypothesis it tests, with the exact values
//! involved, and only then derives a [`Verdict`]. A failing hypothesis is
//! data, not an error: the verdict becomes [`Verdict::Inconclusive`] and
//! carries the first failure.
//!
//! Write `y_j = v(a_j)` and let `s` be the strictly dominant slope index.
//! With `v(a_n) = 0` the slope condition `n(n-s)(m_0 - m_s) = -d` is the
//! integer identity `(n-s)·y_0 - n·y_s = d`; the checkers test the integer
//! form and keep the rational form alongside it in the report.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::newton::{
    dominant_index, lower_hull, newton_index, PolygonVertex, Slope, ValuationProfile,
};

/// The criteria implemented by this module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Criterion {
    /// Divisibility by `(n-s)/d_s`, irreducibility when `s = 0`.
    Theorem1,
    /// Divisibility by `n-s` under the `d = 1` slope identity, `s ≥ 1`.
    TheoremA,
    /// `min(deg g, deg h) ≤ s` when `gcd(v(a_s), n-s) = 1`.
    Weintraub,
    /// `max(deg g, deg h) ≥ (n-s)/d_s`.
    Theorem2,
}

impl Criterion {
    pub const ALL: [Criterion; 4] = [
        Criterion::Theorem1,
        Criterion::TheoremA,
        Criterion::Weintraub,
        Criterion::Theorem2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Criterion::Theorem1 => "theorem_1",
            Criterion::TheoremA => "theorem_a",
            Criterion::Weintraub => "weintraub",
            Criterion::Theorem2 => "theorem_2",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What a criterion concludes about every factorization `f = g·h` with
/// `deg g, deg h ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// No such factorization exists.
    Irreducible,
    /// `m | deg g` or `m | deg h`.
    FactorDegreeMultipleOf(usize),
    /// `max(deg g, deg h) ≥ b`.
    MaxFactorDegreeAtLeast(usize),
    /// `min(deg g, deg h) ≤ s`.
    MinFactorDegreeAtMost(usize),
    Inconclusive(String),
}

impl Verdict {
    pub fn is_inconclusive(&self) -> bool {
        matches!(self, Verdict::Inconclusive(_))
    }

    /// Whether a factorization with factor degrees `k1` and `k2` is allowed.
    pub fn admits(&self, k1: usize, k2: usize) -> bool {
        match *self {
            Verdict::Irreducible => false,
            Verdict::FactorDegreeMultipleOf(m) => k1.is_multiple_of(m) || k2.is_multiple_of(m),
            Verdict::MaxFactorDegreeAtLeast(b) => k1.max(k2) >= b,
            Verdict::MinFactorDegreeAtMost(s) => k1.min(k2) <= s,
            Verdict::Inconclusive(_) => true,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Irreducible => f.write_str("Irreducible"),
            Verdict::FactorDegreeMultipleOf(m) => write!(f, "FactorDegreeMultipleOf({m})"),
            Verdict::MaxFactorDegreeAtLeast(b) => write!(f, "MaxFactorDegreeAtLeast({b})"),
            Verdict::MinFactorDegreeAtMost(s) => write!(f, "MinFactorDegreeAtMost({s})"),
            Verdict::Inconclusive(reason) => write!(f, "Inconclusive({reason})"),
        }
    }
}

/// One checked hypothesis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypothesis {
    pub label: String,
    pub passed: bool,
    /// The exact quantities the decision was made on.
    pub values: String,
}

impl Hypothesis {
    fn new(label: impl Into<String>, passed: bool, values: impl Into<String>) -> Self {
        Hypothesis {
            label: label.into(),
            passed,
            values: values.into(),
        }
    }
}

/// Both sides of the slope identity, in integer form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionB {
    /// `(n-s)·y_0 - n·y_s`, or `d_0` when `s = 0`.
    pub lhs: BigInt,
    /// `d_s` (Theorem 1), `1` (Theorem A, and Theorem 1 with `s = 0`).
    pub rhs: BigInt,
    /// `n(n-s)(m_0 - m_s)` in exact rational arithmetic, when `s ≠ 0`.
    pub slope_form: Option<BigRational>,
}

impl ConditionB {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionReport {
    pub criterion: Criterion,
    pub s: Option<usize>,
    /// `gcd(n-s, |v(a_s)|)`.
    pub d_s: Option<usize>,
    pub condition_b: Option<ConditionB>,
    pub hypotheses: Vec<Hypothesis>,
    pub notes: Vec<String>,
    pub verdict: Verdict,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        !self.verdict.is_inconclusive()
    }
}

/// Accumulates hypotheses and produces the report.
struct Audit {
    criterion: Criterion,
    s: Option<usize>,
    d_s: Option<usize>,
    condition_b: Option<ConditionB>,
    hypotheses: Vec<Hypothesis>,
    notes: Vec<String>,
}

impl Audit {
    fn new(criterion: Criterion) -> Self {
        Audit {
            criterion,
            s: None,
            d_s: None,
            condition_b: None,
            hypotheses: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, label: &str, passed: bool, values: String) -> bool {
        self.hypotheses.push(Hypothesis::new(label, passed, values));
        passed
    }

    fn finish(self, on_pass: impl FnOnce() -> Verdict) -> CriterionReport {
        let verdict = match self.hypotheses.iter().find(|h| !h.passed) {
            Some(h) => Verdict::Inconclusive(format!("{}: {}", h.label, h.values)),
            None => on_pass(),
        };
        CriterionReport {
            criterion: self.criterion,
            s: self.s,
            d_s: self.d_s,
            condition_b: self.condition_b,
            hypotheses: self.hypotheses,
            notes: self.notes,
            verdict,
        }
    }

    /// `v(a_n) = 0`, the strictly dominant index and `d_s`.
    ///
    /// Returns `(s, y_s, d_s)` when all of them are available.
    fn common(&mut self, profile: &ValuationProfile) -> Option<(usize, BigInt, usize)> {
        let vn = profile.leading_val();
        let unit_leading = self.check("v(a_n) = 0", vn.is_zero(), format!("v(a_n) = {vn}"));

        let slopes = profile.slopes();
        let s = dominant_index(profile);
        let values = match s {
            Some(s) => format!("s = {s}, m_s = {}", slopes[s]),
            None => describe_no_dominant(&slopes),
        };
        self.check("(a) m_i < m_s for all i ≠ s", s.is_some(), values);
        self.s = s;
        let s = s?;

        // A dominant slope is finite, so a_s ≠ 0.
        let Some(ys) = profile.val(s).as_finite().cloned() else {
            self.check("a_s ≠ 0", false, format!("v(a_{s}) = ∞"));
            return None;
        };
        let n_minus_s = BigInt::from(profile.n() - s);
        let d = n_minus_s
            .gcd(&ys.abs())
            .to_usize()
            .expect("gcd is at most n - s");
        self.d_s = Some(d);
        unit_leading.then_some((s, ys, d))
    }
}

fn describe_no_dominant(slopes: &[Slope]) -> String {
    let Some(best) = slopes.iter().max() else {
        return "no slopes".into();
    };
    if !best.is_finite() {
        return "all slopes are -inf".into();
    }
    let tied: Vec<String> = slopes
        .iter()
        .enumerate()
        .filter(|(_, m)| *m == best)
        .map(|(i, _)| i.to_string())
        .collect();
    format!(
        "maximum slope {best} attained at indices {}",
        tied.join(", ")
    )
}

/// `(n-s)·y_0 - n·y_s` and `n(n-s)(m_0 - m_s)`, or `None` when `a_0 = 0`.
fn slope_identity(
    profile: &ValuationProfile,
    s: usize,
    ys: &BigInt,
) -> Option<(BigInt, BigRational)> {
    let n = profile.n();
    let y0 = profile.val(0).as_finite()?;
    let lhs = BigInt::from(n - s) * y0 - BigInt::from(n) * ys;
    let slopes = profile.slopes();
    let m0 = slopes[0].as_rational()?;
    let ms = slopes[s].as_rational()?;
    let scale = BigRational::from_integer(BigInt::from(n * (n - s)));
    Some((lhs, scale * (m0 - ms)))
}

/// Divisibility of a factor degree by `(n-s)/d_s`; irreducibility when `s = 0`.
///
/// Hypotheses, in order: `v(a_n) = 0`; a strictly dominant slope index `s`;
/// then for `s ≠ 0` the identity `(n-s)·y_0 - n·y_s = d_s` and for `s = 0`
/// the coprimality `d_0 = gcd(n, v(a_0)) = 1`.
pub fn check_theorem_1(profile: &ValuationProfile) -> CriterionReport {
    let mut audit = Audit::new(Criterion::Theorem1);
    let n = profile.n();
    if let Some((s, ys, d)) = audit.common(profile) {
        if s == 0 {
            audit.condition_b = Some(ConditionB {
                lhs: d.into(),
                rhs: BigInt::one(),
                slope_form: None,
            });
            audit.check(
                "(b) d_0 = gcd(n, v(a_0)) = 1",
                d == 1,
                format!("gcd({n}, {ys}) = {d}"),
            );
        } else {
            match slope_identity(profile, s, &ys) {
                Some((lhs, slope_form)) => {
                    let values = format!(
                        "(n-s)y_0 - n*y_s = {lhs}, d_s = {d}; n(n-s)(m_0 - m_s) = {slope_form}"
                    );
                    let holds = lhs == BigInt::from(d);
                    audit.condition_b = Some(ConditionB {
                        lhs,
                        rhs: d.into(),
                        slope_form: Some(slope_form),
                    });
                    audit.check("(b) (n-s)y_0 - n*y_s = d_s", holds, values);
                }
                None => {
                    audit.check(
                        "(b) (n-s)y_0 - n*y_s = d_s",
                        false,
                        "v(a_0) = ∞, identity undefined".into(),
                    );
                }
            }
        }
    }
    let (s, d) = (audit.s, audit.d_s);
    audit.finish(|| match (s, d) {
        (Some(0), _) => Verdict::Irreducible,
        (Some(s), Some(d)) => Verdict::FactorDegreeMultipleOf((n - s) / d),
        _ => unreachable!("all hypotheses passed without s and d_s"),
    })
}

/// Divisibility of a factor degree by `n-s` under `(n-s)·y_0 - n·y_s = 1`.
///
/// The identity degenerates for `s = 0`, which is reported as a failed
/// hypothesis.
pub fn check_theorem_a(profile: &ValuationProfile) -> CriterionReport {
    let mut audit = Audit::new(Criterion::TheoremA);
    let n = profile.n();
    if let Some((s, ys, _)) = audit.common(profile) {
        let positive = audit.check(
            "s ≥ 1",
            s >= 1,
            if s == 0 {
                "s=0 unsupported by Theorem A".into()
            } else {
                format!("s = {s}")
            },
        );
        if positive {
            match slope_identity(profile, s, &ys) {
                Some((lhs, slope_form)) => {
                    let values =
                        format!("(n-s)y_0 - n*y_s = {lhs}; n(n-s)(m_0 - m_s) = {slope_form}");
                    let holds = lhs.is_one();
                    audit.condition_b = Some(ConditionB {
                        lhs,
                        rhs: BigInt::one(),
                        slope_form: Some(slope_form),
                    });
                    audit.check("(b) (n-s)y_0 - n*y_s = 1", holds, values);
                }
                None => {
                    audit.check(
                        "(b) (n-s)y_0 - n*y_s = 1",
                        false,
                        "v(a_0) = ∞, identity undefined".into(),
                    );
                }
            }
        }
    }
    let s = audit.s;
    audit.finish(|| Verdict::FactorDegreeMultipleOf(n - s.expect("s passed")))
}

/// `min(deg g, deg h) ≤ s` when `v(a_s)` and `n-s` are coprime.
pub fn check_weintraub(profile: &ValuationProfile) -> CriterionReport {
    let mut audit = Audit::new(Criterion::Weintraub);
    let n = profile.n();
    if let Some((s, ys, d)) = audit.common(profile) {
        audit.check(
            "gcd(|v(a_s)|, n-s) = 1",
            d == 1,
            format!("gcd({}, {}) = {d}", ys.abs(), n - s),
        );
    }
    let s = audit.s;
    audit.finish(|| Verdict::MinFactorDegreeAtMost(s.expect("s passed")))
}

/// `max(deg g, deg h) ≥ (n-s)/d_s`.
pub fn check_theorem_2(profile: &ValuationProfile) -> CriterionReport {
    let mut audit = Audit::new(Criterion::Theorem2);
    let n = profile.n();
    if let Some((_, _, d)) = audit.common(profile) {
        let note = if d > 1 {
            format!(
                "d_s = {d} > 1: deg g + deg h = n < 2(n-s)/d_s would force d_s < 2 (counting bound)"
            )
        } else {
            "d_s = 1: coprime case of the dominant-segment degree bound".to_string()
        };
        audit.notes.push(note);
    }
    let (s, d) = (audit.s, audit.d_s);
    audit.finish(|| {
        let (s, d) = (s.expect("s passed"), d.expect("d_s passed"));
        Verdict::MaxFactorDegreeAtLeast((n - s) / d)
    })
}

/// The strongest conclusion across all criteria.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StrongestVerdict {
    Irreducible,
    FactorDegreeMultipleOf(usize),
    /// Degree bounds, reported together.
    DegreeBounds {
        max_at_least: Option<usize>,
        min_at_most: Option<usize>,
    },
    Inconclusive,
}

impl StrongestVerdict {
    pub fn from_reports(reports: &[CriterionReport]) -> Self {
        let verdicts = || reports.iter().map(|r| &r.verdict);
        if verdicts().any(|v| *v == Verdict::Irreducible) {
            return StrongestVerdict::Irreducible;
        }
        let modulus = verdicts()
            .filter_map(|v| match v {
                Verdict::FactorDegreeMultipleOf(m) => Some(*m),
                _ => None,
            })
            .max();
        if let Some(m) = modulus {
            return StrongestVerdict::FactorDegreeMultipleOf(m);
        }
        let max_at_least = verdicts()
            .filter_map(|v| match v {
                Verdict::MaxFactorDegreeAtLeast(b) => Some(*b),
                _ => None,
            })
            .max();
        let min_at_most = verdicts()
            .filter_map(|v| match v {
                Verdict::MinFactorDegreeAtMost(s) => Some(*s),
                _ => None,
            })
            .min();
        if max_at_least.is_some() || min_at_most.is_some() {
            StrongestVerdict::DegreeBounds {
                max_at_least,
                min_at_most,
            }
        } else {
            StrongestVerdict::Inconclusive
        }
    }
}

impl fmt::Display for StrongestVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StrongestVerdict::Irreducible => f.write_str("Irreducible"),
            StrongestVerdict::FactorDegreeMultipleOf(m) => write!(f, "FactorDegreeMultipleOf({m})"),
            StrongestVerdict::DegreeBounds {
                max_at_least,
                min_at_most,
            } => {
                let mut parts = Vec::new();
                if let Some(b) = max_at_least {
                    parts.push(format!("MaxFactorDegreeAtLeast({b})"));
                }
                if let Some(s) = min_at_most {
                    parts.push(format!("MinFactorDegreeAtMost({s})"));
                }
                f.write_str(&parts.join(" + "))
            }
            StrongestVerdict::Inconclusive => f.write_str("Inconclusive"),
        }
    }
}

/// Everything derived from one profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub profile: ValuationProfile,
    pub slopes: Vec<Slope>,
    pub newton_index: Slope,
    pub dominant_s: Option<usize>,
    pub d_s: Option<usize>,
    pub hull: Vec<PolygonVertex>,
    /// One report per entry of [`Criterion::ALL`], in that order.
    pub reports: Vec<CriterionReport>,
    pub strongest: StrongestVerdict,
}

impl AnalysisReport {
    pub fn report(&self, criterion: Criterion) -> &CriterionReport {
        self.reports
            .iter()
            .find(|r| r.criterion == criterion)
            .expect("every criterion is evaluated")
    }
}

/// Runs all four checkers.
pub fn analyze(profile: &ValuationProfile) -> AnalysisReport {
    let reports = vec![
        check_theorem_1(profile),
        check_theorem_a(profile),
        check_weintraub(profile),
        check_theorem_2(profile),
    ];
    let strongest = StrongestVerdict::from_reports(&reports);
    AnalysisReport {
        profile: profile.clone(),
        slopes: profile.slopes(),
        newton_index: newton_index(profile),
        dominant_s: dominant_index(profile),
        d_s: reports[0].d_s,
        hull: lower_hull(profile),
        reports,
        strongest,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newton::valuation_profile;
    use crate::poly::{BiPoly, IntPoly, Polynomial};
    use crate::valuation::DiscreteValuation;

    fn padic(coeffs: &[i64], p: i64) -> ValuationProfile {
        valuation_profile(
            &Polynomial::Uni(IntPoly::from_i64s(coeffs)),
            &DiscreteValuation::padic(p).unwrap(),
        )
        .unwrap()
    }

    fn family_x() -> ValuationProfile {
        padic(&[8, 4, 32, 0, 0, 1], 2)
    }

    fn family_y() -> ValuationProfile {
        padic(&[16, 0, 4, 64, 0, 0, 1], 2)
    }

    fn family_z() -> ValuationProfile {
        let z = BiPoly::new(vec![
            IntPoly::from_i64s(&[1, 0, 1]),
            IntPoly::from_i64s(&[1, 1, 1]),
            IntPoly::zero(),
            IntPoly::zero(),
            IntPoly::zero(),
            IntPoly::one(),
        ]);
        valuation_profile(&Polynomial::Bi(z), &DiscreteValuation::Degree).unwrap()
    }

    fn eisenstein() -> ValuationProfile {
        padic(&[-2, 0, 0, 1], 2)
    }

    fn cubic() -> ValuationProfile {
        // x^3 + 2x + 4
        padic(&[4, 2, 0, 1], 2)
    }

    fn cond_b(r: &CriterionReport) -> (i64, i64) {
        let c = r.condition_b.as_ref().expect("condition (b) evaluated");
        (c.lhs.to_i64().unwrap(), c.rhs.to_i64().unwrap())
    }

    #[test]
    fn theorem_1_examples() {
        let r = check_theorem_1(&family_x());
        assert_eq!((r.s, r.d_s), (Some(1), Some(2)));
        assert_eq!(cond_b(&r), (2, 2));
        assert_eq!(r.verdict, Verdict::FactorDegreeMultipleOf(2));

        let r = check_theorem_1(&eisenstein());
        assert_eq!((r.s, r.d_s), (Some(0), Some(1)));
        assert_eq!(r.verdict, Verdict::Irreducible);

        let r = check_theorem_1(&family_y());
        assert_eq!((r.s, r.d_s), (Some(2), Some(2)));
        assert_eq!(cond_b(&r), (4, 2));
        assert!(r.verdict.is_inconclusive());
        let last = r.hypotheses.last().unwrap();
        assert!(!last.passed);
        assert!(last.values.contains("= 4") && last.values.contains("d_s = 2"));
        assert!(r.hypotheses[1].passed);

        let r = check_theorem_1(&family_z());
        assert_eq!((r.s, r.d_s), (Some(1), Some(2)));
        assert_eq!(cond_b(&r), (2, 2));
        assert_eq!(r.verdict, Verdict::FactorDegreeMultipleOf(2));
    }

    #[test]
    fn theorem_1_slope_form_agrees() {
        for profile in [family_x(), family_y(), family_z(), cubic()] {
            let r = check_theorem_1(&profile);
            let c = r.condition_b.unwrap();
            assert_eq!(c.slope_form.unwrap(), BigRational::from_integer(-c.lhs));
        }
    }

    #[test]
    fn theorem_a_examples() {
        let r = check_theorem_a(&cubic());
        assert_eq!(r.s, Some(1));
        assert_eq!(cond_b(&r), (1, 1));
        assert_eq!(r.verdict, Verdict::FactorDegreeMultipleOf(2));

        let r = check_theorem_a(&family_x());
        assert_eq!(cond_b(&r), (2, 1));
        assert!(r.verdict.is_inconclusive());

        let r = check_theorem_a(&eisenstein());
        assert_eq!(r.s, Some(0));
        match r.verdict {
            Verdict::Inconclusive(reason) => {
                assert!(reason.contains("s=0 unsupported by Theorem A"))
            }
            v => panic!("unexpected {v}"),
        }
    }

    #[test]
    fn weintraub_examples() {
        assert_eq!(
            check_weintraub(&cubic()).verdict,
            Verdict::MinFactorDegreeAtMost(1)
        );
        assert_eq!(
            check_weintraub(&eisenstein()).verdict,
            Verdict::MinFactorDegreeAtMost(0)
        );
        assert!(check_weintraub(&family_x()).verdict.is_inconclusive());
    }

    #[test]
    fn theorem_2_examples() {
        assert_eq!(
            check_theorem_2(&family_y()).verdict,
            Verdict::MaxFactorDegreeAtLeast(2)
        );
        let r = check_theorem_2(&cubic());
        assert_eq!(r.verdict, Verdict::MaxFactorDegreeAtLeast(2));
        assert!(r.notes[0].starts_with("d_s = 1"));
        let tie = ValuationProfile::from_i64s(&[Some(2), Some(1), Some(0)]).unwrap();
        assert!(check_theorem_2(&tie).verdict.is_inconclusive());
    }

    #[test]
    fn nonunit_leading_is_inconclusive() {
        // 2x^2 + 1 at p = 2
        let r = check_theorem_1(&padic(&[1, 0, 2], 2));
        assert!(!r.hypotheses[0].passed);
        assert!(r.verdict.is_inconclusive());
    }

    #[test]
    fn zero_constant_term_fails_condition_b() {
        // x^3 + 2x = x(x^2 + 2): s = 1 dominates, y_0 = ∞
        let r = check_theorem_1(&padic(&[0, 2, 0, 1], 2));
        assert_eq!(r.s, Some(1));
        assert!(r.condition_b.is_none());
        assert!(r.verdict.is_inconclusive());
    }

    #[test]
    fn analyze_examples() {
        assert_eq!(
            analyze(&eisenstein()).strongest,
            StrongestVerdict::Irreducible
        );
        assert_eq!(
            analyze(&family_x()).strongest,
            StrongestVerdict::FactorDegreeMultipleOf(2)
        );
        assert_eq!(
            analyze(&padic(&[1, 1, 1], 2)).strongest,
            StrongestVerdict::Inconclusive
        );
        assert_eq!(
            analyze(&family_y()).strongest,
            StrongestVerdict::DegreeBounds {
                max_at_least: Some(2),
                min_at_most: None
            }
        );
    }

    #[test]
    fn inconclusive_iff_failed_hypothesis() {
        for profile in [
            family_x(),
            family_y(),
            family_z(),
            eisenstein(),
            cubic(),
            padic(&[1, 1, 1], 2),
        ] {
            for r in analyze(&profile).reports {
                assert_eq!(
                    r.verdict.is_inconclusive(),
                    r.hypotheses.iter().any(|h| !h.passed),
                    "{r:?}"
                );
            }
        }
    }
}
