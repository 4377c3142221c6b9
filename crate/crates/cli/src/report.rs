//! Analysis and verification results, rendered as text or JSON.

use std::fmt::Write as _;

use newton_core::oracle::SpecializationRecord;
use newton_core::{
    AnalysisReport, BigInt, Criterion, CriterionReport, DiscreteValuation, FactorPair,
    Factorization, Polynomial, Slope, SpecializationEvidence, ValInt, ValidationReport, Verdict,
};
use serde::Serialize;

/// One analysed polynomial, optionally with oracle verification.
#[derive(Debug, Clone)]
pub struct Analyzed {
    pub polynomial: Polynomial,
    pub valuation: DiscreteValuation,
    pub analysis: AnalysisReport,
    pub verification: Option<Verification>,
}

#[derive(Debug, Clone)]
pub enum Verification {
    Univariate(UnivariateCheck),
    Evidence(EvidenceCheck),
}

impl Verification {
    pub fn validated(&self) -> bool {
        match self {
            Verification::Univariate(u) => u.validated,
            Verification::Evidence(e) => e.validated,
        }
    }
}

#[derive(Debug, Clone)]
pub struct UnivariateCheck {
    pub factorization: Factorization,
    pub pairs: Vec<FactorPair>,
    pub validations: Vec<ValidationReport>,
    pub kappa: Vec<KappaRow>,
    pub validated: bool,
}

#[derive(Debug, Clone)]
pub struct KappaRow {
    pub pair: FactorPair,
    pub kappa: BigInt,
    pub modulus: usize,
    pub holds: bool,
}

#[derive(Debug, Clone)]
pub struct EvidenceCheck {
    pub evidence: SpecializationEvidence,
    /// Surviving splits ruled out by each criterion's verdict.
    pub contradictions: Vec<(Criterion, Vec<(usize, usize)>)>,
    pub validated: bool,
}

// ---------------------------------------------------------------- JSON model

#[derive(Debug, Serialize)]
pub struct JsonReport {
    pub polynomial: String,
    pub degree: usize,
    pub valuation: JsonValuation,
    pub profile: Vec<JsonProfileEntry>,
    pub slopes: Vec<JsonSlope>,
    pub newton_index: JsonSlopeValue,
    pub dominant_s: Option<usize>,
    pub d_s: Option<usize>,
    pub hull: Vec<JsonVertex>,
    pub criteria: Vec<JsonCriterion>,
    pub strongest_verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<JsonOracle>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<u64>,
}

#[derive(Debug, Serialize)]
pub struct JsonValuation {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<String>,
}

/// `v` is `null` for a zero coefficient.
#[derive(Debug, Serialize)]
pub struct JsonProfileEntry {
    pub i: usize,
    pub v: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct JsonSlope {
    pub i: usize,
    #[serde(flatten)]
    pub value: JsonSlopeValue,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum JsonSlopeValue {
    Finite {
        num: String,
        den: String,
        display: String,
    },
    NegInfinity {
        neg_infinity: bool,
    },
}

impl From<&Slope> for JsonSlopeValue {
    fn from(s: &Slope) -> Self {
        match s {
            Slope::Finite(r) => JsonSlopeValue::Finite {
                num: r.numer().to_string(),
                den: r.denom().to_string(),
                display: s.to_string(),
            },
            Slope::NegInfinity => JsonSlopeValue::NegInfinity { neg_infinity: true },
        }
    }
}

#[derive(Debug, Serialize)]
pub struct JsonVertex {
    pub i: usize,
    pub v: String,
}

#[derive(Debug, Serialize)]
pub struct JsonCriterion {
    pub name: &'static str,
    pub s: Option<usize>,
    pub d_s: Option<usize>,
    pub hypotheses: Vec<JsonHypothesis>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub condition_b: Option<JsonConditionB>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub verdict: JsonVerdict,
}

#[derive(Debug, Serialize)]
pub struct JsonHypothesis {
    pub label: String,
    pub passed: bool,
    pub values: String,
}

#[derive(Debug, Serialize)]
pub struct JsonConditionB {
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slope_form: Option<String>,
}

#[derive(Debug, Serialize)]
#[serde(tag = "kind")]
pub enum JsonVerdict {
    Irreducible,
    FactorDegreeMultipleOf { m: usize },
    MaxFactorDegreeAtLeast { b: usize },
    MinFactorDegreeAtMost { s: usize },
    Inconclusive { reason: String },
}

impl From<&Verdict> for JsonVerdict {
    fn from(v: &Verdict) -> Self {
        match v {
            Verdict::Irreducible => JsonVerdict::Irreducible,
            Verdict::FactorDegreeMultipleOf(m) => JsonVerdict::FactorDegreeMultipleOf { m: *m },
            Verdict::MaxFactorDegreeAtLeast(b) => JsonVerdict::MaxFactorDegreeAtLeast { b: *b },
            Verdict::MinFactorDegreeAtMost(s) => JsonVerdict::MinFactorDegreeAtMost { s: *s },
            Verdict::Inconclusive(reason) => JsonVerdict::Inconclusive {
                reason: reason.clone(),
            },
        }
    }
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum JsonOracle {
    Univariate {
        factors: JsonFactorization,
        bipartitions: Vec<JsonPair>,
        validations: Vec<JsonValidation>,
        kappa_traces: Vec<JsonKappa>,
        validated: bool,
    },
    Evidence {
        evidence_only: bool,
        specializations: Vec<JsonSpecialization>,
        surviving_splits: Vec<[usize; 2]>,
        certifies_irreducible: bool,
        contradictions: Vec<JsonContradiction>,
        validated: bool,
    },
}

#[derive(Debug, Serialize)]
pub struct JsonFactorization {
    pub content: String,
    pub factors: Vec<String>,
}

impl From<&Factorization> for JsonFactorization {
    fn from(f: &Factorization) -> Self {
        JsonFactorization {
            content: f.content.to_string(),
            factors: f.factors.iter().map(ToString::to_string).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct JsonPair {
    pub g: String,
    pub h: String,
    pub k1: usize,
    pub k2: usize,
    pub x1: Option<String>,
    pub x2: Option<String>,
}

impl From<&FactorPair> for JsonPair {
    fn from(p: &FactorPair) -> Self {
        JsonPair {
            g: p.g.to_string(),
            h: p.h.to_string(),
            k1: p.k1,
            k2: p.k2,
            x1: val_string(&p.x1),
            x2: val_string(&p.x2),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct JsonValidation {
    pub criterion: &'static str,
    pub verdict: JsonVerdict,
    pub checks: Vec<JsonCheck>,
    pub valid: bool,
}

#[derive(Debug, Serialize)]
pub struct JsonCheck {
    pub k1: usize,
    pub k2: usize,
    pub passed: bool,
}

#[derive(Debug, Serialize)]
pub struct JsonKappa {
    pub g: String,
    pub h: String,
    pub kappa: String,
    pub modulus: usize,
    pub holds: bool,
}

#[derive(Debug, Serialize)]
pub struct JsonSpecialization {
    pub x0: String,
    pub specialized: String,
    pub factors: JsonFactorization,
    pub achievable: Vec<usize>,
}

impl From<&SpecializationRecord> for JsonSpecialization {
    fn from(r: &SpecializationRecord) -> Self {
        JsonSpecialization {
            x0: r.x0.to_string(),
            specialized: r.specialized.to_string_in("y"),
            factors: JsonFactorization {
                content: r.factorization.content.to_string(),
                factors: r
                    .factorization
                    .factors
                    .iter()
                    .map(|f| f.to_string_in("y"))
                    .collect(),
            },
            achievable: r.achievable.iter().copied().collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct JsonContradiction {
    pub criterion: &'static str,
    pub splits: Vec<[usize; 2]>,
}

fn val_string(v: &ValInt) -> Option<String> {
    v.as_finite().map(ToString::to_string)
}

fn valuation_json(v: &DiscreteValuation) -> JsonValuation {
    match v {
        DiscreteValuation::PAdic(p) => JsonValuation {
            kind: "p-adic",
            p: Some(p.value().to_string()),
        },
        DiscreteValuation::Degree => JsonValuation {
            kind: "degree",
            p: None,
        },
    }
}

fn criterion_json(r: &CriterionReport) -> JsonCriterion {
    JsonCriterion {
        name: r.criterion.name(),
        s: r.s,
        d_s: r.d_s,
        hypotheses: r
            .hypotheses
            .iter()
            .map(|h| JsonHypothesis {
                label: h.label.clone(),
                passed: h.passed,
                values: h.values.clone(),
            })
            .collect(),
        condition_b: r.condition_b.as_ref().map(|b| JsonConditionB {
            lhs: b.lhs.to_string(),
            rhs: b.rhs.to_string(),
            holds: b.holds(),
            slope_form: b.slope_form.as_ref().map(ToString::to_string),
        }),
        notes: r.notes.clone(),
        verdict: (&r.verdict).into(),
    }
}

fn oracle_json(v: &Verification) -> JsonOracle {
    match v {
        Verification::Univariate(u) => JsonOracle::Univariate {
            factors: (&u.factorization).into(),
            bipartitions: u.pairs.iter().map(Into::into).collect(),
            validations: u
                .validations
                .iter()
                .map(|r| JsonValidation {
                    criterion: r.criterion.name(),
                    verdict: (&r.verdict).into(),
                    checks: r
                        .checks
                        .iter()
                        .map(|c| JsonCheck {
                            k1: c.pair.k1,
                            k2: c.pair.k2,
                            passed: c.passed,
                        })
                        .collect(),
                    valid: r.valid,
                })
                .collect(),
            kappa_traces: u
                .kappa
                .iter()
                .map(|k| JsonKappa {
                    g: k.pair.g.to_string(),
                    h: k.pair.h.to_string(),
                    kappa: k.kappa.to_string(),
                    modulus: k.modulus,
                    holds: k.holds,
                })
                .collect(),
            validated: u.validated,
        },
        Verification::Evidence(e) => JsonOracle::Evidence {
            evidence_only: true,
            specializations: e.evidence.records.iter().map(Into::into).collect(),
            surviving_splits: e
                .evidence
                .surviving_splits
                .iter()
                .map(|&(a, b)| [a, b])
                .collect(),
            certifies_irreducible: e.evidence.certifies_irreducible(),
            contradictions: e
                .contradictions
                .iter()
                .map(|(c, splits)| JsonContradiction {
                    criterion: c.name(),
                    splits: splits.iter().map(|&(a, b)| [a, b]).collect(),
                })
                .collect(),
            validated: e.validated,
        },
    }
}

impl Analyzed {
    pub fn to_json_model(&self, generated_at: Option<u64>) -> JsonReport {
        let a = &self.analysis;
        JsonReport {
            polynomial: self.polynomial.to_string(),
            degree: a.profile.n(),
            valuation: valuation_json(&self.valuation),
            profile: a
                .profile
                .vals()
                .iter()
                .enumerate()
                .map(|(i, v)| JsonProfileEntry {
                    i,
                    v: val_string(v),
                })
                .collect(),
            slopes: a
                .slopes
                .iter()
                .enumerate()
                .map(|(i, s)| JsonSlope { i, value: s.into() })
                .collect(),
            newton_index: (&a.newton_index).into(),
            dominant_s: a.dominant_s,
            d_s: a.d_s,
            hull: a
                .hull
                .iter()
                .map(|v| JsonVertex {
                    i: v.i,
                    v: v.v.to_string(),
                })
                .collect(),
            criteria: a.reports.iter().map(criterion_json).collect(),
            strongest_verdict: a.strongest.to_string(),
            oracle: self.verification.as_ref().map(oracle_json),
            generated_at,
        }
    }

    /// Compact single-line JSON.
    pub fn to_json(&self, generated_at: Option<u64>) -> String {
        serde_json::to_string(&self.to_json_model(generated_at)).expect("report serializes")
    }

    /// Indented JSON.
    pub fn to_json_pretty(&self, generated_at: Option<u64>) -> String {
        serde_json::to_string_pretty(&self.to_json_model(generated_at)).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let a = &self.analysis;
        let mut out = String::new();
        let o = &mut out;
        let valuation = match &self.valuation {
            DiscreteValuation::PAdic(p) => format!("{}-adic", p.value()),
            DiscreteValuation::Degree => "degree (v(g) = -deg g)".to_string(),
        };
        let _ = writeln!(o, "polynomial: {}", self.polynomial);
        let _ = writeln!(o, "valuation:  {valuation}");
        let _ = writeln!(o, "degree:     {}", a.profile.n());
        let vals: Vec<String> = a
            .profile
            .vals()
            .iter()
            .enumerate()
            .map(|(i, v)| format!("v(a_{i})={v}"))
            .collect();
        let _ = writeln!(o, "profile:    {}", vals.join(" "));
        let slopes: Vec<String> = a
            .slopes
            .iter()
            .enumerate()
            .map(|(i, s)| format!("m_{i}={s}"))
            .collect();
        let _ = writeln!(o, "slopes:     {}", slopes.join(" "));
        let _ = writeln!(o, "e(f):       {}", a.newton_index);
        let _ = writeln!(o, "dominant s: {}", opt(a.dominant_s));
        let _ = writeln!(o, "d_s:        {}", opt(a.d_s));
        let hull: Vec<String> = a
            .hull
            .iter()
            .map(|v| format!("({},{})", v.i, v.v))
            .collect();
        let _ = writeln!(o, "hull:       {}", hull.join(" "));
        for r in &a.reports {
            let _ = writeln!(o);
            let _ = writeln!(o, "{}: {}", r.criterion.name(), r.verdict);
            for h in &r.hypotheses {
                let mark = if h.passed { "pass" } else { "FAIL" };
                let _ = writeln!(o, "  [{mark}] {}: {}", h.label, h.values);
            }
            if let Some(b) = &r.condition_b {
                let _ = writeln!(o, "  condition (b): lhs = {}, rhs = {}", b.lhs, b.rhs);
            }
            for note in &r.notes {
                let _ = writeln!(o, "  note: {note}");
            }
        }
        let _ = writeln!(o);
        let _ = writeln!(o, "strongest verdict: {}", a.strongest);
        if let Some(v) = &self.verification {
            let _ = writeln!(o);
            write_verification(o, v);
        }
        out
    }
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "none".to_string(), |v| v.to_string())
}

fn factor_list(f: &Factorization, var: &str) -> String {
    let factors: Vec<String> = f
        .factors
        .iter()
        .map(|q| format!("({})", q.to_string_in(var)))
        .collect();
    format!("{} * {}", f.content, factors.join(" * "))
}

fn write_verification(o: &mut String, v: &Verification) {
    match v {
        Verification::Univariate(u) => {
            let _ = writeln!(
                o,
                "oracle factorization: {}",
                factor_list(&u.factorization, "x")
            );
            if u.pairs.is_empty() {
                let _ = writeln!(o, "bipartitions: none (irreducible over Q)");
            }
            for p in &u.pairs {
                let _ = writeln!(
                    o,
                    "bipartition: ({}) * ({})  degrees ({}, {})",
                    p.g, p.h, p.k1, p.k2
                );
            }
            for r in &u.validations {
                let passed = r.checks.iter().filter(|c| c.passed).count();
                let _ = writeln!(
                    o,
                    "  {} {}: {} ({passed}/{} bipartitions consistent)",
                    r.criterion.name(),
                    r.verdict,
                    if r.valid { "valid" } else { "INVALID" },
                    r.checks.len()
                );
            }
            for k in &u.kappa {
                let _ = writeln!(
                    o,
                    "  kappa for ({}) * ({}): {} (modulus {}) {}",
                    k.pair.g,
                    k.pair.h,
                    k.kappa,
                    k.modulus,
                    if k.holds { "ok" } else { "VIOLATED" }
                );
            }
        }
        Verification::Evidence(e) => {
            let _ = writeln!(
                o,
                "evidence only: specializations constrain factorizations in y but cannot prove reducibility"
            );
            for r in &e.evidence.records {
                let achievable: Vec<String> =
                    r.achievable.iter().map(ToString::to_string).collect();
                let _ = writeln!(
                    o,
                    "  x0 = {}: {}  achievable degrees {{{}}}",
                    r.x0,
                    factor_list(&r.factorization, "y"),
                    achievable.join(", ")
                );
            }
            if e.evidence.certifies_irreducible() {
                let _ = writeln!(o, "  no split survives: irreducible as a polynomial in y");
            } else {
                let splits: Vec<String> = e
                    .evidence
                    .surviving_splits
                    .iter()
                    .map(|(a, b)| format!("({a}, {b})"))
                    .collect();
                let _ = writeln!(o, "  surviving splits: {}", splits.join(" "));
            }
            for (c, splits) in &e.contradictions {
                let _ = writeln!(o, "  CONTRADICTION: {} rules out {:?}", c.name(), splits);
            }
        }
    }
    let _ = writeln!(
        o,
        "verification: {}",
        if v.validated() { "PASS" } else { "FAIL" }
    );
}
