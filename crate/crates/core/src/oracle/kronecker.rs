use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{FactorizationLimits, OracleError};
use crate::poly::IntPoly;

/// `content · Π factors`, each factor primitive, irreducible over ℤ and with
/// positive leading coefficient. Factors repeat according to multiplicity
/// and are sorted by degree, then by coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub content: BigInt,
    pub factors: Vec<IntPoly>,
}

impl Factorization {
    pub fn reconstruct(&self) -> IntPoly {
        self.factors
            .iter()
            .fold(IntPoly::constant(self.content.clone()), |acc, f| &acc * f)
    }

    /// No split into two factors of positive degree.
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.factors.iter().filter_map(IntPoly::degree).collect()
    }
}

pub(crate) fn canonical_order(a: &IntPoly, b: &IntPoly) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
}

/// Kronecker factorization of `f` over ℤ.
pub fn kronecker_factor(
    f: &IntPoly,
    limits: &FactorizationLimits,
) -> Result<Factorization, OracleError> {
    let degree = f.degree().ok_or(OracleError::ZeroPolynomial)?;
    if degree > limits.max_degree {
        return Err(OracleError::DegreeLimit {
            degree,
            max: limits.max_degree,
        });
    }
    let magnitude = f.max_abs_coeff();
    if magnitude > limits.max_abs_coefficient {
        return Err(OracleError::CoefficientLimit {
            magnitude,
            max: limits.max_abs_coefficient.clone(),
        });
    }
    let (content, primitive) = f
        .content_and_primitive()
        .map_err(|_| OracleError::ZeroPolynomial)?;
    let mut factors = Vec::new();
    factor_primitive(primitive, limits, &mut factors)?;
    factors.sort_by(canonical_order);
    Ok(Factorization { content, factors })
}

/// The `j`-th sample point: 0, 1, -1, 2, -2, …
fn sample_point(j: usize) -> i64 {
    let half = j.div_ceil(2) as i64;
    if j % 2 == 1 {
        half
    } else {
        -half
    }
}

/// Factors a primitive polynomial with positive leading coefficient.
fn factor_primitive(
    p: IntPoly,
    limits: &FactorizationLimits,
    out: &mut Vec<IntPoly>,
) -> Result<(), OracleError> {
    let n = p.degree().expect("nonzero");
    if n <= 1 {
        if n == 1 {
            out.push(p);
        }
        return Ok(());
    }

    let needed = n / 2 + 1;
    let mut samples = Vec::with_capacity(needed);
    for j in 0..needed {
        let t = BigInt::from(sample_point(j));
        let value = p.eval(&t);
        if value.is_zero() {
            // Split off the root first so every sample value is nonzero.
            let linear = IntPoly::new(vec![-t, BigInt::one()]);
            let rest = p.exact_div(&linear).expect("x - t divides f when f(t) = 0");
            out.push(linear);
            return factor_primitive(rest, limits, out);
        }
        samples.push(Sample::new(t, value));
    }

    let lead_divisors = signed_divisors(p.leading().expect("nonzero"));
    for k in 1..=n / 2 {
        let mut search = DegreeSearch {
            target: &p,
            samples: &samples[..=k],
            lead_divisors: &lead_divisors,
            budget: limits.max_sample_divisors,
            spent: 0,
            degree: k,
        };
        if let Some(g) = search.run()? {
            // No factor of degree < k exists, so g is irreducible.
            let rest = p.exact_div(&g).expect("search returns exact divisors");
            out.push(g);
            return factor_primitive(rest, limits, out);
        }
    }
    out.push(p);
    Ok(())
}

struct Sample {
    t: BigInt,
    value: BigInt,
    divisors: Vec<BigInt>,
}

impl Sample {
    fn new(t: BigInt, value: BigInt) -> Self {
        Sample {
            divisors: positive_divisors(&value),
            t,
            value,
        }
    }
}

/// Depth-first search over Newton-form interpolants through divisors of the
/// sample values.
///
/// For `g ∈ ℤ[x]` and integer nodes, every divided difference of `g` is an
/// integer, so a partial choice of values whose next Newton coefficient is
/// not integral is pruned immediately. The top coefficient is the leading
/// coefficient of `g`, which must divide the leading coefficient of `f`, so
/// the last level enumerates those instead of divisors of `f(t_k)`.
struct DegreeSearch<'a> {
    target: &'a IntPoly,
    samples: &'a [Sample],
    lead_divisors: &'a [BigInt],
    budget: u64,
    spent: u64,
    degree: usize,
}

impl DegreeSearch<'_> {
    fn run(&mut self) -> Result<Option<IntPoly>, OracleError> {
        let mut newton = Vec::with_capacity(self.degree + 1);
        // g and -g both divide f, so fix g(t_0) > 0.
        for d0 in &self.samples[0].divisors {
            self.spend()?;
            newton.push(d0.clone());
            if let Some(g) = self.descend(&mut newton)? {
                return Ok(Some(g));
            }
            newton.pop();
        }
        Ok(None)
    }

    fn spend(&mut self) -> Result<(), OracleError> {
        self.spent += 1;
        if self.spent > self.budget {
            return Err(OracleError::DivisorBudget {
                degree: self.degree,
                budget: self.budget,
            });
        }
        Ok(())
    }

    /// `newton` holds `c_0 … c_{j-1}`; chooses `c_j`.
    fn descend(&mut self, newton: &mut Vec<BigInt>) -> Result<Option<IntPoly>, OracleError> {
        let j = newton.len();
        let node = &self.samples[j];
        let partial = newton_eval(newton, self.samples, &node.t);
        let span = self.samples[..j]
            .iter()
            .fold(BigInt::one(), |acc, s| acc * (&node.t - &s.t));

        if j == self.degree {
            for lead in self.lead_divisors {
                self.spend()?;
                let at_node = &partial + lead * &span;
                if at_node.is_zero() || !(&node.value % &at_node).is_zero() {
                    continue;
                }
                newton.push(lead.clone());
                let g = newton_to_monomial(newton, self.samples);
                newton.pop();
                if let Some(g) = normalize_sign(g) {
                    if self.target.exact_div(&g).is_some() {
                        return Ok(Some(g));
                    }
                }
            }
            return Ok(None);
        }

        for mag in &node.divisors {
            for value in [mag.clone(), -mag] {
                self.spend()?;
                let (c, r) = (&value - &partial).div_rem(&span);
                if !r.is_zero() {
                    continue;
                }
                newton.push(c);
                let found = self.descend(newton)?;
                newton.pop();
                if found.is_some() {
                    return Ok(found);
                }
            }
        }
        Ok(None)
    }
}

/// Evaluates `c_0 + c_1(t - t_0) + … ` at `t`.
fn newton_eval(newton: &[BigInt], samples: &[Sample], t: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for (j, c) in newton.iter().enumerate().rev() {
        acc = acc * (t - &samples[j].t) + c;
    }
    acc
}

fn newton_to_monomial(newton: &[BigInt], samples: &[Sample]) -> IntPoly {
    let mut acc = IntPoly::zero();
    for (j, c) in newton.iter().enumerate().rev() {
        let shift = IntPoly::new(vec![-samples[j].t.clone(), BigInt::one()]);
        acc = &(&acc * &shift) + &IntPoly::constant(c.clone());
    }
    acc
}

fn normalize_sign(g: IntPoly) -> Option<IntPoly> {
    match g.leading() {
        None => None,
        Some(l) if l.is_negative() => Some(-g),
        Some(_) => Some(g),
    }
}

fn signed_divisors(n: &BigInt) -> Vec<BigInt> {
    positive_divisors(n)
        .into_iter()
        .flat_map(|d| [d.clone(), -d])
        .collect()
}

/// Positive divisors of `|n|` in increasing order; `n ≠ 0`.
pub(crate) fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    debug_assert!(!n.is_zero());
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    match n.to_u64() {
        Some(m) => {
            for (q, e) in factor_u64(m) {
                primes.push((q.into(), e));
            }
        }
        None => {
            let mut rest = n.clone();
            let mut q = BigInt::from(2);
            while &q * &q <= rest {
                let mut e = 0;
                loop {
                    let (quot, r) = rest.div_rem(&q);
                    if !r.is_zero() {
                        break;
                    }
                    rest = quot;
                    e += 1;
                }
                if e > 0 {
                    primes.push((q.clone(), e));
                }
                q += 1;
            }
            if rest > BigInt::one() {
                primes.push((rest, 1));
            }
        }
    }
    let mut divisors = vec![BigInt::one()];
    for (q, e) in primes {
        let mut next = Vec::with_capacity(divisors.len() * (e as usize + 1));
        for d in &divisors {
            let mut power = d.clone();
            next.push(power.clone());
            for _ in 0..e {
                power *= &q;
                next.push(power.clone());
            }
        }
        divisors = next;
    }
    divisors.sort();
    divisors
}

fn factor_u64(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut q = 2u64;
    while q.saturating_mul(q) <= m {
        if m.is_multiple_of(q) {
            let mut e = 0;
            while m.is_multiple_of(q) {
                m /= q;
                e += 1;
            }
            out.push((q, e));
        }
        q += if q == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}
