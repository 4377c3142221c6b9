//! Polynomial families that exercise the criteria, plus seeded random
//! instances.
//!
//! - `X(x) = (a0 + p²(p-1)·a2·x²)·p^(n-2) + p^(n-3)·a1·x + an·x^n`, `n` odd, `n ≥ 5`
//! - `Y(x) = (1 + p²x³)·p^(n-2) + p^(n-4)·x² + x^n`, `n` even, `n ≥ 6`
//! - `Z(x, y) = a0(x) + a1(x)·y + y^n`, `a0`, `a1` irreducible of degree `d | n-1`
//! - `x^n - p`, the basic Eisenstein shape
//!
//! Constructors only build the polynomial; whether it satisfies any
//! criterion is for the caller (and the tests) to check.
//!
//! # Random instances
//!
//! [`Lcg`] is a 64-bit linear congruential generator so corpora can be
//! regenerated anywhere: `state ← state·6364136223846793005 +
//! 1442695040888963407 (mod 2^64)`, output the high 32 bits. The initial state
//! is the seed. `below(m)` reduces an output modulo `m`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::oracle::{kronecker_factor, FactorizationLimits, OracleError};
use crate::poly::{BiPoly, IntPoly, Polynomial};
use crate::valuation::{Prime, ValuationError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("family {family} requires parameter {name}")]
    MissingParameter {
        family: FamilyKind,
        name: &'static str,
    },
    #[error("n must be odd (got {0})")]
    NMustBeOdd(usize),
    #[error("n must be even (got {0})")]
    NMustBeEven(usize),
    #[error("n must be at least {min} (got {n})")]
    NTooSmall { n: usize, min: usize },
    #[error("unit parameter {name} = {value} must be positive")]
    UnitNotPositive { name: &'static str, value: BigInt },
    #[error("unit parameter {name} = {value} is divisible by p = {p}")]
    UnitDivisibleByP {
        name: &'static str,
        value: BigInt,
        p: BigInt,
    },
    #[error("coefficients must have equal degree (got {0} and {1})")]
    DegreeMismatch(usize, usize),
    #[error("d={d} does not divide n-1={n_minus_1}")]
    DoesNotDivide { d: usize, n_minus_1: usize },
    #[error("{coefficient} is reducible, witness {witness}")]
    ReducibleCoefficient {
        coefficient: IntPoly,
        witness: IntPoly,
    },
    #[error("no stock irreducible coefficient pair of degree {0}")]
    NoStockPair(usize),
    #[error(transparent)]
    Valuation(#[from] ValuationError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    X,
    Y,
    Z,
    Eisenstein,
    Random,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::X => "X",
            FamilyKind::Y => "Y",
            FamilyKind::Z => "Z",
            FamilyKind::Eisenstein => "eisenstein",
            FamilyKind::Random => "random",
        })
    }
}

/// Unit parameters `a0, a1, a2, an` of family X.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XUnits {
    pub a0: BigInt,
    pub a1: BigInt,
    pub a2: BigInt,
    pub an: BigInt,
}

impl Default for XUnits {
    fn default() -> Self {
        XUnits {
            a0: BigInt::one(),
            a1: BigInt::one(),
            a2: BigInt::one(),
            an: BigInt::one(),
        }
    }
}

impl XUnits {
    fn named(&self) -> [(&'static str, &BigInt); 4] {
        [
            ("a0", &self.a0),
            ("a1", &self.a1),
            ("a2", &self.a2),
            ("an", &self.an),
        ]
    }
}

pub fn family_x(p: &Prime, n: usize, units: &XUnits) -> Result<IntPoly, FamilyError> {
    if n.is_multiple_of(2) {
        return Err(FamilyError::NMustBeOdd(n));
    }
    if n < 5 {
        return Err(FamilyError::NTooSmall { n, min: 5 });
    }
    let pv = p.value();
    for (name, value) in units.named() {
        if !value.is_positive() {
            return Err(FamilyError::UnitNotPositive {
                name,
                value: value.clone(),
            });
        }
        if value.is_multiple_of(pv) {
            return Err(FamilyError::UnitDivisibleByP {
                name,
                value: value.clone(),
                p: pv.clone(),
            });
        }
    }
    let pow = |k: usize| pv.pow(k as u32);
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[0] = &units.a0 * pow(n - 2);
    coeffs[1] = &units.a1 * pow(n - 3);
    coeffs[2] = pow(2) * (pv - 1) * &units.a2 * pow(n - 2);
    coeffs[n] = units.an.clone();
    Ok(IntPoly::new(coeffs))
}

pub fn family_y(p: &Prime, n: usize) -> Result<IntPoly, FamilyError> {
    if n % 2 == 1 {
        return Err(FamilyError::NMustBeEven(n));
    }
    if n < 6 {
        return Err(FamilyError::NTooSmall { n, min: 6 });
    }
    let pv = p.value();
    let pow = |k: usize| pv.pow(k as u32);
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[0] = pow(n - 2);
    coeffs[2] = pow(n - 4);
    coeffs[3] = pow(n);
    coeffs[n] = BigInt::one();
    Ok(IntPoly::new(coeffs))
}

/// Builds `a0 + a1·y + y^n` after certifying both coefficients irreducible.
pub fn family_z(
    a0: &IntPoly,
    a1: &IntPoly,
    n: usize,
    limits: &FactorizationLimits,
) -> Result<BiPoly, FamilyError> {
    if n <= 2 {
        return Err(FamilyError::NTooSmall { n, min: 3 });
    }
    let d0 = a0.degree().unwrap_or(0);
    let d1 = a1.degree().unwrap_or(0);
    if d0 != d1 {
        return Err(FamilyError::DegreeMismatch(d0, d1));
    }
    let d = d0;
    if d == 0 || !(n - 1).is_multiple_of(d) {
        return Err(FamilyError::DoesNotDivide {
            d,
            n_minus_1: n - 1,
        });
    }
    for c in [a0, a1] {
        let fac = kronecker_factor(c, limits)?;
        if !fac.content.abs().is_one() {
            return Err(FamilyError::ReducibleCoefficient {
                coefficient: c.clone(),
                witness: IntPoly::constant(fac.content.abs()),
            });
        }
        if !fac.is_irreducible() {
            return Err(FamilyError::ReducibleCoefficient {
                coefficient: c.clone(),
                witness: fac.factors[0].clone(),
            });
        }
    }
    let mut coeffs = vec![IntPoly::zero(); n + 1];
    coeffs[0] = a0.clone();
    coeffs[1] = a1.clone();
    coeffs[n] = IntPoly::one();
    Ok(BiPoly::new(coeffs))
}

/// A fixed pair of irreducible polynomials of degree `d`.
pub fn stock_z_pair(d: usize) -> Option<(IntPoly, IntPoly)> {
    let p = IntPoly::from_i64s;
    let pair = match d {
        0 => return None,
        1 => (p(&[1, 1]), p(&[2, 1])),
        2 => (p(&[1, 0, 1]), p(&[1, 1, 1])),
        3 => (p(&[2, 0, 0, 1]), p(&[1, 1, 0, 1])),
        4 => (p(&[2, 0, 0, 0, 1]), p(&[1, 1, 0, 0, 1])),
        _ => {
            // Both are Eisenstein at 2.
            let top = IntPoly::monomial(BigInt::one(), d);
            (&top + &p(&[2]), &top + &p(&[2, 2]))
        }
    };
    Some(pair)
}

/// `x^n - p`.
pub fn eisenstein(p: &Prime, n: usize) -> Result<IntPoly, FamilyError> {
    if n == 0 {
        return Err(FamilyError::NTooSmall { n, min: 1 });
    }
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[0] = -p.value().clone();
    coeffs[n] = BigInt::one();
    Ok(IntPoly::new(coeffs))
}

/// Deterministic generator for reproducible corpora.
#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self
            .state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (self.state >> 32) as u32
    }

    /// Uniform-ish in `0..m`; `m > 0`.
    pub fn below(&mut self, m: u64) -> u64 {
        u64::from(self.next_u32()) % m
    }

    /// In `-bound..=bound`.
    pub fn symmetric(&mut self, bound: u64) -> i64 {
        self.below(2 * bound + 1) as i64 - bound as i64
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.below(items.len() as u64) as usize]
    }
}

/// Random polynomial of degree `1..=degree_bound`, coefficients in
/// `[-coeff_bound, coeff_bound]` and a leading coefficient prime to `p`.
pub fn random_valued_poly(seed: u64, degree_bound: usize, coeff_bound: u64, p: &Prime) -> IntPoly {
    random_poly_with(&mut Lcg::new(seed), degree_bound, coeff_bound, p)
}

/// [`random_valued_poly`] drawing from an existing generator.
pub fn random_poly_with(
    rng: &mut Lcg,
    degree_bound: usize,
    coeff_bound: u64,
    p: &Prime,
) -> IntPoly {
    assert!(
        degree_bound >= 1 && coeff_bound >= 1,
        "bounds must be positive"
    );
    let degree = 1 + rng.below(degree_bound as u64) as usize;
    let mut coeffs: Vec<BigInt> = (0..degree)
        .map(|_| rng.symmetric(coeff_bound).into())
        .collect();
    let lead = loop {
        let c = BigInt::from(rng.symmetric(coeff_bound));
        if !c.is_zero() && !c.is_multiple_of(p.value()) {
            break c;
        }
    };
    coeffs.push(lead);
    IntPoly::new(coeffs)
}

/// CLI-facing description of a family instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyParams {
    pub family: FamilyKind,
    pub p: Option<BigInt>,
    pub n: Option<usize>,
    pub units: Option<XUnits>,
    pub d: Option<usize>,
    pub seed: Option<u64>,
}

impl FamilyParams {
    pub fn new(family: FamilyKind) -> Self {
        FamilyParams {
            family,
            p: None,
            n: None,
            units: None,
            d: None,
            seed: None,
        }
    }

    fn prime(&self) -> Result<Prime, FamilyError> {
        let p = self.p.clone().ok_or(FamilyError::MissingParameter {
            family: self.family,
            name: "p",
        })?;
        Ok(Prime::new(p)?)
    }

    fn degree(&self) -> Result<usize, FamilyError> {
        self.n.ok_or(FamilyError::MissingParameter {
            family: self.family,
            name: "n",
        })
    }

    pub fn build(&self, limits: &FactorizationLimits) -> Result<Polynomial, FamilyError> {
        Ok(match self.family {
            FamilyKind::X => {
                let units = self.units.clone().unwrap_or_default();
                family_x(&self.prime()?, self.degree()?, &units)?.into()
            }
            FamilyKind::Y => family_y(&self.prime()?, self.degree()?)?.into(),
            FamilyKind::Eisenstein => eisenstein(&self.prime()?, self.degree()?)?.into(),
            FamilyKind::Z => {
                let n = self.degree()?;
                let d = self.d.ok_or(FamilyError::MissingParameter {
                    family: self.family,
                    name: "d",
                })?;
                let (a0, a1) = stock_z_pair(d).ok_or(FamilyError::NoStockPair(d))?;
                family_z(&a0, &a1, n, limits)?.into()
            }
            FamilyKind::Random => {
                let n = self.n.unwrap_or(4);
                let seed = self.seed.unwrap_or(1);
                random_valued_poly(seed, n.max(1), 10, &self.prime()?).into()
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prime(p: i64) -> Prime {
        Prime::new(p).unwrap()
    }

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn family_x_examples() {
        let units = XUnits::default();
        assert_eq!(
            family_x(&prime(2), 5, &units).unwrap(),
            p(&[8, 4, 32, 0, 0, 1])
        );
        assert_eq!(
            family_x(&prime(3), 5, &units).unwrap(),
            p(&[27, 9, 486, 0, 0, 1])
        );
        assert_eq!(
            family_x(&prime(2), 4, &units),
            Err(FamilyError::NMustBeOdd(4))
        );
        assert_eq!(family_x(&prime(2), 7, &units).unwrap().degree(), Some(7));
        assert_eq!(
            family_x(&prime(2), 3, &units),
            Err(FamilyError::NTooSmall { n: 3, min: 5 })
        );
        let bad = XUnits {
            a1: BigInt::from(-1),
            ..XUnits::default()
        };
        assert!(matches!(
            family_x(&prime(2), 5, &bad),
            Err(FamilyError::UnitNotPositive { name: "a1", .. })
        ));
        let bad = XUnits {
            a2: BigInt::from(4),
            ..XUnits::default()
        };
        assert!(matches!(
            family_x(&prime(2), 5, &bad),
            Err(FamilyError::UnitDivisibleByP { name: "a2", .. })
        ));
    }

    #[test]
    fn family_y_examples() {
        assert_eq!(family_y(&prime(2), 6).unwrap(), p(&[16, 0, 4, 64, 0, 0, 1]));
        assert_eq!(
            family_y(&prime(3), 6).unwrap(),
            p(&[81, 0, 9, 729, 0, 0, 1])
        );
        assert_eq!(family_y(&prime(2), 7), Err(FamilyError::NMustBeEven(7)));
        assert_eq!(
            family_y(&prime(2), 4),
            Err(FamilyError::NTooSmall { n: 4, min: 6 })
        );
    }

    #[test]
    fn family_z_examples() {
        let limits = FactorizationLimits::default();
        let (a0, a1) = (p(&[1, 0, 1]), p(&[1, 1, 1]));
        let z = family_z(&a0, &a1, 5, &limits).unwrap();
        assert_eq!(z.to_string(), "y^5 + (x^2 + x + 1)*y + (x^2 + 1)");
        assert_eq!(
            family_z(&a0, &a1, 4, &limits),
            Err(FamilyError::DoesNotDivide { d: 2, n_minus_1: 3 })
        );
        assert_eq!(
            family_z(&p(&[-1, 0, 1]), &a1, 5, &limits),
            Err(FamilyError::ReducibleCoefficient {
                coefficient: p(&[-1, 0, 1]),
                witness: p(&[-1, 1]),
            })
        );
        assert_eq!(
            family_z(&a0, &p(&[1, 1]), 5, &limits),
            Err(FamilyError::DegreeMismatch(2, 1))
        );
        assert!(matches!(
            family_z(&p(&[2, 0, 2]), &a1, 5, &limits),
            Err(FamilyError::ReducibleCoefficient { .. })
        ));
    }

    #[test]
    fn stock_pairs_are_irreducible() {
        let limits = FactorizationLimits::default();
        for d in 1..=6 {
            let (a0, a1) = stock_z_pair(d).unwrap();
            assert_eq!(a0.degree(), Some(d));
            assert!(family_z(&a0, &a1, 2 * d + 1, &limits).is_ok(), "d = {d}");
        }
    }

    #[test]
    fn eisenstein_shape() {
        assert_eq!(eisenstein(&prime(2), 3).unwrap(), p(&[-2, 0, 0, 1]));
    }

    #[test]
    fn random_is_deterministic() {
        let two = prime(2);
        let a = random_valued_poly(1, 4, 10, &two);
        assert_eq!(a, random_valued_poly(1, 4, 10, &two));
        assert_eq!(a, p(&[0, 9]));
    }

    #[test]
    fn random_leading_prime_to_p() {
        for q in [2, 3, 5] {
            let q = prime(q);
            for seed in 0..300 {
                let f = random_valued_poly(seed, 6, 100, &q);
                assert!(!f.leading().unwrap().is_multiple_of(q.value()));
                assert!(f.degree().unwrap() >= 1 && f.degree().unwrap() <= 6);
                assert!(f.max_abs_coeff() <= BigInt::from(100));
            }
        }
    }

    #[test]
    fn distinct_seeds_rarely_collide() {
        let two = prime(2);
        let collisions = (0..1000u64)
            .filter(|&s| {
                random_valued_poly(2 * s, 4, 10, &two) == random_valued_poly(2 * s + 1, 4, 10, &two)
            })
            .count();
        assert!(collisions <= 10, "{collisions} collisions");
    }
}
