//! Discrete valuations: `v_p` on ℤ and `v(g) = -deg g` on ℤ[x].
//!
//! Valuations take values in [`ValInt`], the integers extended by `+∞`
//! (the valuation of zero).

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::poly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValuationError {
    #[error("{0} is not a prime")]
    NotPrime(BigInt),
    #[error("undefined valuation arithmetic: {0}")]
    Indeterminate(&'static str),
}

/// An integer or `+∞`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ValInt {
    Finite(BigInt),
    Infinity,
}

impl ValInt {
    pub fn finite(v: impl Into<BigInt>) -> Self {
        ValInt::Finite(v.into())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ValInt::Infinity)
    }

    pub fn as_finite(&self) -> Option<&BigInt> {
        match self {
            ValInt::Finite(v) => Some(v),
            ValInt::Infinity => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.as_finite().is_some_and(Zero::is_zero)
    }

    /// `self - rhs`. Subtracting `∞` has no value in ℤ ∪ {∞}.
    pub fn checked_sub(&self, rhs: &ValInt) -> Result<ValInt, ValuationError> {
        match (self, rhs) {
            (ValInt::Finite(a), ValInt::Finite(b)) => Ok(ValInt::Finite(a - b)),
            (ValInt::Infinity, ValInt::Finite(_)) => Ok(ValInt::Infinity),
            (ValInt::Infinity, ValInt::Infinity) => Err(ValuationError::Indeterminate("∞ - ∞")),
            (ValInt::Finite(_), ValInt::Infinity) => {
                Err(ValuationError::Indeterminate("finite - ∞ is -∞"))
            }
        }
    }
}

impl Add for &ValInt {
    type Output = ValInt;
    fn add(self, rhs: &ValInt) -> ValInt {
        match (self, rhs) {
            (ValInt::Finite(a), ValInt::Finite(b)) => ValInt::Finite(a + b),
            _ => ValInt::Infinity,
        }
    }
}

impl Add for ValInt {
    type Output = ValInt;
    fn add(self, rhs: ValInt) -> ValInt {
        &self + &rhs
    }
}

impl Ord for ValInt {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ValInt::Finite(a), ValInt::Finite(b)) => a.cmp(b),
            (ValInt::Finite(_), ValInt::Infinity) => Ordering::Less,
            (ValInt::Infinity, ValInt::Finite(_)) => Ordering::Greater,
            (ValInt::Infinity, ValInt::Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for ValInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ValInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValInt::Finite(v) => write!(f, "{v}"),
            ValInt::Infinity => f.write_str("∞"),
        }
    }
}

impl From<i64> for ValInt {
    fn from(v: i64) -> Self {
        ValInt::Finite(v.into())
    }
}

/// A rational prime, checked by trial division at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Prime(BigInt);

impl Prime {
    pub fn new(p: impl Into<BigInt>) -> Result<Self, ValuationError> {
        let p = p.into();
        if is_prime(&p) {
            Ok(Prime(p))
        } else {
            Err(ValuationError::NotPrime(p))
        }
    }

    pub fn value(&self) -> &BigInt {
        &self.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn is_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    if let Some(n) = n.to_u64() {
        if n < 4 {
            return true;
        }
        if n % 2 == 0 {
            return false;
        }
        let mut d = 3u64;
        while d.saturating_mul(d) <= n {
            if n % d == 0 {
                return false;
            }
            d += 2;
        }
        return true;
    }
    let two = BigInt::from(2);
    if n.is_even() {
        return false;
    }
    let mut d = BigInt::from(3);
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            return false;
        }
        d += &two;
    }
    true
}

/// Exponent of `p` in `a`; `∞` for `a = 0`.
pub fn padic_valuation(a: &BigInt, p: &Prime) -> ValInt {
    if a.is_zero() {
        return ValInt::Infinity;
    }
    let mut rest = a.abs();
    let mut k = 0u64;
    loop {
        let (q, r) = rest.div_rem(&p.0);
        if !r.is_zero() {
            break;
        }
        rest = q;
        k += 1;
    }
    ValInt::Finite(k.into())
}

/// `-deg g`; `∞` for `g = 0`.
pub fn degree_valuation(g: &IntPoly) -> ValInt {
    match g.degree() {
        Some(d) => ValInt::Finite(-BigInt::from(d)),
        None => ValInt::Infinity,
    }
}

/// The two valuations the criteria are evaluated under.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiscreteValuation {
    /// `v_p` on ℤ; applies to polynomials in ℤ[x].
    PAdic(Prime),
    /// `v(g) = -deg g` on ℤ[x]; applies to polynomials in ℤ[x][y].
    Degree,
}

impl DiscreteValuation {
    pub fn padic(p: impl Into<BigInt>) -> Result<Self, ValuationError> {
        Prime::new(p).map(DiscreteValuation::PAdic)
    }

    pub fn prime(&self) -> Option<&Prime> {
        match self {
            DiscreteValuation::PAdic(p) => Some(p),
            DiscreteValuation::Degree => None,
        }
    }
}

impl fmt::Display for DiscreteValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiscreteValuation::PAdic(p) => write!(f, "{p}-adic"),
            DiscreteValuation::Degree => f.write_str("degree"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: i64) -> Prime {
        Prime::new(n).unwrap()
    }

    /// Exponent of `p` via full trial-division factorization of `n`.
    fn factor_exponent(mut n: u64, p: u64) -> u64 {
        let mut exps = std::collections::BTreeMap::new();
        let mut d = 2;
        while d * d <= n {
            while n.is_multiple_of(d) {
                *exps.entry(d).or_insert(0) += 1;
                n /= d;
            }
            d += 1;
        }
        if n > 1 {
            *exps.entry(n).or_insert(0) += 1;
        }
        exps.get(&p).copied().unwrap_or(0)
    }

    #[test]
    fn padic_examples() {
        assert_eq!(padic_valuation(&8.into(), &p(2)), ValInt::from(3));
        assert_eq!(padic_valuation(&0.into(), &p(5)), ValInt::Infinity);
        assert_eq!(factor_exponent(360, 3), 2);
        assert_eq!(padic_valuation(&360.into(), &p(3)), ValInt::from(2));
        assert_eq!(padic_valuation(&(-360).into(), &p(2)), ValInt::from(3));
    }

    #[test]
    fn padic_matches_factorization() {
        for n in 1..2000u64 {
            for q in [2u64, 3, 5, 7] {
                assert_eq!(
                    padic_valuation(&n.into(), &p(q as i64)),
                    ValInt::from(factor_exponent(n, q) as i64),
                    "v_{q}({n})"
                );
            }
        }
    }

    #[test]
    fn padic_prime_power_times_unit() {
        for q in [2i64, 3, 5] {
            for u in [1i64, -1, 7, 11, -13] {
                if u % q == 0 {
                    continue;
                }
                for k in [0u32, 1, 5, 31, 64] {
                    let a = BigInt::from(q).pow(k) * u;
                    assert_eq!(padic_valuation(&a, &p(q)), ValInt::from(k as i64));
                }
            }
        }
    }

    #[test]
    fn degree_examples() {
        assert_eq!(
            degree_valuation(&IntPoly::from_i64s(&[1, 0, 1])),
            ValInt::from(-2)
        );
        assert_eq!(degree_valuation(&IntPoly::zero()), ValInt::Infinity);
        assert_eq!(degree_valuation(&IntPoly::from_i64s(&[5])), ValInt::from(0));
    }

    #[test]
    fn primality() {
        for n in [2, 3, 5, 7, 11, 13, 97, 7919] {
            assert!(Prime::new(n).is_ok(), "{n}");
        }
        for n in [-7, 0, 1, 4, 9, 15, 91, 7917] {
            assert_eq!(Prime::new(n), Err(ValuationError::NotPrime(n.into())));
        }
        assert!(DiscreteValuation::padic(6).is_err());
    }

    #[test]
    fn valint_arithmetic() {
        let inf = ValInt::Infinity;
        let three = ValInt::from(3);
        assert_eq!(&inf + &three, ValInt::Infinity);
        assert_eq!(&three + &ValInt::from(-5), ValInt::from(-2));
        assert!(three < inf);
        assert!(ValInt::from(-1_000_000) < ValInt::from(3));
        assert_eq!(inf.checked_sub(&three), Ok(ValInt::Infinity));
        assert!(inf.checked_sub(&inf).is_err());
        assert!(three.checked_sub(&inf).is_err());
        assert_eq!(three.checked_sub(&ValInt::from(5)), Ok(ValInt::from(-2)));
    }
}
