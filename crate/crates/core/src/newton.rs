//! Newton slopes, the Newton index and the lower Newton polygon.
//!
//! Everything here works on a [`ValuationProfile`]: the degree `n` together
//! with `v(a_i)` for every coefficient. For `i < n` the slope
//!
//! ```text
//! m_i(f) = (v(a_n) - v(a_i)) / (n - i)
//! ```
//!
//! is the slope of the segment from `(i, v(a_i))` to `(n, v(a_n))`, and the
//! Newton index `e(f)` is the largest of them.
//!
//! The maximum is taken over `0 ≤ i ≤ n-1`. Restricting to `i ≥ 1` breaks
//! `e(f·g) = max(e(f), e(g))` (take `f = g = x^2 + 2` at `p = 2`: the
//! restricted index is `-∞` for `f` but `-1` for `f^2`) and the bound
//! `e(f_i) ≥ -v(f_i(0))/deg f_i` used for factors, both of which need the
//! constant-term slope.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::poly::{BiPoly, IntPoly, Polynomial};
use crate::valuation::{degree_valuation, padic_valuation, DiscreteValuation, ValInt};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NewtonError {
    #[error("the zero polynomial has no valuation profile")]
    ZeroPolynomial,
    #[error("a constant has no Newton slopes (degree must be at least 1)")]
    ConstantPolynomial,
    #[error("leading coefficient has infinite valuation")]
    InfiniteLeading,
    #[error("{valuation} valuation does not apply to {input} polynomials")]
    KindMismatch {
        valuation: &'static str,
        input: &'static str,
    },
    #[error("slope index {index} out of range 0..{n}")]
    IndexOutOfRange { index: usize, n: usize },
}

/// An exact rational slope or `-∞` (the slope towards a zero coefficient).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Slope {
    NegInfinity,
    Finite(BigRational),
}

impl Slope {
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Slope::Finite(r) => Some(r),
            Slope::NegInfinity => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Slope::Finite(_))
    }
}

impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Slope::NegInfinity, Slope::NegInfinity) => Ordering::Equal,
            (Slope::NegInfinity, Slope::Finite(_)) => Ordering::Less,
            (Slope::Finite(_), Slope::NegInfinity) => Ordering::Greater,
            // Cross-multiplication; denominators are positive after normalization.
            (Slope::Finite(a), Slope::Finite(b)) => {
                (a.numer() * b.denom()).cmp(&(b.numer() * a.denom()))
            }
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::NegInfinity => f.write_str("-inf"),
            Slope::Finite(r) => write!(f, "{r}"),
        }
    }
}

/// Degree plus the valuation of every coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuationProfile {
    vals: Vec<ValInt>,
}

impl ValuationProfile {
    /// Builds a profile from `v(a_0), …, v(a_n)`.
    pub fn new(vals: Vec<ValInt>) -> Result<Self, NewtonError> {
        match vals.last() {
            None => Err(NewtonError::ZeroPolynomial),
            Some(ValInt::Infinity) => Err(NewtonError::InfiniteLeading),
            Some(_) if vals.len() < 2 => Err(NewtonError::ConstantPolynomial),
            Some(_) => Ok(ValuationProfile { vals }),
        }
    }

    pub fn from_i64s(vals: &[Option<i64>]) -> Result<Self, NewtonError> {
        ValuationProfile::new(
            vals.iter()
                .map(|v| v.map_or(ValInt::Infinity, ValInt::from))
                .collect(),
        )
    }

    /// Degree `n`.
    pub fn n(&self) -> usize {
        self.vals.len() - 1
    }

    pub fn vals(&self) -> &[ValInt] {
        &self.vals
    }

    /// `v(a_i)`; panics for `i > n`.
    pub fn val(&self, i: usize) -> &ValInt {
        &self.vals[i]
    }

    /// `v(a_n)`, always finite.
    pub fn leading_val(&self) -> &BigInt {
        self.vals[self.n()]
            .as_finite()
            .expect("leading valuation is finite by construction")
    }

    pub fn slopes(&self) -> Vec<Slope> {
        (0..self.n()).map(|i| self.slope_unchecked(i)).collect()
    }

    fn slope_unchecked(&self, i: usize) -> Slope {
        let n = self.n();
        match &self.vals[i] {
            ValInt::Infinity => Slope::NegInfinity,
            ValInt::Finite(vi) => Slope::Finite(BigRational::new(
                self.leading_val() - vi,
                BigInt::from(n - i),
            )),
        }
    }
}

impl fmt::Display for ValuationProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} [", self.n())?;
        for (i, v) in self.vals.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

/// `v(a_i)` for every coefficient of `f`.
///
/// The p-adic valuation applies to ℤ[x]; the degree valuation applies to the
/// ℤ[x]-coefficients of a polynomial in ℤ[x][y].
pub fn valuation_profile(
    f: &Polynomial,
    v: &DiscreteValuation,
) -> Result<ValuationProfile, NewtonError> {
    if f.is_zero() {
        return Err(NewtonError::ZeroPolynomial);
    }
    match (f, v) {
        (Polynomial::Uni(p), DiscreteValuation::PAdic(prime)) => ValuationProfile::new(
            p.coeffs()
                .iter()
                .map(|c| padic_valuation(c, prime))
                .collect(),
        ),
        (Polynomial::Bi(z), DiscreteValuation::Degree) => {
            ValuationProfile::new(z.coeffs().iter().map(degree_valuation).collect())
        }
        (Polynomial::Uni(_), DiscreteValuation::Degree) => Err(NewtonError::KindMismatch {
            valuation: "degree",
            input: "univariate integer",
        }),
        (Polynomial::Bi(_), DiscreteValuation::PAdic(_)) => Err(NewtonError::KindMismatch {
            valuation: "p-adic",
            input: "bivariate",
        }),
    }
}

pub fn padic_profile(f: &IntPoly, v: &DiscreteValuation) -> Result<ValuationProfile, NewtonError> {
    valuation_profile(&Polynomial::Uni(f.clone()), v)
}

pub fn degree_profile(z: &BiPoly) -> Result<ValuationProfile, NewtonError> {
    valuation_profile(&Polynomial::Bi(z.clone()), &DiscreteValuation::Degree)
}

/// `m_i(f)` for `0 ≤ i < n`.
pub fn slope_at(profile: &ValuationProfile, i: usize) -> Result<Slope, NewtonError> {
    let n = profile.n();
    if i >= n {
        return Err(NewtonError::IndexOutOfRange { index: i, n });
    }
    Ok(profile.slope_unchecked(i))
}

/// `e(f) = max_{0 ≤ i < n} m_i(f)`; `-∞` for a monomial.
pub fn newton_index(profile: &ValuationProfile) -> Slope {
    profile
        .slopes()
        .into_iter()
        .max()
        .unwrap_or(Slope::NegInfinity)
}

/// The unique `s` with `m_s(f) > m_i(f)` for every other `i < n`.
///
/// Ties, and a maximum of `-∞`, give `None`.
pub fn dominant_index(profile: &ValuationProfile) -> Option<usize> {
    let slopes = profile.slopes();
    let (s, best) = slopes.iter().enumerate().max_by(|a, b| a.1.cmp(b.1))?;
    if !best.is_finite() {
        return None;
    }
    let ties = slopes.iter().filter(|m| *m == best).count();
    (ties == 1).then_some(s)
}

/// A vertex `(i, v(a_i))` of the lower Newton polygon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonVertex {
    pub i: usize,
    pub v: BigInt,
}

impl PolygonVertex {
    pub fn new(i: usize, v: impl Into<BigInt>) -> Self {
        PolygonVertex { i, v: v.into() }
    }
}

/// Lower convex hull of the points `(i, v(a_i))` with `a_i ≠ 0`.
///
/// Collinear interior points are dropped, so consecutive edge slopes
/// strictly increase.
pub fn lower_hull(profile: &ValuationProfile) -> Vec<PolygonVertex> {
    let mut hull: Vec<PolygonVertex> = Vec::new();
    for (i, v) in profile.vals().iter().enumerate() {
        let Some(v) = v.as_finite() else { continue };
        let next = PolygonVertex::new(i, v.clone());
        while hull.len() >= 2 {
            let a = &hull[hull.len() - 2];
            let b = &hull[hull.len() - 1];
            // Keep b only if a -> b -> next turns strictly counter-clockwise.
            if cross(a, b, &next).is_positive() {
                break;
            }
            hull.pop();
        }
        hull.push(next);
    }
    hull
}

fn cross(a: &PolygonVertex, b: &PolygonVertex, c: &PolygonVertex) -> BigInt {
    let abx = BigInt::from(b.i) - BigInt::from(a.i);
    let aby = &b.v - &a.v;
    let acx = BigInt::from(c.i) - BigInt::from(a.i);
    let acy = &c.v - &a.v;
    abx * acy - aby * acx
}

/// Slope of the hull edge between two vertices.
pub fn edge_slope(a: &PolygonVertex, b: &PolygonVertex) -> BigRational {
    BigRational::new(&b.v - &a.v, BigInt::from(b.i) - BigInt::from(a.i))
}

/// Convenience: `-v(a_s)/(n-s)`, the value of `e(f)` under a dominant `s`
/// when `v(a_n) = 0`.
pub fn dominant_slope_value(profile: &ValuationProfile, s: usize) -> Option<BigRational> {
    let ys = profile.val(s).as_finite()?;
    if !profile.leading_val().is_zero() {
        return None;
    }
    Some(BigRational::new(-ys.clone(), BigInt::from(profile.n() - s)))
}
