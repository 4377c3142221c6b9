//! Dense polynomials with unbounded integer coefficients.
//!
//! [`IntPoly`] is an element of ℤ[x]. [`BiPoly`] is an element of ℤ[x][y]: a
//! polynomial in `y` whose coefficients are [`IntPoly`]s in `x`.
//!
//! Coefficients are stored in ascending order (`coeffs[i]` multiplies `x^i`)
//! with trailing zeros trimmed, so the zero polynomial is the empty vector and
//! every polynomial has exactly one representation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("the zero polynomial has no content or primitive part")]
    ZeroPolynomial,
    #[error("polynomial is not monic in y (leading y-coefficient is {0})")]
    NotMonicInY(String),
}

/// A polynomial in ℤ[x].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        IntPoly::monomial(BigInt::one(), 1)
    }

    /// `c·x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        IntPoly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_default()
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut k: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Returns `(content, primitive)` with `self = content · primitive`.
    ///
    /// The content carries the sign of the leading coefficient, so the
    /// primitive part always has a positive leading coefficient.
    pub fn content_and_primitive(&self) -> Result<(BigInt, IntPoly), PolyError> {
        let lead = self.leading().ok_or(PolyError::ZeroPolynomial)?;
        let mut g = self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if lead.is_negative() {
            g = -g;
        }
        let primitive = IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect());
        Ok((g, primitive))
    }

    /// Exact division in ℤ[x]. Returns `None` unless `divisor` divides `self`
    /// with an integer quotient and zero remainder.
    pub fn exact_div(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let n = self.degree()?;
        if n < dd {
            return None;
        }
        let lead = divisor.leading()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(IntPoly::new(quot))
        } else {
            None
        }
    }

    /// Writes the polynomial in descending powers of `var`, with explicit
    /// `*` and `^`.
    pub fn write_in(&self, var: &str, f: &mut impl fmt::Write) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => f.write_str(var)?,
                (_, false) => write!(f, "{mag}*{var}")?,
            }
            if i > 1 {
                write!(f, "^{i}")?;
            }
        }
        Ok(())
    }

    pub fn to_string_in(&self, var: &str) -> String {
        let mut s = String::new();
        self.write_in(var, &mut s).expect("writing to a String");
        s
    }

    fn is_single_term(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() <= 1
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_in("x", f)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned_binop {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: BiPoly) -> BiPoly {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add add, Sub sub, Mul mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

/// `poly_mul`: exact product.
pub fn poly_mul(f: &IntPoly, g: &IntPoly) -> IntPoly {
    f * g
}

/// `poly_eval`: exact Horner evaluation.
pub fn poly_eval(f: &IntPoly, t: &BigInt) -> BigInt {
    f.eval(t)
}

/// A polynomial in ℤ[x][y], stored as coefficients `a_i(x)` of `y^i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    coeffs: Vec<IntPoly>,
}

impl BiPoly {
    pub fn new(mut coeffs: Vec<IntPoly>) -> Self {
        while coeffs.last().is_some_and(IntPoly::is_zero) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    /// The polynomial `y`.
    pub fn y() -> Self {
        BiPoly::new(vec![IntPoly::zero(), IntPoly::one()])
    }

    /// Embeds an `x`-polynomial as a `y`-constant.
    pub fn from_x_poly(p: IntPoly) -> Self {
        BiPoly::new(vec![p])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `y`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[IntPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> IntPoly {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Leading `y`-coefficient is the constant 1.
    pub fn is_monic_in_y(&self) -> bool {
        self.coeffs.last().is_some_and(|c| *c == IntPoly::one())
    }

    /// `Some` when no coefficient involves `y`.
    pub fn as_x_poly(&self) -> Option<IntPoly> {
        match self.coeffs.len() {
            0 => Some(IntPoly::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn pow(&self, mut k: u32) -> BiPoly {
        let mut base = self.clone();
        let mut acc = BiPoly::from_x_poly(IntPoly::one());
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates every `x`-coefficient at `x0`, giving a polynomial in `y`.
    ///
    /// Requires the polynomial to be monic in `y` so the `y`-degree survives.
    pub fn specialize(&self, x0: &BigInt) -> Result<IntPoly, PolyError> {
        if !self.is_monic_in_y() {
            let lead = self
                .coeffs
                .last()
                .map(|c| c.to_string())
                .unwrap_or_else(|| "0".into());
            return Err(PolyError::NotMonicInY(lead));
        }
        Ok(IntPoly::new(
            self.coeffs.iter().map(|c| c.eval(x0)).collect(),
        ))
    }

    pub fn write_in(&self, f: &mut impl fmt::Write) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let ypow = match i {
                0 => String::new(),
                1 => "y".to_string(),
                _ => format!("y^{i}"),
            };
            if c.is_single_term() {
                // Single monomial c·x^k: print sign outside, like a plain term.
                let k = c.degree().unwrap_or(0);
                let lead = c.coeff(k);
                let mag = IntPoly::monomial(lead.abs(), k);
                if first {
                    if lead.is_negative() {
                        f.write_str("-")?;
                    }
                } else if lead.is_negative() {
                    f.write_str(" - ")?;
                } else {
                    f.write_str(" + ")?;
                }
                let body = mag.to_string_in("x");
                match (i, body.as_str()) {
                    (0, _) => f.write_str(&body)?,
                    (_, "1") => f.write_str(&ypow)?,
                    _ => write!(f, "{body}*{ypow}")?,
                }
            } else {
                if !first {
                    f.write_str(" + ")?;
                }
                write!(f, "({})", c.to_string_in("x"))?;
                if i > 0 {
                    write!(f, "*{ypow}")?;
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_in(f)
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::new((0..len).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::new((0..len).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![IntPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BiPoly::new(out)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// `specialize_bivariate`.
pub fn specialize_bivariate(z: &BiPoly, x0: &BigInt) -> Result<IntPoly, PolyError> {
    z.specialize(x0)
}

/// Either kind of input polynomial accepted by the analysis pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Polynomial {
    Uni(IntPoly),
    Bi(BiPoly),
}

impl Polynomial {
    pub fn degree(&self) -> Option<usize> {
        match self {
            Polynomial::Uni(p) => p.degree(),
            Polynomial::Bi(p) => p.degree(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Polynomial::Uni(p) => p.is_zero(),
            Polynomial::Bi(p) => p.is_zero(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Polynomial::Uni(p) => p.fmt(f),
            Polynomial::Bi(p) => p.fmt(f),
        }
    }
}

impl From<IntPoly> for Polynomial {
    fn from(p: IntPoly) -> Self {
        Polynomial::Uni(p)
    }
}

impl From<BiPoly> for Polynomial {
    fn from(p: BiPoly) -> Self {
        Polynomial::Bi(p)
    }
}
