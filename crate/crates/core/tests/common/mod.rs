#![allow(dead_code)]

use newton_core::{BigInt, IntPoly};
use proptest::prelude::*;

/// Degree `1..=max_degree`, coefficients in `[-bound, bound]`, leading
/// coefficient prime to `p`.
pub fn unit_leading(p: i64, max_degree: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    (
        prop::collection::vec(-bound..=bound, 1..=max_degree),
        (-bound..=bound).prop_filter("unit", move |c| c % p != 0),
    )
        .prop_map(|(mut c, lead)| {
            c.push(lead);
            IntPoly::from_i64s(&c)
        })
}

/// Coefficients of the form `±u·p^e`, which exercises many valuation patterns.
pub fn valued(p: i64, max_degree: usize) -> impl Strategy<Value = IntPoly> {
    let coeff = (0u32..4, prop::sample::select(vec![-2i64, -1, 0, 1, 1, 2]))
        .prop_map(move |(e, u)| u * p.pow(e));
    (
        prop::collection::vec(coeff, 1..=max_degree),
        prop::sample::select(vec![1i64, -1]),
    )
        .prop_map(|(mut c, lead)| {
            c.push(lead);
            IntPoly::from_i64s(&c)
        })
}

pub fn to_i128(f: &IntPoly) -> Vec<i128> {
    f.coeffs()
        .iter()
        .map(|c| i128::try_from(c.clone()).unwrap())
        .collect()
}

/// `v_p(a)` for `a ≠ 0`.
pub fn vp(mut a: i128, p: i128) -> i128 {
    assert!(a != 0);
    let mut k = 0;
    while a % p == 0 {
        a /= p;
        k += 1;
    }
    k
}

pub fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// A reduced fraction `num/den` with `den > 0`.
pub fn frac(num: i128, den: i128) -> (i128, i128) {
    let g = gcd(num, den).max(1) * den.signum();
    (num / g, den / g)
}

/// Newton index over indices `0..n` as a reduced fraction, `None` for -inf.
pub fn reference_index(f: &IntPoly, p: i128) -> Option<(i128, i128)> {
    let c = to_i128(f);
    let n = c.len() - 1;
    let yn = vp(c[n], p);
    let mut best: Option<(i128, i128)> = None;
    for (i, &a) in c.iter().enumerate().take(n) {
        if a == 0 {
            continue;
        }
        let m = frac(yn - vp(a, p), (n - i) as i128);
        if best.is_none_or(|b| m.0 * b.1 > b.0 * m.1) {
            best = Some(m);
        }
    }
    best
}

/// Irreducible factors of a nonzero polynomial of degree at most 3, found
/// with the rational root test. Primitive, positive leading coefficient,
/// sorted by degree then coefficients from the top.
pub fn small_factors(f: &IntPoly) -> Vec<IntPoly> {
    let mut c = to_i128(f);
    assert!(c.len() <= 4 && !c.is_empty());
    let mut out = Vec::new();
    loop {
        let n = c.len() - 1;
        if n == 0 {
            break;
        }
        match rational_root(&c) {
            Some((r, s)) => {
                out.push(primitive(&[-r, s]));
                c = divide_linear(&c, r, s);
            }
            None => {
                out.push(primitive(&c));
                break;
            }
        }
    }
    out.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
    });
    out
}

fn primitive(c: &[i128]) -> IntPoly {
    let g = c.iter().fold(0, |g, &a| gcd(g, a)) * c.last().unwrap().signum();
    IntPoly::new(c.iter().map(|&a| BigInt::from(a / g)).collect())
}

/// A root `r/s` with `s > 0`.
fn rational_root(c: &[i128]) -> Option<(i128, i128)> {
    if c[0] == 0 {
        return Some((0, 1));
    }
    let lead = *c.last().unwrap();
    for r in divisors(c[0]) {
        for s in divisors(lead) {
            for r in [r, -r] {
                // Σ c_i r^i s^(n-i) = 0
                let n = c.len() - 1;
                let v: i128 = c
                    .iter()
                    .enumerate()
                    .map(|(i, &a)| a * r.pow(i as u32) * s.pow((n - i) as u32))
                    .sum();
                if v == 0 {
                    return Some((r, s));
                }
            }
        }
    }
    None
}

fn divisors(a: i128) -> Vec<i128> {
    let a = a.abs();
    (1..=a).filter(|d| a % d == 0).collect()
}

/// Quotient of `c` by `s·x - r`; exact over ℤ by Gauss's lemma when
/// `gcd(r, s) = 1`.
fn divide_linear(c: &[i128], r: i128, s: i128) -> Vec<i128> {
    let n = c.len() - 1;
    let mut rem = c.to_vec();
    let mut q = vec![0i128; n];
    for i in (1..=n).rev() {
        assert_eq!(rem[i] % s, 0);
        q[i - 1] = rem[i] / s;
        rem[i - 1] += q[i - 1] * r;
    }
    assert_eq!(rem[0], 0);
    q
}
