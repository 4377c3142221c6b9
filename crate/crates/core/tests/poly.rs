use newton_core::poly::specialize_bivariate;
use newton_core::{BiPoly, BigInt, IntPoly};
use num_traits::{One, Signed};
use proptest::prelude::*;

fn poly(max_len: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-30i64..=30, 0..max_len).prop_map(|c| IntPoly::from_i64s(&c))
}

fn monic_in_y() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(poly(4), 1..5).prop_map(|mut c| {
        c.push(IntPoly::one());
        BiPoly::new(c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn ring_axioms(f in poly(6), g in poly(6), h in poly(6)) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &IntPoly::one(), f.clone());
        prop_assert_eq!(-(-f.clone()), f);
    }

    #[test]
    fn evaluation_is_a_ring_map(f in poly(6), g in poly(6), t in -10i64..=10) {
        let t = BigInt::from(t);
        prop_assert_eq!((&f * &g).eval(&t), f.eval(&t) * g.eval(&t));
        prop_assert_eq!((&f + &g).eval(&t), f.eval(&t) + g.eval(&t));
    }

    #[test]
    fn degree_of_product(f in poly(6), g in poly(6)) {
        let prod = &f * &g;
        match (f.degree(), g.degree()) {
            (Some(a), Some(b)) => prop_assert_eq!(prod.degree(), Some(a + b)),
            _ => prop_assert!(prod.is_zero()),
        }
    }

    #[test]
    fn content_is_idempotent(f in poly(7)) {
        prop_assume!(!f.is_zero());
        let (c, prim) = f.content_and_primitive().unwrap();
        prop_assert!(c.is_positive() == f.leading().unwrap().is_positive());
        prop_assert_eq!(prim.scale(&c), f);
        let (c2, prim2) = prim.content_and_primitive().unwrap();
        prop_assert!(c2.is_one());
        prop_assert_eq!(prim2, prim);
    }

    #[test]
    fn exact_division_inverts_multiplication(f in poly(5), g in poly(5)) {
        prop_assume!(!g.is_zero());
        prop_assert_eq!((&f * &g).exact_div(&g), Some(f));
    }

    #[test]
    fn specialization_keeps_y_degree(z in monic_in_y(), x0 in -3i64..=3) {
        let s = specialize_bivariate(&z, &BigInt::from(x0)).unwrap();
        prop_assert_eq!(s.degree(), z.degree());
        prop_assert!(s.is_monic());
    }

    #[test]
    fn specialization_is_multiplicative(a in monic_in_y(), b in monic_in_y(), x0 in -3i64..=3) {
        let x0 = BigInt::from(x0);
        let prod = BiPoly::new(mul_bi(&a, &b));
        prop_assert_eq!(
            specialize_bivariate(&prod, &x0).unwrap(),
            &specialize_bivariate(&a, &x0).unwrap() * &specialize_bivariate(&b, &x0).unwrap()
        );
    }
}

fn mul_bi(a: &BiPoly, b: &BiPoly) -> Vec<IntPoly> {
    let mut out = vec![IntPoly::zero(); a.coeffs().len() + b.coeffs().len() - 1];
    for (i, ai) in a.coeffs().iter().enumerate() {
        for (j, bj) in b.coeffs().iter().enumerate() {
            out[i + j] = &out[i + j] + &(ai * bj);
        }
    }
    out
}

#[test]
fn display_examples() {
    assert_eq!(
        IntPoly::from_i64s(&[8, 4, 32, 0, 0, 1]).to_string(),
        "x^5 + 32*x^2 + 4*x + 8"
    );
    assert_eq!(IntPoly::from_i64s(&[6, -3]).to_string(), "-3*x + 6");
    assert_eq!(IntPoly::zero().to_string(), "0");
}
