mod common;

use common::{reference_index, unit_leading, valued};
use newton_core::newton::padic_profile;
use newton_core::{
    dominant_index, lower_hull, newton_index, slope_at, BigInt, DiscreteValuation, IntPoly, Slope,
    ValuationProfile,
};
use num_bigint::ToBigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn profile(f: &IntPoly, p: i64) -> ValuationProfile {
    padic_profile(f, &DiscreteValuation::padic(p).unwrap()).unwrap()
}

fn as_pair(s: &Slope) -> Option<(i128, i128)> {
    s.as_rational().map(|r| {
        (
            i128::try_from(r.numer().clone()).unwrap(),
            i128::try_from(r.denom().clone()).unwrap(),
        )
    })
}

fn pair_strategy() -> impl Strategy<Value = (i64, IntPoly, IntPoly)> {
    prop::sample::select(vec![2i64, 3, 5])
        .prop_flat_map(|p| (Just(p), unit_leading(p, 6, 100), unit_leading(p, 6, 100)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn index_is_multiplicative((p, f1, f2) in pair_strategy()) {
        let e1 = newton_index(&profile(&f1, p));
        let e2 = newton_index(&profile(&f2, p));
        let e12 = newton_index(&profile(&(&f1 * &f2), p));
        prop_assert_eq!(as_pair(&e1), reference_index(&f1, p as i128));
        prop_assert_eq!(as_pair(&e12), reference_index(&(&f1 * &f2), p as i128));
        prop_assert_eq!(e12, e1.max(e2));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn slope_denominators_divide_gap(f in valued(3, 7)) {
        let prof = profile(&f, 3);
        let n = prof.n();
        for i in 0..n {
            if let Slope::Finite(m) = slope_at(&prof, i).unwrap() {
                prop_assert!((BigInt::from(n - i) % m.denom()).is_zero());
            }
        }
    }

    #[test]
    fn dominant_index_realises_the_index(f in valued(2, 7)) {
        let prof = profile(&f, 2);
        if let Some(s) = dominant_index(&prof) {
            let e = newton_index(&prof);
            prop_assert_eq!(&e, &slope_at(&prof, s).unwrap());
            let ys = prof.val(s).as_finite().unwrap().clone();
            let expected = num_rational::BigRational::new(-ys, (prof.n() - s).to_bigint().unwrap());
            prop_assert_eq!(e, Slope::Finite(expected));
            for i in (0..prof.n()).filter(|&i| i != s) {
                prop_assert!(slope_at(&prof, i).unwrap() < slope_at(&prof, s).unwrap());
            }
        }
    }

    #[test]
    fn hull_is_lower_and_convex(f in valued(3, 7)) {
        let prof = profile(&f, 3);
        let hull = lower_hull(&prof);
        let pts: Vec<(i128, i128)> = prof
            .vals()
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.as_finite().map(|v| (i as i128, i128::try_from(v.clone()).unwrap())))
            .collect();
        let h: Vec<(i128, i128)> =
            hull.iter().map(|v| (v.i as i128, i128::try_from(v.v.clone()).unwrap())).collect();
        prop_assert_eq!(h.first().unwrap().0, pts.first().unwrap().0);
        prop_assert_eq!(*h.last().unwrap(), *pts.last().unwrap());
        prop_assert!(h.iter().all(|q| pts.contains(q)));
        // Strictly increasing slopes: consecutive cross products are positive.
        for w in h.windows(3) {
            let (a, b, c) = (w[0], w[1], w[2]);
            prop_assert!((b.0 - a.0) * (c.1 - b.1) - (b.1 - a.1) * (c.0 - b.0) > 0);
        }
        // Every point lies on or above the segment spanning its abscissa.
        for &(x, y) in &pts {
            let seg = h.windows(2).find(|w| w[0].0 <= x && x <= w[1].0);
            if let Some(w) = seg {
                let (a, b) = (w[0], w[1]);
                prop_assert!((y - a.1) * (b.0 - a.0) >= (b.1 - a.1) * (x - a.0));
            }
        }
    }
}

#[test]
fn spec_examples() {
    let x = IntPoly::from_i64s(&[8, 4, 32, 0, 0, 1]);
    let prof = profile(&x, 2);
    assert_eq!(newton_index(&prof).to_string(), "-1/2");
    assert_eq!(dominant_index(&prof), Some(1));
    let hull: Vec<(usize, i64)> = lower_hull(&prof)
        .iter()
        .map(|v| (v.i, i64::try_from(v.v.clone()).unwrap()))
        .collect();
    assert_eq!(hull, vec![(0, 3), (1, 2), (5, 0)]);

    let mono = profile(&IntPoly::monomial(BigInt::from(1), 5), 2);
    assert_eq!(newton_index(&mono), Slope::NegInfinity);
    assert_eq!(dominant_index(&mono), None);
    assert_eq!(lower_hull(&mono).len(), 1);
}
