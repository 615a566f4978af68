use proptest::prelude::*;

use qschur::cartan::{builtin_cartan, validate_cartan, CartanData};
use qschur::qarith::{qbinom_d, qint_d};
use qschur::weyl::{dominance_leq, dominant_representative, orbit, reflect, saturate};
use qschur::{LaurentPoly, Weight, WeightSet};

fn catalog() -> Vec<CartanData> {
    vec![
        builtin_cartan('A', 1).unwrap(),
        builtin_cartan('A', 2).unwrap(),
        builtin_cartan('C', 2).unwrap(),
        validate_cartan(&[vec![2, -1], vec![-2, 2]]).unwrap(),
        builtin_cartan('G', 2).unwrap(),
        builtin_cartan('A', 3).unwrap(),
    ]
}

fn rank2() -> Vec<CartanData> {
    vec![
        builtin_cartan('A', 2).unwrap(),
        validate_cartan(&[vec![2, -1], vec![-2, 2]]).unwrap(),
    ]
}

fn weight_for(c: &CartanData, coords: &[i64]) -> Weight {
    Weight::new(coords.iter().copied().cycle().take(c.rank()).collect())
}

proptest! {
    #[test]
    fn reflections_are_involutions(k in 0usize..6, coords in prop::collection::vec(-6i64..=6, 3), i in 0usize..3) {
        let c = &catalog()[k];
        let i = i % c.rank();
        let l = weight_for(c, &coords);
        let once = reflect(c, i, &l).unwrap();
        prop_assert_eq!(reflect(c, i, &once).unwrap(), l);
    }

    #[test]
    fn orbits_are_stable(k in 0usize..6, coords in prop::collection::vec(-3i64..=3, 3)) {
        let c = &catalog()[k];
        let l = weight_for(c, &coords);
        let o = orbit(c, &[l.clone()].into_iter().collect());
        prop_assert!(o.contains(&l));
        for w in &o {
            for i in 0..c.rank() {
                prop_assert!(o.contains(&reflect(c, i, w).unwrap()));
            }
            prop_assert_eq!(dominant_representative(c, w), dominant_representative(c, &l));
        }
        prop_assert_eq!(o.iter().filter(|w| w.is_dominant()).count(), 1);
    }

    #[test]
    fn dominance_is_a_partial_order(
        k in 0usize..2,
        a in prop::collection::vec(-4i64..=4, 2),
        b in prop::collection::vec(-4i64..=4, 2),
        d in prop::collection::vec(-4i64..=4, 2),
    ) {
        let c = &rank2()[k];
        let (a, b, d) = (Weight::new(a), Weight::new(b), Weight::new(d));
        prop_assert!(dominance_leq(c, &a, &a));
        if dominance_leq(c, &a, &b) && dominance_leq(c, &b, &a) {
            prop_assert_eq!(&a, &b);
        }
        if dominance_leq(c, &a, &b) && dominance_leq(c, &b, &d) {
            prop_assert!(dominance_leq(c, &a, &d));
        }
    }

    #[test]
    fn saturation_is_a_closure(k in 0usize..5, pts in prop::collection::vec(prop::collection::vec(0i64..=3, 2), 1..4)) {
        let c = &catalog()[k];
        let pi: WeightSet = pts.iter().map(|p| weight_for(c, p)).collect();
        let s = saturate(c, &pi).unwrap();
        prop_assert!(pi.is_subset(&s));
        prop_assert_eq!(saturate(c, &s).unwrap(), s.clone());
        for l in &s {
            prop_assert!(l.is_dominant());
            prop_assert!(pi.iter().any(|m| dominance_leq(c, l, m)));
        }
    }

    #[test]
    fn gaussian_pascal(a in -8i64..=8, t in 1u32..=8, d in 1i64..=3) {
        let lhs = qbinom_d(a, t, d);
        let rhs = &(&LaurentPoly::v_pow(d * t as i64) * &qbinom_d(a - 1, t, d))
            + &(&LaurentPoly::v_pow(-d * (a - t as i64)) * &qbinom_d(a - 1, t - 1, d));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn q_integer_recursion(a in -6i64..=6, d in 1i64..=3) {
        let rhs = &(&LaurentPoly::v_pow(d) * &qint_d(a, d)) + &LaurentPoly::v_pow(-d * a);
        prop_assert_eq!(qint_d(a + 1, d), rhs);
    }

    #[test]
    fn bar_invariance(a in -8i64..=8, t in 0u32..=8, d in 1i64..=3) {
        prop_assert_eq!(qint_d(a, d).bar(), qint_d(a, d));
        let b = qbinom_d(a, t, d);
        prop_assert_eq!(b.bar(), b);
    }

    #[test]
    fn bar_is_an_involutive_ring_map(
        x in prop::collection::vec(-5i64..=5, 1..5),
        y in prop::collection::vec(-5i64..=5, 1..5),
        lx in -4i64..=4,
        ly in -4i64..=4,
    ) {
        let p = LaurentPoly::from_parts(lx, x.into_iter().map(Into::into).collect());
        let q = LaurentPoly::from_parts(ly, y.into_iter().map(Into::into).collect());
        prop_assert_eq!(p.bar().bar(), p.clone());
        prop_assert_eq!((&p * &q).bar(), &p.bar() * &q.bar());
        prop_assert_eq!((&p + &q).bar(), &p.bar() + &q.bar());
    }
}
