mod common;

use common::analyze;
use curve_invariants::curves::random_generic_curve;
use curve_invariants::selftest::{perturb, IntegerSignature};
use curve_invariants::{IntPoly, Point2, PolygonalCurve, RealPoly};
use proptest::prelude::*;

fn random_curve(seed: u64, doubles: usize) -> PolygonalCurve {
    random_generic_curve(seed, doubles, 2000).unwrap().to_curve().unwrap()
}

fn map_curve(c: &PolygonalCurve, f: impl Fn(Point2) -> Point2) -> PolygonalCurve {
    PolygonalCurve::new(c.vertices.iter().map(|&p| f(p)).collect(), c.base_index).unwrap()
}

/// p(q) -> p(1/q)
fn invert(p: &IntPoly) -> IntPoly {
    IntPoly::from_terms(p.terms().map(|(e, c)| (-e, c)))
}

fn int_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec((-8i64..8, -5i64..5), 0..6).prop_map(IntPoly::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn similarity_preserves_invariants(seed in any::<u64>(), n in 0usize..7, angle in 0.1f64..6.0, scale in 0.2f64..5.0, dx in -10.0f64..10.0) {
        let c = random_curve(seed, n);
        let before = IntegerSignature::from(&analyze(&c).report);
        let (s, co) = angle.sin_cos();
        let moved = map_curve(&c, |p| Point2::new(scale * (co * p.x - s * p.y) + dx, scale * (s * p.x + co * p.y) - dx));
        prop_assert_eq!(IntegerSignature::from(&analyze(&moved).report), before);
    }

    #[test]
    fn mirror_negates_rotation_and_inverts_polynomials(seed in any::<u64>(), n in 0usize..7) {
        let c = random_curve(seed, n);
        let a = analyze(&c).report;
        let m = analyze(&map_curve(&c, |p| Point2::new(p.x, -p.y))).report;
        prop_assert_eq!(m.rot, -a.rot);
        prop_assert_eq!((m.j_minus, m.j_plus, m.st), (a.j_minus, a.j_plus, a.st));
        prop_assert_eq!(&m.p_q, &invert(&a.p_q));
    }

    #[test]
    fn reversal_relations(seed in any::<u64>(), n in 0usize..7) {
        let c = random_curve(seed, n);
        let a = analyze(&c).report;
        let r = analyze(&c.reversed()).report;
        prop_assert_eq!(r.rot, -a.rot);
        prop_assert_eq!((r.j_minus, r.j_plus, r.st, r.n_doubles), (a.j_minus, a.j_plus, a.st, a.n_doubles));
        prop_assert_eq!(&r.p_q, &invert(&a.p_q));
        prop_assert_eq!(&r.st_q, &-&invert(&a.st_q));
    }

    #[test]
    fn small_perturbations_are_invisible(seed in any::<u64>(), n in 0usize..7, k in any::<u64>()) {
        let c = random_curve(seed, n);
        let before = IntegerSignature::from(&analyze(&c).report);
        let after = IntegerSignature::from(&analyze(&perturb(&c, 1e-7, k).unwrap()).report);
        prop_assert_eq!(after, before);
    }

    #[test]
    fn weights_and_taylor_identities(seed in any::<u64>(), n in 0usize..7) {
        let a = analyze(&random_curve(seed, n));
        let r = &a.report;
        prop_assert_eq!(r.st_q.value_at_one(), a.weights.sum());
        prop_assert_eq!((r.rot - r.st_q.value_at_one()).abs(), 1);
        prop_assert_eq!(r.st_q.derivative_at_one_exact().unwrap(), r.st);
        prop_assert_eq!(r.tabachnikov[0], a.weights.sum());
        prop_assert!(r.all_checks_pass(), "{:?}", r.failed_checks());
    }
}

proptest! {
    #[test]
    fn polynomial_ring_laws(a in int_poly(), b in int_poly(), c in int_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in int_poly(), b in int_poly(), q in 0.5f64..2.0) {
        let lhs = (&a * &b).evaluate(q);
        let rhs = a.evaluate(q) * b.evaluate(q);
        prop_assert!((lhs - rhs).abs() <= 1e-9 * (1.0 + lhs.abs()));
    }

    #[test]
    fn half_sum_division_inverts_multiplication(a in int_poly()) {
        let half_sum = RealPoly::from_terms([(1, 1.0), (-1, 1.0)]);
        let product = &a.to_real() * &half_sum;
        let back = product.divide_by_half_sum(1e-9).unwrap();
        prop_assert!(back.max_abs_diff(&a.to_real()) < 1e-9);
    }

    #[test]
    fn serialization_round_trips(a in int_poly()) {
        let text = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<IntPoly>(&text).unwrap(), a);
    }
}
