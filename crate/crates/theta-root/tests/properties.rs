//! Property tests for the series algebra: ring axioms at fixed order,
//! inverse laws, truncation consistency, and serialization round trips.

use num_bigint::BigInt;
use proptest::prelude::*;

use theta_root::{QSeries, Ring, Series, TPoly, TQSeries, XQSeries};

fn coeffs(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-6i64..=6, len)
}

/// Three integer series sharing one truncation order.
fn qseries_triple() -> impl Strategy<Value = (QSeries, QSeries, QSeries)> {
    (0usize..=12).prop_flat_map(|order| {
        (coeffs(order + 1), coeffs(order + 1), coeffs(order + 1)).prop_map(|(a, b, c)| {
            (
                QSeries::from_ints(&a),
                QSeries::from_ints(&b),
                QSeries::from_ints(&c),
            )
        })
    })
}

/// A series whose constant term is a unit, so it is invertible.
fn unit_qseries() -> impl Strategy<Value = QSeries> {
    (0usize..=12, any::<bool>()).prop_flat_map(|(order, negate)| {
        coeffs(order).prop_map(move |tail| {
            let mut cs = vec![if negate { -1 } else { 1 }];
            cs.extend(tail);
            QSeries::from_ints(&cs)
        })
    })
}

fn tpoly() -> impl Strategy<Value = TPoly> {
    prop::collection::vec(-4i64..=4, 0..4)
        .prop_map(|cs| TPoly::new(cs.into_iter().map(BigInt::from).collect()))
}

fn tqseries_pair() -> impl Strategy<Value = (TQSeries, TQSeries)> {
    (0usize..=6).prop_flat_map(|order| {
        (
            prop::collection::vec(tpoly(), order + 1),
            prop::collection::vec(tpoly(), order + 1),
        )
            .prop_map(|(a, b)| (Series::from_coeffs(a), Series::from_coeffs(b)))
    })
}

fn xqseries_pair() -> impl Strategy<Value = (XQSeries, XQSeries)> {
    (0usize..=3, 0usize..=3).prop_flat_map(|(xo, qo)| {
        let n = (xo + 1) * (qo + 1);
        (coeffs(n), coeffs(n)).prop_map(move |(a, b)| {
            let build = |cs: &[i64]| {
                let mut s = XQSeries::zero(xo, qo);
                let mut it = cs.iter();
                for m in 0..=xo {
                    for k in 0..=qo {
                        s.set(m, k, BigInt::from(*it.next().unwrap()));
                    }
                }
                s
            };
            (build(&a), build(&b))
        })
    })
}

proptest! {
    #[test]
    fn ring_axioms_at_fixed_order((a, b, c) in qseries_triple()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn reciprocal_is_two_sided_inverse(a in unit_qseries()) {
        let r = a.reciprocal().unwrap();
        let one = QSeries::one(a.order());
        prop_assert_eq!(a.mul(&r), one.clone());
        prop_assert_eq!(r.mul(&a), one);
    }

    #[test]
    fn pochhammer_times_its_reciprocal_is_one(
        tail in coeffs(8),
        n in 0usize..5,
    ) {
        // zero constant term keeps every factor invertible
        let mut cs = vec![0];
        cs.extend(tail);
        let t0 = QSeries::from_ints(&cs);
        let order = t0.order();
        let p = QSeries::pochhammer(&t0, n, order);
        let r = p.reciprocal().unwrap();
        prop_assert_eq!(p.mul(&r), QSeries::one(order));
    }

    #[test]
    fn truncation_commutes_with_arithmetic((a, b, _) in qseries_triple(), m in 0usize..=12) {
        let m = m.min(a.order());
        prop_assert_eq!(a.add(&b).truncated(m), a.truncated(m).add(&b.truncated(m)));
        prop_assert_eq!(a.mul(&b).truncated(m), a.truncated(m).mul(&b.truncated(m)));
    }

    #[test]
    fn truncation_commutes_with_reciprocal(a in unit_qseries(), m in 0usize..=12) {
        let m = m.min(a.order());
        prop_assert_eq!(
            a.reciprocal().unwrap().truncated(m),
            a.truncated(m).reciprocal().unwrap()
        );
    }

    #[test]
    fn truncation_commutes_with_pochhammer(tail in coeffs(8), n in 0usize..5, m in 0usize..=8) {
        let mut cs = vec![0];
        cs.extend(tail);
        let t0 = QSeries::from_ints(&cs);
        let m = m.min(t0.order());
        prop_assert_eq!(
            QSeries::pochhammer(&t0, n, t0.order()).truncated(m),
            QSeries::pochhammer(&t0, n, m)
        );
    }

    #[test]
    fn qseries_json_round_trip((a, _, _) in qseries_triple()) {
        prop_assert_eq!(QSeries::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn eval_t_one_is_a_ring_homomorphism((a, b) in tqseries_pair()) {
        prop_assert_eq!(a.add(&b).eval_t_one(), a.eval_t_one().add(&b.eval_t_one()));
        prop_assert_eq!(a.mul(&b).eval_t_one(), a.eval_t_one().mul(&b.eval_t_one()));
    }

    #[test]
    fn tqseries_json_round_trip((a, _) in tqseries_pair()) {
        prop_assert_eq!(TQSeries::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn tpoly_ring_axioms(a in tpoly(), b in tpoly(), c in tpoly()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&Ring::add(&b, &c)), Ring::add(&a.mul(&b), &a.mul(&c)));
    }

    #[test]
    fn xqseries_ring_axioms((a, b) in xqseries_pair()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn xqseries_reciprocal_inverse((a, _) in xqseries_pair()) {
        // force a unit constant coefficient
        let mut a = a;
        a.set(0, 0, BigInt::from(1));
        let r = a.reciprocal().unwrap();
        prop_assert_eq!(a.mul(&r), XQSeries::one(a.x_order(), a.q_order()));
    }
}
