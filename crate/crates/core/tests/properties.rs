mod common;

use chainorder::rational::{fmt_rational, parse_rational, ratio};
use chainorder::*;
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly(nvars: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0u32..4, nvars), -6i64..=6), 1..6).prop_filter_map("nonzero", move |ts| {
        let f = Poly::from_terms(nvars, ts.into_iter().map(|(e, c)| (e, BigInt::from(c))));
        (!f.is_zero()).then_some(f)
    })
}

fn order(n: usize) -> impl Strategy<Value = VarOrder> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle().prop_map(|p| VarOrder::new(p).unwrap())
}

fn points(dim: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, dim), 1..9)
}

fn mode() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::Low), Just(Mode::High)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn valuation_is_additive((f, g, ord) in (2usize..5).prop_flat_map(|n| (poly(n), poly(n), order(n))), m in mode()) {
        prop_assert_eq!(val(&(&f * &g), &ord, m).unwrap(), val(&f, &ord, m).unwrap().add(&val(&g, &ord, m).unwrap()));
    }

    #[test]
    fn valuation_is_ultrametric((f, g, ord) in (2usize..5).prop_flat_map(|n| (poly(n), poly(n), order(n))), m in mode()) {
        let s = &f + &g;
        prop_assume!(!s.is_zero());
        let lo = val(&f, &ord, m).unwrap().min(val(&g, &ord, m).unwrap());
        prop_assert!(val(&s, &ord, m).unwrap() >= lo);
    }

    #[test]
    fn quotient_valuation((f, g, ord) in (2usize..4).prop_flat_map(|n| (poly(n), poly(n), order(n)))) {
        let q = val_quotient(&(&f * &g), &g, &ord, Mode::Low).unwrap();
        prop_assert_eq!(q, low_val(&f, &ord).unwrap());
    }

    #[test]
    fn value_set_ignores_span_mixing(
        (span, ord) in (2usize..4).prop_flat_map(|n| (prop::collection::vec(poly(n), 1..5), order(n))),
        mix in prop::collection::vec((0usize..5, 0usize..5, -3i64..=3), 0..6),
        m in mode(),
    ) {
        let mut mixed = span.clone();
        for (i, j, c) in mix {
            let (i, j) = (i % mixed.len(), j % mixed.len());
            if i != j {
                mixed[i] = &mixed[i] + &mixed[j].scale(&BigInt::from(c));
            }
        }
        let vs = value_set(&span, &ord, m).unwrap();
        prop_assert_eq!(&vs, &value_set(&mixed, &ord, m).unwrap());
        prop_assert_eq!(vs.len(), poly::span_rank(&span));
    }

    #[test]
    fn hull_round_trip(pts in points(3)) {
        let v = hull_int(&pts, 3);
        if v.affine_dim() == 3 {
            prop_assert_eq!(&vertices(&v.hrep()).unwrap(), &v);
        }
        for p in v.vertices() {
            prop_assert!(pts.iter().any(|q| rational::from_ints(q) == *p));
        }
        let lp = v.lattice_points();
        for q in &pts {
            prop_assert!(lp.points.contains(q));
        }
    }

    #[test]
    fn minkowski_commutes_and_associates(a in points(2), b in points(2), c in points(2)) {
        let (pa, pb, pc) = (hull_int(&a, 2), hull_int(&b, 2), hull_int(&c, 2));
        let ab = minkowski(&pa, &pb).unwrap();
        prop_assert_eq!(&ab, &minkowski(&pb, &pa).unwrap());
        prop_assert_eq!(minkowski(&ab, &pc).unwrap(), minkowski(&pa, &minkowski(&pb, &pc).unwrap()).unwrap());
        let (la, lb) = (LatticePointSet::from_points(2, a), LatticePointSet::from_points(2, b));
        prop_assert_eq!(la.minkowski(&lb), lb.minkowski(&la));
    }

    #[test]
    fn unimodular_images_are_equivalent(pts in points(2), shear in -3i64..=3, shift in prop::collection::vec(-4i64..=4, 2)) {
        let p = hull_int(&pts, 2);
        let map = AffineUnimodularMap { matrix: vec![vec![1, shear], vec![0, 1]], shift };
        let q = map.image(&p);
        let found = unimodular_equiv(&p, &q).unwrap();
        prop_assert!(found.is_some());
        prop_assert_eq!(found.unwrap().image(&p), q);
    }

    #[test]
    fn rationals_round_trip(p in -50i64..50, q in 1i64..50) {
        let r = ratio(p, q);
        prop_assert_eq!(parse_rational(&fmt_rational(&r)).unwrap(), r);
    }
}

fn weight(n: usize) -> impl Strategy<Value = DominantWeight> {
    prop::collection::vec(0i64..=2, n).prop_map(|c| DominantWeight::new(TypeTag::A, c).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn transfer_is_a_bijection_onto_the_chain_order_points(
        (n, lambda, mask) in (1usize..=3).prop_flat_map(|n| (Just(n), weight(n), prop::collection::vec(any::<bool>(), n * (n + 1) / 2)))
    ) {
        let part = Partition::new(mask);
        let p = gt_poset(TypeTag::A, n, &lambda).unwrap();
        let target = mco_lattice_points(&p, &part).unwrap();
        let h = mco_hrep(&p, &part).unwrap();
        let images: std::collections::BTreeSet<Vec<i64>> = order_lattice_points(&p)
            .points
            .iter()
            .map(|x| poset::transfer_int(&p, &part, x).unwrap())
            .collect();
        for y in &images {
            prop_assert!(h.contains_int(y));
        }
        prop_assert_eq!(&images, &target.points);
        prop_assert_eq!(&target.points, &common::mco_points(&p, &part));
        prop_assert_eq!(target.len() as i64, common::weyl_dim(lambda.coords()));
    }
}
