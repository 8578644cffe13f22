use proptest::prelude::*;

use cspoly::algebra::{
    dominance_leq, format_rat, int, parse_rat, partitions_up_to, rat, suffix_leq, IntVec, Partition,
    Poly, Rat, SymPoly,
};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

fn small_poly(nvars: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0u32..3, nvars), small_rat()), 0..5).prop_map(
        move |terms| {
            let mut p = Poly::zero(nvars);
            for (e, c) in terms {
                p.add_term(e, c);
            }
            p
        },
    )
}

fn intvec(len: usize) -> impl Strategy<Value = IntVec> {
    prop::collection::vec(-3i64..=4, len).prop_map(IntVec::new)
}

proptest! {
    #[test]
    fn rationals_round_trip_through_text(r in small_rat()) {
        prop_assert_eq!(parse_rat(&format_rat(&r)).unwrap(), r);
    }

    #[test]
    fn multiplication_is_commutative_and_distributive(
        a in small_poly(3), b in small_poly(3), c in small_poly(3)
    ) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn antisymmetrized_polynomials_divide_exactly(p in small_poly(3)) {
        let swapped = p.permute_vars(&[1, 0, 2]);
        let anti = &p - &swapped;
        let q = anti.div_by_difference(0, 1).unwrap();
        let diff = &Poly::var(3, 0) - &Poly::var(3, 1);
        prop_assert_eq!(&q * &diff, anti);
    }

    #[test]
    fn symmetrization_round_trips(p in small_poly(2)) {
        let sym = &p + &p.permute_vars(&[1, 0]);
        let s = SymPoly::from_poly(&sym).unwrap();
        prop_assert_eq!(s.expand(), sym);
    }

    #[test]
    fn suffix_order_is_a_partial_order(a in intvec(3), b in intvec(3), c in intvec(3)) {
        prop_assert!(suffix_leq(&a, &a).unwrap());
        if suffix_leq(&a, &b).unwrap() && suffix_leq(&b, &a).unwrap() {
            prop_assert_eq!(&a, &b);
        }
        if suffix_leq(&a, &b).unwrap() && suffix_leq(&b, &c).unwrap() {
            prop_assert!(suffix_leq(&a, &c).unwrap());
        }
    }

    #[test]
    fn evaluation_is_a_ring_map(a in small_poly(2), b in small_poly(2), x in small_rat(), y in small_rat()) {
        let pt = [x, y];
        let lhs = (&a * &b).evaluate(&pt).unwrap();
        prop_assert_eq!(lhs, a.evaluate(&pt).unwrap() * b.evaluate(&pt).unwrap());
    }
}

#[test]
fn dominance_and_suffix_orders_coincide_on_partitions_of_equal_weight() {
    // For partitions of the same weight, prefix bounds are equivalent to
    // reversed suffix bounds.
    let parts = partitions_up_to(6, 3);
    for a in &parts {
        for b in parts.iter().filter(|b| b.weight() == a.weight()) {
            let (av, bv) = (a.to_intvec(), b.to_intvec());
            assert_eq!(
                dominance_leq(&av, &bv).unwrap(),
                suffix_leq(&bv, &av).unwrap(),
                "{a} vs {b}"
            );
        }
    }
}

#[test]
fn partition_counts_match_known_values() {
    // p(n) restricted to at most 3 parts for n = 0..=6
    let expected = [1, 1, 2, 3, 4, 5, 7];
    for (w, &e) in expected.iter().enumerate() {
        assert_eq!(cspoly::algebra::partitions_of_weight(w as u32, 3).len(), e);
    }
    assert!(Partition::new(vec![1, 2]).is_err());
    assert_eq!(parse_rat(" -6/4 ").unwrap(), rat(-3, 2));
    assert!(parse_rat("1/0").is_err());
    assert_eq!(format_rat(&int(-7)), "-7");
}
