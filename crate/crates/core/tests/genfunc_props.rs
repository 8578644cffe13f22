use num_traits::Zero;
use proptest::prelude::*;

use cspoly::algebra::{int, partitions_up_to, rat, suffix_leq, IntVec, Rat, SymPoly};
use cspoly::genfunc::{f_truncated_series, f_vector, g_partition, FBasis, FExpansion};
use cspoly::operators::lemma_action_check;

fn kappa() -> impl Strategy<Value = Rat> {
    (1i64..=7, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

fn index(len: usize) -> impl Strategy<Value = IntVec> {
    prop::collection::vec(-2i64..=3, len).prop_map(IntVec::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn f_routes_agree_for_random_kappa(n in (1usize..=3).prop_flat_map(index), k in kappa()) {
        prop_assert_eq!(f_vector(&n, &k), f_truncated_series(&n, &k).unwrap());
    }

    #[test]
    fn action_formula_for_random_kappa(n in (1usize..=2).prop_flat_map(index), k in kappa()) {
        let rep = lemma_action_check(&n, n.len(), &k).unwrap();
        prop_assert!(rep.holds, "residual {:?}", rep.residual);
    }

    #[test]
    fn f_expansion_is_linear(k in kappa(), a in -3i64..=3, b in -3i64..=3) {
        let basis = FBasis::new(2, k.clone());
        let (n1, n2) = (IntVec::new(vec![2, 1]), IntVec::new(vec![0, 2]));
        let mut e = FExpansion::new(2);
        e.add_term(n1.clone(), int(a));
        e.add_term(n2.clone(), int(b));
        let direct = &basis.f(&n1).scale(&int(a)) + &basis.f(&n2).scale(&int(b));
        prop_assert_eq!(e.to_sympoly(&basis), direct);
    }
}

#[test]
fn f_is_g_plus_suffix_lower_terms() {
    for k in [rat(1, 3), int(2)] {
        let basis = FBasis::new(3, k.clone());
        for lam in partitions_up_to(4, 3) {
            let lv = lam.to_intvec();
            let g = basis.to_g_basis(&basis.f(&lv)).unwrap();
            assert_eq!(g.get(&lam), Some(&int(1)), "κ={k} λ={lam}");
            for mu in g.keys().filter(|mu| **mu != lam) {
                assert!(suffix_leq(&mu.to_intvec(), &lv).unwrap(), "κ={k} λ={lam} μ={mu}");
            }
        }
    }
}

#[test]
fn f_of_one_variable_is_a_power() {
    // The numerator is empty, so f_(n) is g_n = binom(κ+n−1, n)·x^n.
    let k = rat(3, 4);
    let mut expected = int(1);
    for n in 0..6i64 {
        let f = f_vector(&IntVec::new(vec![n]), &k);
        let lam = cspoly::algebra::Partition::new(vec![n as u32]).unwrap();
        assert_eq!(f, SymPoly::monomial(lam.clone(), expected.clone()));
        assert_eq!(f, g_partition(&lam, &k));
        expected = expected * (&k + int(n)) / int(n + 1);
    }
    assert!(f_vector(&IntVec::new(vec![-1]), &k).is_zero());
    assert!(!expected.is_zero());
}
