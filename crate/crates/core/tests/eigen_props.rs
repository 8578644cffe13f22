use proptest::prelude::*;

use cspoly::algebra::{int, partitions_up_to, rat, IntVec, Partition, Rat, SymPoly};
use cspoly::eigen::{
    assemble_p, eigenfunction, monomial_triangular_solve, oracle_eigen_check, u_coeffs,
    u_coeffs_calogero, u_coeffs_calogero_closed, u_coeffs_general_closed, Scheme, DEFAULT_SCHEME,
};
use cspoly::genfunc::FBasis;
use cspoly::operators::{eigenvalue_with, CoefficientScheme, ModelSpec, Sign};
use cspoly::Error;

fn kappa() -> impl Strategy<Value = Rat> {
    (1i64..=9, 1i64..=7).prop_map(|(n, d)| rat(n, d))
}

fn partition2(maxw: u32) -> impl Strategy<Value = Partition> {
    let all = partitions_up_to(maxw, 2);
    prop::sample::select(all)
}

fn param() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn calogero_eigenfunctions_for_random_kappa(k in kappa(), lam in partition2(5)) {
        let n = lam.to_intvec();
        let model = ModelSpec::calogero(2, k.clone());
        let p = assemble_p(&n, &u_coeffs_calogero(&n, 2, &k).unwrap(), &k).unwrap();
        let rep = oracle_eigen_check(&model, &p, Sign::Minus).unwrap();
        prop_assert!(rep.matches_formula, "{:?}", rep);
    }

    #[test]
    fn closed_form_agrees_for_random_kappa(k in kappa(), lam in partition2(5)) {
        let n = lam.to_intvec();
        prop_assert_eq!(
            u_coeffs_calogero(&n, 2, &k).unwrap(),
            u_coeffs_calogero_closed(&n, 2, &k).unwrap()
        );
    }

    /// Random second-order models: whenever the recursion is free of
    /// resonances, the result is an eigenvector with the derived eigenvalue.
    #[test]
    fn derived_scheme_for_random_models(
        k in kappa(),
        a2 in param(), a1 in param(), a0 in param(), b1 in param(), b0 in param(),
        lam in partition2(3),
    ) {
        let model = ModelSpec::custom(2, k.clone(), [a2, a1, a0], [b1, b0]).unwrap();
        let n = lam.to_intvec();
        let basis = FBasis::new(2, k);
        match eigenfunction(&model, &n, DEFAULT_SCHEME, &basis) {
            Err(Error::Resonance { .. }) => {}
            Err(e) => prop_assert!(false, "unexpected error {e}"),
            Ok(p) => {
                if p.poly.is_zero() {
                    return Ok(());
                }
                let rep = oracle_eigen_check(&model, &p, Sign::Minus).unwrap();
                prop_assert!(rep.is_eigenvector, "{}", lam);
                prop_assert_eq!(
                    rep.recovered_eigenvalue,
                    Some(eigenvalue_with(&model, &n, CoefficientScheme::Derived))
                );
                let closed = u_coeffs_general_closed(&model, &n, CoefficientScheme::Derived).unwrap();
                prop_assert_eq!(closed, u_coeffs(&model, &n, DEFAULT_SCHEME).unwrap());
            }
        }
    }
}

#[test]
fn triangular_solve_matches_assembly_in_one_variable() {
    let k = rat(2, 3);
    let model = ModelSpec::calogero(1, k.clone());
    for d in 0..7u32 {
        let lam = Partition::new(vec![d]).unwrap();
        let n = lam.to_intvec();
        let p = assemble_p(&n, &u_coeffs_calogero(&n, 1, &k).unwrap(), &k).unwrap();
        let s = monomial_triangular_solve(&model, &lam, &int(2 * d as i64), Sign::Minus).unwrap();
        assert!(s.free.is_empty());
        let lead = p.poly.coeff(&lam);
        assert_eq!(s.poly, p.poly.scale(&lead.recip()));
    }
}

#[test]
fn hermite_preset_reproduces_the_calogero_tables() {
    let k = rat(5, 2);
    let model = ModelSpec::calogero(3, k.clone());
    for lam in partitions_up_to(4, 3) {
        let n = lam.to_intvec();
        assert_eq!(
            u_coeffs(&model, &n, Scheme::General(CoefficientScheme::Derived)).unwrap(),
            u_coeffs_calogero(&n, 3, &k).unwrap(),
            "{lam}"
        );
    }
}

#[test]
fn ground_state_is_constant() {
    for nv in 1..=3 {
        let k = rat(1, 2);
        let n = IntVec::zeros(nv);
        let p = assemble_p(&n, &u_coeffs_calogero(&n, nv, &k).unwrap(), &k).unwrap();
        assert_eq!(p.poly, SymPoly::one(nv));
        assert_eq!(p.eigenvalue, int(0));
    }
}
