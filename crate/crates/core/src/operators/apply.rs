use crate::algebra::{int, Poly, SymPoly};
use crate::Result;

use super::model::{ModelSpec, Sign};

/// Applies the reduced operator of `model` to an arbitrary polynomial.
///
/// Each interaction term `α(z_j)∂_jP − α(z_k)∂_kP` is divided exactly by
/// `z_j − z_k`; a nonzero remainder (possible only for non-symmetric input)
/// is reported as an invariant violation.
pub fn apply_reduced_operator_poly(model: &ModelSpec, p: &Poly, sign: Sign) -> Result<Poly> {
    let n = model.nvars;
    assert_eq!(p.nvars(), n, "variable count mismatch");
    let [a2, a1, a0] = &model.alpha;
    let [b1, b0] = &model.beta;
    let zero = int(0);
    let alpha: Vec<Poly> = (0..n).map(|j| Poly::quadratic_in(n, j, a2, a1, a0)).collect();
    let grads: Vec<Poly> = (0..n).map(|j| p.derivative(j)).collect();
    let mut out = Poly::zero(n);
    for j in 0..n {
        let beta = Poly::quadratic_in(n, j, &zero, b1, b0);
        out = &out + &(&alpha[j] * &grads[j].derivative(j));
        out = &out + &(&beta * &grads[j]);
    }
    let two_kappa = &model.kappa * int(2);
    for j in 0..n {
        for k in j + 1..n {
            let q = &(&alpha[j] * &grads[j]) - &(&alpha[k] * &grads[k]);
            out = &out + &q.div_by_difference(j, k)?.scale(&two_kappa);
        }
    }
    Ok(out.scale(&sign.value()))
}

/// Applies the reduced operator of `model` to a symmetric polynomial and
/// collects the result in the monomial basis.
pub fn apply_reduced_operator(model: &ModelSpec, p: &SymPoly, sign: Sign) -> Result<SymPoly> {
    crate::Error::check_len(model.nvars, p.nvars())?;
    SymPoly::from_poly(&apply_reduced_operator_poly(model, &p.expand(), sign)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Partition, Rat};
    use crate::operators::Preset;
    use crate::Error;
    use proptest::prelude::*;

    fn m(parts: &[u32]) -> SymPoly {
        SymPoly::monomial(Partition::new(parts.to_vec()).unwrap(), int(1))
    }

    #[test]
    fn calogero_on_m20() {
        let k = rat(1, 3);
        let model = ModelSpec::calogero(2, k.clone());
        let got = apply_reduced_operator(&model, &m(&[2, 0]), Sign::Minus).unwrap();
        let expected = &m(&[2, 0]).scale(&int(4)) - &SymPoly::constant(2, int(4) + &k * int(4));
        assert_eq!(got, expected);
        let got = apply_reduced_operator(&model, &m(&[1, 1]), Sign::Minus).unwrap();
        let expected = &m(&[1, 1]).scale(&int(4)) + &SymPoly::constant(2, &k * int(2));
        assert_eq!(got, expected);
    }

    #[test]
    fn one_variable_hermite() {
        let model = ModelSpec::calogero(1, rat(7, 2));
        let p = &m(&[2]) - &SymPoly::constant(1, rat(1, 2));
        let got = apply_reduced_operator(&model, &p, Sign::Minus).unwrap();
        assert_eq!(got, p.scale(&int(4)));
    }

    #[test]
    fn constants_are_annihilated() {
        for preset in Preset::TABLE {
            let model = ModelSpec::preset(preset, 3, rat(1, 2), rat(1, 3), rat(2, 5)).unwrap();
            let got = apply_reduced_operator(&model, &SymPoly::one(3), Sign::Plus).unwrap();
            assert!(got.is_zero());
        }
    }

    #[test]
    fn asymmetric_input_is_an_invariant_violation() {
        let model = ModelSpec::calogero(2, int(1));
        let x1 = Poly::var(2, 0);
        assert!(matches!(
            apply_reduced_operator_poly(&model, &x1, Sign::Minus),
            Err(Error::Invariant(_))
        ));
    }

    fn small_sympoly() -> impl Strategy<Value = SymPoly> {
        prop::collection::vec((0u32..3, 0u32..3, 0u32..3, -4i64..5), 0..4).prop_map(|ts| {
            let mut p = SymPoly::zero(3);
            for (a, b, c, v) in ts {
                p.add_term(Partition::from_unsorted(vec![a, b, c]), int(v));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn operator_is_linear(p in small_sympoly(), q in small_sympoly(), a in -3i64..4, b in 1i64..4) {
            let model = ModelSpec::preset(Preset::Jacobi, 3, rat(1, 2), rat(1, 3), rat(2, 5)).unwrap();
            let (a, b): (Rat, Rat) = (int(a), rat(1, b));
            let lhs = apply_reduced_operator(&model, &(&p.scale(&a) + &q.scale(&b)), Sign::Plus).unwrap();
            let rhs = &apply_reduced_operator(&model, &p, Sign::Plus).unwrap().scale(&a)
                + &apply_reduced_operator(&model, &q, Sign::Plus).unwrap().scale(&b);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
