use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{dominance_leq, partitions_up_to, Partition, Rat, SymPoly};
use crate::operators::{apply_reduced_operator, ModelSpec, Sign};
use crate::{Error, Result};

/// Eigenvector found by back-substitution in the monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularSolution {
    pub poly: SymPoly,
    /// Lower monomials whose diagonal entry equals the target but which
    /// receive no coupling; their coefficient is fixed to zero.
    pub free: Vec<Partition>,
}

/// Solves `(H − E)P = 0` with `P = m_λ + Σ_{μ < λ} c_μ m_μ` over the
/// monomials dominated by `λ`.
///
/// Monomials are processed by decreasing weight and then decreasing
/// lexicographic order, a linear extension of dominance. A lower monomial
/// with diagonal entry `E` is a degeneracy: if nothing couples into it the
/// direction is recorded as free, otherwise the solve fails rather than
/// choosing silently.
pub fn monomial_triangular_solve(
    model: &ModelSpec,
    lam: &Partition,
    target: &Rat,
    sign: Sign,
) -> Result<TriangularSolution> {
    Error::check_len(model.nvars, lam.len())?;
    let lv = lam.to_intvec();
    let mut basis: Vec<Partition> = partitions_up_to(lam.weight(), model.nvars)
        .into_iter()
        .filter(|mu| dominance_leq(&mu.to_intvec(), &lv).unwrap_or(false))
        .collect();
    basis.sort_by(|a, b| (b.weight(), b.parts()).cmp(&(a.weight(), a.parts())));
    let position: BTreeMap<&Partition, usize> =
        basis.iter().enumerate().map(|(i, mu)| (mu, i)).collect();

    // images[i] = H m_{basis[i]}, checked to stay on or below the diagonal
    let mut images = Vec::with_capacity(basis.len());
    for (i, mu) in basis.iter().enumerate() {
        let img = apply_reduced_operator(model, &SymPoly::monomial(mu.clone(), Rat::one()), sign)?;
        for (nu, c) in img.terms() {
            match position.get(nu) {
                Some(&j) if j >= i => {}
                _ if c.is_zero() => {}
                _ => {
                    return Err(Error::Invariant(format!(
                        "operator image of m_{mu} leaves the triangular span at m_{nu}"
                    )))
                }
            }
        }
        images.push(img);
    }

    let lead = &basis[0];
    if lead != lam {
        return Err(Error::Invariant(format!("{lam} is not maximal in its span")));
    }
    let diag0 = images[0].coeff(lam);
    if &diag0 != target {
        return Err(Error::invalid(format!(
            "target eigenvalue {target} differs from the diagonal entry {diag0} of m_{lam}"
        )));
    }
    let mut coeffs = vec![Rat::zero(); basis.len()];
    coeffs[0] = Rat::one();
    let mut free = Vec::new();
    for i in 1..basis.len() {
        let mu = &basis[i];
        let rhs: Rat = (0..i).map(|j| images[j].coeff(mu) * &coeffs[j]).sum();
        let gap = target - images[i].coeff(mu);
        if gap.is_zero() {
            if rhs.is_zero() {
                free.push(mu.clone());
                continue;
            }
            return Err(Error::Degeneracy {
                at: mu.to_intvec(),
                eigenvalue: target.clone(),
            });
        }
        coeffs[i] = rhs / gap;
    }
    let poly = SymPoly::from_terms(model.nvars, basis.into_iter().zip(coeffs))?;
    Ok(TriangularSolution { poly, free })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn trivial_partition() {
        let model = ModelSpec::calogero(2, rat(1, 2));
        let s = monomial_triangular_solve(&model, &part(&[0, 0]), &int(0), Sign::Minus).unwrap();
        assert_eq!(s.poly, SymPoly::one(2));
    }

    #[test]
    fn one_variable_hermite() {
        let model = ModelSpec::calogero(1, rat(5, 3));
        let s = monomial_triangular_solve(&model, &part(&[2]), &int(4), Sign::Minus).unwrap();
        let expected = &SymPoly::monomial(part(&[2]), int(1)) - &SymPoly::constant(1, rat(1, 2));
        assert_eq!(s.poly, expected);
    }

    #[test]
    fn uncoupled_tie_is_free() {
        let k = rat(1, 3);
        let model = ModelSpec::calogero(2, k.clone());
        let s = monomial_triangular_solve(&model, &part(&[2, 0]), &int(4), Sign::Minus).unwrap();
        let expected = &SymPoly::monomial(part(&[2, 0]), int(1))
            - &SymPoly::constant(2, int(1) + &k);
        assert_eq!(s.poly, expected);
        assert_eq!(s.free, vec![part(&[1, 1])]);
    }

    #[test]
    fn coupled_tie_is_a_degeneracy() {
        // −∂² on one variable: x² and 1 both have diagonal 0 and are coupled
        let model = ModelSpec::custom(1, int(1), [int(0), int(0), int(1)], [int(0), int(0)]).unwrap();
        let err = monomial_triangular_solve(&model, &part(&[2]), &int(0), Sign::Minus).unwrap_err();
        assert!(matches!(err, Error::Degeneracy { .. }));
    }

    #[test]
    fn wrong_target_is_rejected() {
        let model = ModelSpec::calogero(1, int(1));
        assert!(monomial_triangular_solve(&model, &part(&[2]), &int(3), Sign::Minus).is_err());
    }
}
