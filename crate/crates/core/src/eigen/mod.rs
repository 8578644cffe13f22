//! Coefficient tables `u_n(m)`, assembled eigenfunctions `P_n` and the
//! checks that certify them.

mod harness;
mod moves;
mod solve;
mod table;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::linalg::{self, Matrix};
use crate::algebra::{partitions_up_to, suffix_leq, IntVec, Partition, Rat, SymPoly};
use crate::genfunc::{suffix_sorted, FBasis, FExpansion};
use crate::operators::{
    apply_reduced_operator, eigenvalue_calogero, eigenvalue_with, CoefficientScheme, ModelSpec,
    Sign,
};
use crate::{Error, Result};

pub use harness::{convention_harness, Convention, HarnessEntry, HarnessReport};
pub use moves::{g_move_coeff_calogero, g_move_coeff_general, g_move_coeff_with, Move, Scheme};
pub use solve::{monomial_triangular_solve, TriangularSolution};
pub use table::{
    u_coeffs, u_coeffs_calogero, u_coeffs_calogero_closed, u_coeffs_general,
    u_coeffs_general_closed, u_coeffs_general_with, CoeffTable,
};

/// A reduced eigenfunction `P_n` with its `f`-expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenResult {
    pub index: IntVec,
    pub eigenvalue: Rat,
    pub f_expansion: FExpansion,
    pub poly: SymPoly,
}

/// Eigenvalue predicted by `scheme` under the `Sign::Minus` convention.
pub fn scheme_eigenvalue(model: &ModelSpec, n: &IntVec, scheme: Scheme) -> Rat {
    match scheme {
        Scheme::Calogero => eigenvalue_calogero(n),
        Scheme::General(s) => eigenvalue_with(model, n, s),
    }
}

/// `P_n = Σ_m u_n(m) f_m` with the eigenvalue `2|n|`.
pub fn assemble_p(n: &IntVec, table: &CoeffTable, kappa: &Rat) -> Result<EigenResult> {
    let basis = FBasis::new(n.len(), kappa.clone());
    assemble_with(table, &basis, eigenvalue_calogero(n))
}

/// `P_n = Σ_m u_n(m) f_m` expanded through a shared `f` cache.
pub fn assemble_with(table: &CoeffTable, basis: &FBasis, eigenvalue: Rat) -> Result<EigenResult> {
    Error::check_len(basis.nvars(), table.root.len())?;
    let mut f_expansion = FExpansion::new(basis.nvars());
    for (m, c) in &table.entries {
        f_expansion.add_term(m.clone(), c.clone());
    }
    let poly = f_expansion.to_sympoly(basis);
    Ok(EigenResult {
        index: table.root.clone(),
        eigenvalue,
        f_expansion,
        poly,
    })
}

/// Builds `P_n` for `model` under `scheme`.
pub fn eigenfunction(
    model: &ModelSpec,
    n: &IntVec,
    scheme: Scheme,
    basis: &FBasis,
) -> Result<EigenResult> {
    let table = u_coeffs(model, n, scheme)?;
    assemble_with(&table, basis, scheme_eigenvalue(model, n, scheme))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenReport {
    pub is_eigenvector: bool,
    pub recovered_eigenvalue: Option<Rat>,
    pub matches_formula: bool,
}

/// Applies the model operator with `sign` to `result.poly` and checks that
/// the image is `result.eigenvalue · poly` (the eigenvalue is expected in
/// the same sign convention).
pub fn oracle_eigen_check(model: &ModelSpec, result: &EigenResult, sign: Sign) -> Result<EigenReport> {
    if result.poly.is_zero() {
        return Err(Error::invalid("cannot certify the zero polynomial"));
    }
    let image = apply_reduced_operator(model, &result.poly, sign)?;
    let recovered = if image.is_zero() {
        Some(Rat::zero())
    } else {
        result.poly.ratio_to(&image)
    };
    Ok(EigenReport {
        is_eigenvector: recovered.is_some(),
        matches_formula: recovered.as_ref() == Some(&result.eigenvalue),
        recovered_eigenvalue: recovered,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletenessReport {
    pub labels: Vec<Partition>,
    pub rank: usize,
    pub determinant: Rat,
    /// Full rank of the `P_λ → m_μ` matrix.
    pub invertible: bool,
    /// Every `P_λ` is `g_λ` plus `g_μ` with `μ ≺ λ`.
    pub unitriangular_in_g: bool,
}

/// Checks that `{P_λ : |λ| ≤ maxweight}` is a basis of the symmetric
/// polynomials of degree at most `maxweight`.
pub fn completeness_check(
    model: &ModelSpec,
    maxweight: u32,
    scheme: Scheme,
) -> Result<CompletenessReport> {
    let basis = FBasis::new(model.nvars, model.kappa.clone());
    let labels = suffix_sorted(partitions_up_to(maxweight, model.nvars));
    let results: Vec<EigenResult> = labels
        .par_iter()
        .map(|lam| eigenfunction(model, &lam.to_intvec(), scheme, &basis))
        .collect::<Result<_>>()?;
    let matrix: Matrix = results
        .iter()
        .map(|r| labels.iter().map(|mu| r.poly.coeff(mu)).collect())
        .collect();
    let rank = linalg::rank(&matrix);
    let determinant = linalg::determinant(&matrix);
    let mut unitriangular = true;
    for (lam, r) in labels.iter().zip(&results) {
        let g = basis.to_g_basis(&r.poly)?;
        let lv = lam.to_intvec();
        let lead_ok = g.get(lam).is_some_and(One::is_one);
        let rest_ok = g
            .keys()
            .filter(|mu| *mu != lam)
            .all(|mu| suffix_leq(&mu.to_intvec(), &lv).unwrap_or(false));
        unitriangular &= lead_ok && rest_ok;
    }
    Ok(CompletenessReport {
        invertible: rank == labels.len() && !determinant.is_zero(),
        labels,
        rank,
        determinant,
        unitriangular_in_g: unitriangular,
    })
}

/// The derived general scheme, the default for non-Calogero models.
pub const DEFAULT_SCHEME: Scheme = Scheme::General(CoefficientScheme::Derived);
