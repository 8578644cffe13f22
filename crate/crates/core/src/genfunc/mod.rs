//! The modified-complete polynomials `g_λ`, the overcomplete family `f_n`,
//! the two-species family `f_{n,ñ}` and basis-transition matrices.
//!
//! `f_n` is produced by two independent routes: [`f_vector`] sums the finite
//! expansion of `f_n` over products of `g_λ`, while [`f_truncated_series`]
//! multiplies out the generating function as a truncated formal series and
//! reads off a coefficient.

mod deformed;
mod series;

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::linalg::{self, Matrix};
use crate::algebra::{
    gen_binomial, int, partitions_of_weight, partitions_up_to, suffix_order_key, IntVec,
    Partition, Poly, Rat, SymPoly,
};
use crate::{Error, Result};

pub use deformed::{deformed_f, DeformedIndex, DeformedPoly};

/// Coefficient of `t^d` in `∏_j (1 − x_j t)^{−κ}`.
pub fn g_row(d: u32, nvars: usize, kappa: &Rat) -> SymPoly {
    let mut out = SymPoly::zero(nvars);
    for lam in partitions_of_weight(d, nvars) {
        let c = lam.parts().iter().fold(Rat::one(), |acc, &part| {
            acc * gen_binomial(&(kappa + int(part as i64 - 1)), part)
        });
        out.add_term(lam, c);
    }
    out
}

/// `g_λ = ∏_i g_row(λ_i)`.
pub fn g_partition(lam: &Partition, kappa: &Rat) -> SymPoly {
    FBasis::new(lam.len(), kappa.clone()).g(lam)
}

/// `f_n` via its finite expansion in the `g_λ`.
pub fn f_vector(n: &IntVec, kappa: &Rat) -> SymPoly {
    FBasis::new(n.len(), kappa.clone()).f(n)
}

/// `f_n` by truncated expansion of its generating function (independent of
/// [`f_vector`]).
pub fn f_truncated_series(n: &IntVec, kappa: &Rat) -> Result<SymPoly> {
    let nv = n.len();
    let mut problem = series::SeriesProblem::new(nv, nv);
    let y = |k: usize| nv + k;
    for j in 0..nv {
        for k in j + 1..nv {
            problem.pair_factor(kappa.clone(), &[(y(j), 1), (y(k), -1)]);
        }
    }
    for j in 0..nv {
        for k in 0..nv {
            problem.small_factor(-kappa.clone(), j, y(k));
        }
    }
    let target: Vec<i64> = n.parts().iter().map(|v| -v).collect();
    let neg = n.parts().iter().copied().min().unwrap_or(0).min(0).unsigned_abs();
    let bound = n.weight().max(0) as u64 + nv as u64 * neg + series::SAFETY_MARGIN;
    let coeffs = problem.certified_coefficient(&target, bound as u32)?;
    let mut poly = Poly::zero(nv);
    for (e, c) in coeffs {
        poly.add_term(e, c);
    }
    SymPoly::from_poly(&poly)
}

/// Session cache for `g_row`, `g_λ` and `f_n` at fixed `(N, κ)`.
///
/// Entries are pure functions of their key, so concurrent fills are
/// idempotent and the cache contents do not depend on scheduling.
pub struct FBasis {
    nvars: usize,
    kappa: Rat,
    rows: RwLock<HashMap<u32, SymPoly>>,
    gs: RwLock<HashMap<Partition, SymPoly>>,
    fs: RwLock<HashMap<IntVec, SymPoly>>,
}

impl FBasis {
    pub fn new(nvars: usize, kappa: Rat) -> Self {
        FBasis {
            nvars,
            kappa,
            rows: RwLock::default(),
            gs: RwLock::default(),
            fs: RwLock::default(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn kappa(&self) -> &Rat {
        &self.kappa
    }

    pub fn g_row(&self, d: u32) -> SymPoly {
        if let Some(p) = self.rows.read().unwrap().get(&d) {
            return p.clone();
        }
        let p = g_row(d, self.nvars, &self.kappa);
        self.rows.write().unwrap().entry(d).or_insert(p).clone()
    }

    pub fn g(&self, lam: &Partition) -> SymPoly {
        assert_eq!(lam.len(), self.nvars, "partition length mismatch");
        if let Some(p) = self.gs.read().unwrap().get(lam) {
            return p.clone();
        }
        let mut acc = SymPoly::one(self.nvars);
        for &part in lam.parts().iter().filter(|&&v| v > 0) {
            acc = &acc * &self.g_row(part);
        }
        self.gs
            .write()
            .unwrap()
            .entry(lam.clone())
            .or_insert(acc)
            .clone()
    }

    /// Coefficients of `f_n` in the `g_λ`:
    /// `f_n = Σ_p ∏_{j<k} (−1)^{p_jk} binom(κ, p_jk) · g_{p(n + Σ p_jk(e_j − e_k))}`.
    ///
    /// The tuples `(p_jk)` are enumerated by depth-first search over `k`
    /// from the last index down. When pair `(j,k)` is chosen every `p_kl`
    /// with `l > k` is already fixed, so component `k` is final once its own
    /// pairs are assigned and can be required nonnegative on the spot; this
    /// bounds every `p_jk` and makes the enumeration finite.
    pub fn g_expansion_of_f(&self, n: &IntVec) -> BTreeMap<Partition, Rat> {
        assert_eq!(n.len(), self.nvars, "index length mismatch");
        let mut out = BTreeMap::new();
        if self.nvars == 0 {
            out.insert(Partition::zero(0), Rat::one());
            return out;
        }
        // signed binomials (−1)^p binom(κ, p), grown on demand
        let mut signed = vec![Rat::one()];
        let mut mu = n.parts().to_vec();
        self.walk(self.nvars - 1, 0, &mut mu, &Rat::one(), &mut signed, &mut out);
        out.retain(|_, c| !c.is_zero());
        out
    }

    fn walk(
        &self,
        k: usize,
        j: usize,
        mu: &mut Vec<i64>,
        coef: &Rat,
        signed: &mut Vec<Rat>,
        out: &mut BTreeMap<Partition, Rat>,
    ) {
        if k == 0 {
            if mu[0] >= 0 {
                let lam = Partition::from_unsorted(mu.iter().map(|&v| v as u32).collect());
                *out.entry(lam).or_insert_with(Rat::zero) += coef;
            }
            return;
        }
        if j == k {
            self.walk(k - 1, 0, mu, coef, signed, out);
            return;
        }
        if mu[k] < 0 {
            return;
        }
        let cap = mu[k] as usize;
        for p in 0..=cap {
            while signed.len() <= p {
                let q = signed.len() as u32;
                let s = if q.is_multiple_of(2) { Rat::one() } else { -Rat::one() };
                signed.push(s * gen_binomial(&self.kappa, q));
            }
            if signed[p].is_zero() {
                // binom(κ, p) vanishes for all larger p once it does
                break;
            }
            let c = coef * &signed[p];
            mu[j] += p as i64;
            mu[k] -= p as i64;
            self.walk(k, j + 1, mu, &c, signed, out);
            mu[j] -= p as i64;
            mu[k] += p as i64;
        }
    }

    /// `f_n` in the monomial basis (memoized).
    pub fn f(&self, n: &IntVec) -> SymPoly {
        if let Some(p) = self.fs.read().unwrap().get(n) {
            return p.clone();
        }
        let mut acc = SymPoly::zero(self.nvars);
        for (lam, c) in self.g_expansion_of_f(n) {
            acc = &acc + &self.g(&lam).scale(&c);
        }
        self.fs
            .write()
            .unwrap()
            .entry(n.clone())
            .or_insert(acc)
            .clone()
    }

    /// Writes a symmetric polynomial in the `g_λ` basis, degree by degree.
    pub fn to_g_basis(&self, p: &SymPoly) -> Result<BTreeMap<Partition, Rat>> {
        Error::check_len(self.nvars, p.nvars())?;
        let mut out = BTreeMap::new();
        let Some(top) = p.degree() else {
            return Ok(out);
        };
        for d in 0..=top {
            let part = p.homogeneous_part(d);
            if part.is_zero() {
                continue;
            }
            let basis = partitions_of_weight(d, self.nvars);
            // columns: g_μ expanded in m_ν; rows indexed by ν
            let gs: Vec<SymPoly> = basis.iter().map(|mu| self.g(mu)).collect();
            let a: Matrix = basis
                .iter()
                .map(|nu| gs.iter().map(|g| g.coeff(nu)).collect())
                .collect();
            let b: Vec<Rat> = basis.iter().map(|nu| part.coeff(nu)).collect();
            let x = linalg::solve(&a, &b).ok_or_else(|| {
                Error::Invariant(format!("g-basis of degree {d} is singular"))
            })?;
            for (mu, c) in basis.into_iter().zip(x) {
                if !c.is_zero() {
                    out.insert(mu, c);
                }
            }
        }
        Ok(out)
    }
}

/// A linear combination of `f_n`, keyed by (possibly non-partition) index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FExpansion {
    nvars: usize,
    terms: BTreeMap<IntVec, Rat>,
}

impl FExpansion {
    pub fn new(nvars: usize) -> Self {
        FExpansion {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, n: IntVec, c: Rat) {
        assert_eq!(n.len(), self.nvars, "index length mismatch");
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(n).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IntVec, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ c_n f_n` in the monomial basis.
    pub fn to_sympoly(&self, basis: &FBasis) -> SymPoly {
        let mut acc = SymPoly::zero(self.nvars);
        for (n, c) in &self.terms {
            acc = &acc + &basis.f(n).scale(c);
        }
        acc
    }
}

/// Rows `f_λ` in the monomial basis for all `|λ| ≤ maxweight`.
#[derive(Clone, Debug)]
pub struct TransitionMatrix {
    /// Row and column labels; grouped by weight, each group sorted along a
    /// linear extension of the suffix order.
    pub labels: Vec<Partition>,
    pub entries: Matrix,
}

impl TransitionMatrix {
    /// The square block for partitions of exactly `weight`.
    pub fn block(&self, weight: u32) -> Matrix {
        let idx: Vec<usize> = (0..self.labels.len())
            .filter(|&i| self.labels[i].weight() == weight)
            .collect();
        idx.iter()
            .map(|&r| idx.iter().map(|&c| self.entries[r][c].clone()).collect())
            .collect()
    }

    pub fn block_determinants(&self) -> Vec<(u32, Rat)> {
        let maxw = self.labels.iter().map(Partition::weight).max().unwrap_or(0);
        (0..=maxw)
            .map(|w| (w, linalg::determinant(&self.block(w))))
            .collect()
    }
}

/// Sorts partitions by weight, then along a linear extension of `⪯`.
pub fn suffix_sorted(mut labels: Vec<Partition>) -> Vec<Partition> {
    labels.sort_by_key(|p| (p.weight(), suffix_order_key(&p.to_intvec())));
    labels
}

pub fn f_to_m_matrix(maxweight: u32, nvars: usize, kappa: &Rat) -> TransitionMatrix {
    let basis = FBasis::new(nvars, kappa.clone());
    let labels = suffix_sorted(partitions_up_to(maxweight, nvars));
    let entries: Matrix = labels
        .par_iter()
        .map(|lam| {
            let f = basis.f(&lam.to_intvec());
            labels.iter().map(|mu| f.coeff(mu)).collect()
        })
        .collect();
    TransitionMatrix { labels, entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, suffix_leq};

    fn iv(p: &[i64]) -> IntVec {
        IntVec::new(p.to_vec())
    }

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    /// Complete homogeneous polynomial h_d by brute force over monomials.
    fn h(d: u32, n: usize) -> SymPoly {
        SymPoly::from_terms(n, partitions_of_weight(d, n).into_iter().map(|l| (l, int(1)))).unwrap()
    }

    #[test]
    fn g_row_examples() {
        let k = rat(2, 3);
        assert_eq!(g_row(0, 3, &k), SymPoly::one(3));
        assert_eq!(g_row(1, 2, &k), SymPoly::monomial(part(&[1, 0]), k.clone()));
        for d in 0..5 {
            assert_eq!(g_row(d, 3, &int(1)), h(d, 3));
        }
    }

    #[test]
    fn g_partition_examples() {
        let k = rat(1, 2);
        assert_eq!(g_partition(&part(&[0, 0]), &k), SymPoly::one(2));
        let g11 = g_partition(&part(&[1, 1]), &k);
        let k2 = &k * &k;
        let expected = &SymPoly::monomial(part(&[2, 0]), k2.clone())
            + &SymPoly::monomial(part(&[1, 1]), &k2 * int(2));
        assert_eq!(g11, expected);
        let g21 = g_partition(&part(&[2, 1, 0]), &int(1));
        assert_eq!(g21, &h(2, 3) * &h(1, 3));
    }

    #[test]
    fn f_vector_examples() {
        let k = rat(1, 3);
        assert_eq!(f_vector(&iv(&[0, 0, 0]), &k), SymPoly::one(3));
        // one variable: binom(κ+d−1, d) x^d
        let f3 = f_vector(&iv(&[3]), &k);
        assert_eq!(f3, SymPoly::monomial(part(&[3]), gen_binomial(&(&k + int(2)), 3)));
        // f_(−1,1) = −κ
        assert_eq!(f_vector(&iv(&[-1, 1]), &k), SymPoly::constant(2, -k.clone()));
        // κ = 1: f_(1,1) = m_(1,1), f_(2,0) = m_(2,0) + m_(1,1)
        assert_eq!(f_vector(&iv(&[1, 1]), &int(1)), SymPoly::monomial(part(&[1, 1]), int(1)));
        assert_eq!(
            f_vector(&iv(&[2, 0]), &int(1)),
            &SymPoly::monomial(part(&[2, 0]), int(1)) + &SymPoly::monomial(part(&[1, 1]), int(1))
        );
        // no admissible tuple
        assert!(f_vector(&iv(&[1, -1]), &k).is_zero());
    }

    #[test]
    fn truncated_series_examples() {
        let k = rat(1, 2);
        assert_eq!(f_truncated_series(&iv(&[0, 0]), &k).unwrap(), SymPoly::one(2));
        assert!(f_truncated_series(&iv(&[2, -1]), &k).unwrap().is_zero());
        assert_eq!(
            f_truncated_series(&iv(&[-1, 1]), &k).unwrap(),
            SymPoly::constant(2, -k.clone())
        );
        assert_eq!(
            f_truncated_series(&iv(&[1, 1]), &int(1)).unwrap(),
            SymPoly::monomial(part(&[1, 1]), int(1))
        );
    }

    #[test]
    fn routes_agree_on_small_grid() {
        for k in [rat(1, 2), int(2)] {
            for a in -2..=2 {
                for b in -2..=2 {
                    let n = iv(&[a, b]);
                    assert_eq!(f_vector(&n, &k), f_truncated_series(&n, &k).unwrap(), "n={n}");
                }
            }
        }
    }

    #[test]
    fn f_minus_g_is_suffix_lower() {
        let k = rat(1, 3);
        let basis = FBasis::new(3, k);
        for lam in partitions_up_to(4, 3) {
            let exp = basis.to_g_basis(&basis.f(&lam.to_intvec())).unwrap();
            assert_eq!(exp.get(&lam), Some(&int(1)));
            for mu in exp.keys().filter(|&mu| mu != &lam) {
                assert!(suffix_leq(&mu.to_intvec(), &lam.to_intvec()).unwrap());
            }
        }
    }

    #[test]
    fn transition_blocks() {
        let t = f_to_m_matrix(2, 2, &int(1));
        assert_eq!(t.block(0), vec![vec![int(1)]]);
        // labels of weight 2 in suffix order: (2,0) ⪯ (1,1)
        let w2: Vec<_> = t.labels.iter().filter(|l| l.weight() == 2).cloned().collect();
        assert_eq!(w2, vec![part(&[2, 0]), part(&[1, 1])]);
        assert_eq!(t.block(2), vec![vec![int(1), int(1)], vec![int(0), int(1)]]);
        assert!(t.block_determinants().iter().all(|(_, d)| !d.is_zero()));
    }

    #[test]
    fn cache_is_consistent() {
        let basis = FBasis::new(2, rat(1, 2));
        let a = basis.f(&iv(&[2, 1]));
        let b = basis.f(&iv(&[2, 1]));
        assert_eq!(a, b);
        assert_eq!(a, f_vector(&iv(&[2, 1]), &rat(1, 2)));
    }
}
