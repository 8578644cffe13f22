use num_traits::Zero;

use super::series::{SeriesProblem, SAFETY_MARGIN};
use crate::algebra::{int, IntVec, Poly, Rat};
use crate::{Error, Result};

/// Index `(n, ñ)` of a two-species polynomial `f_{n,ñ}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DeformedIndex {
    pub n: IntVec,
    pub ntilde: IntVec,
}

impl DeformedIndex {
    pub fn new(n: IntVec, ntilde: IntVec) -> Self {
        DeformedIndex { n, ntilde }
    }
}

/// A polynomial in `x_1..x_N, x̃_1..x̃_Ñ`; exponent vectors list the `x`
/// block first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformedPoly {
    pub n: usize,
    pub ntilde: usize,
    pub poly: Poly,
}

impl DeformedPoly {
    /// Symmetric in `x` and separately in `x̃`.
    pub fn is_bisymmetric(&self) -> bool {
        let total = self.n + self.ntilde;
        let swaps = (0..self.n.saturating_sub(1))
            .chain((self.n..total.saturating_sub(1)).filter(|&i| i + 1 < total));
        swaps.into_iter().all(|i| {
            let mut perm: Vec<usize> = (0..total).collect();
            perm.swap(i, i + 1);
            self.poly.permute_vars(&perm) == self.poly
        })
    }

    pub fn is_homogeneous_of(&self, degree: i64) -> bool {
        self.poly
            .terms()
            .all(|(e, _)| e.iter().map(|&v| v as i64).sum::<i64>() == degree)
    }
}

/// Coefficient of `y^{−n} ỹ^{−ñ}` in
/// `∏_{j<k}(1−y_j/y_k)^κ ∏_{J<K}(1−ỹ_J/ỹ_K)^{1/κ} ∏_{j,K}(1−x_j/ỹ_K) ∏_{J,k}(1−x̃_J/y_k)
///  / [∏_{j,K}(1−y_j/ỹ_K) ∏_{j,k}(1−x_j/y_k)^κ ∏_{J,K}(1−x̃_J/ỹ_K)^{1/κ}]`,
/// expanded for `|ỹ_Ñ| > ⋯ > |ỹ_1| > |y_N| > ⋯ > |y_1| > max(|x_j|, |x̃_J|)`.
pub fn deformed_f(
    idx: &DeformedIndex,
    nvars: usize,
    nvars_tilde: usize,
    kappa: &Rat,
) -> Result<DeformedPoly> {
    if kappa.is_zero() {
        return Err(Error::invalid("kappa must be nonzero for the deformed model"));
    }
    Error::check_len(nvars, idx.n.len())?;
    Error::check_len(nvars_tilde, idx.ntilde.len())?;
    let (n, nt) = (nvars, nvars_tilde);
    let small = n + nt;
    let x = |j: usize| j;
    let xt = |j: usize| n + j;
    let y = |k: usize| small + k;
    let yt = |k: usize| small + n + k;
    let inv = kappa.recip();

    let mut problem = SeriesProblem::new(small, n + nt);
    for j in 0..n {
        for k in j + 1..n {
            problem.pair_factor(kappa.clone(), &[(y(j), 1), (y(k), -1)]);
        }
    }
    for j in 0..nt {
        for k in j + 1..nt {
            problem.pair_factor(inv.clone(), &[(yt(j), 1), (yt(k), -1)]);
        }
    }
    for j in 0..n {
        for k in 0..nt {
            problem.pair_factor(int(-1), &[(y(j), 1), (yt(k), -1)]);
        }
    }
    for j in 0..n {
        for k in 0..nt {
            problem.small_factor(int(1), x(j), yt(k));
        }
    }
    for j in 0..nt {
        for k in 0..n {
            problem.small_factor(int(1), xt(j), y(k));
        }
    }
    for j in 0..n {
        for k in 0..n {
            problem.small_factor(-kappa.clone(), x(j), y(k));
        }
    }
    for j in 0..nt {
        for k in 0..nt {
            problem.small_factor(-inv.clone(), xt(j), yt(k));
        }
    }

    let all: Vec<i64> = idx.n.parts().iter().chain(idx.ntilde.parts()).copied().collect();
    let target: Vec<i64> = all.iter().map(|v| -v).collect();
    let total: i64 = all.iter().sum();
    let neg = all.iter().copied().min().unwrap_or(0).min(0).unsigned_abs();
    let bound = total.max(0) as u64 + (n + nt) as u64 * neg + SAFETY_MARGIN;
    let mut poly = Poly::zero(small);
    for (e, c) in problem.certified_coefficient(&target, bound as u32)? {
        poly.add_term(e, c);
    }
    Ok(DeformedPoly {
        n,
        ntilde: nt,
        poly,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn idx(n: &[i64], nt: &[i64]) -> DeformedIndex {
        DeformedIndex::new(IntVec::new(n.to_vec()), IntVec::new(nt.to_vec()))
    }

    #[test]
    fn constant_term() {
        let p = deformed_f(&idx(&[0, 0], &[0]), 2, 1, &rat(1, 2)).unwrap();
        assert_eq!(p.poly, Poly::one(3));
    }

    #[test]
    fn first_order_one_each() {
        for k in [rat(1, 2), int(1), int(2)] {
            let p = deformed_f(&idx(&[1], &[0]), 1, 1, &k).unwrap();
            let mut expected = Poly::zero(2);
            expected.add_term(vec![1, 0], k.clone());
            expected.add_term(vec![0, 1], int(-1));
            assert_eq!(p.poly, expected);
        }
    }

    #[test]
    fn zero_kappa_is_rejected() {
        assert!(matches!(
            deformed_f(&idx(&[1], &[0]), 1, 1, &int(0)),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn bisymmetric_and_homogeneous() {
        let p = deformed_f(&idx(&[1, 1], &[1]), 2, 1, &rat(1, 3)).unwrap();
        assert!(p.is_bisymmetric());
        assert!(p.is_homogeneous_of(3));
        assert!(!p.poly.is_zero());
    }
}
