//! Truncated multivariate Laurent series, enough to expand products of
//! generalized binomial factors `(1 − z)^e` in a region where every `z` is
//! small.
//!
//! Variables split into "small" ones (`x`) and "big" ones (`y`), the big ones
//! listed in increasing magnitude. The big variable in position `i` (from 1)
//! carries grading weight `i`; a monomial's weight is `−Σ_i i·e_i`. Every
//! ratio that appears (`y_j/y_k` with `j < k`, `x_j/y_k`) has positive
//! weight, so truncating at weight `T` is a valid graded truncation and is
//! exact for any target coefficient of weight at most `T`.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::algebra::{gen_binomial, Rat};
use crate::{Error, Result};

/// Extra order added on top of the a priori truncation bound.
pub(crate) const SAFETY_MARGIN: u64 = 2;

/// How many further `+2` steps certification may take before giving up.
const MAX_CERTIFY_STEPS: u32 = 8;

struct Factor {
    exponent: Rat,
    shift: Vec<(usize, i64)>,
}

pub(crate) struct SeriesProblem {
    nsmall: usize,
    nbig: usize,
    pairs: Vec<Factor>,
    smalls: Vec<Factor>,
}

type Series = HashMap<Vec<i64>, Rat>;

impl SeriesProblem {
    /// Variables `0..nsmall` are small, `nsmall..nsmall+nbig` big.
    pub(crate) fn new(nsmall: usize, nbig: usize) -> Self {
        SeriesProblem {
            nsmall,
            nbig,
            pairs: Vec::new(),
            smalls: Vec::new(),
        }
    }

    /// `(1 − ∏ z_v^{e_v})^exponent` with a degree-zero ratio of big variables.
    pub(crate) fn pair_factor(&mut self, exponent: Rat, shift: &[(usize, i64)]) {
        debug_assert!(self.weight_of(shift) > 0);
        self.pairs.push(Factor {
            exponent,
            shift: shift.to_vec(),
        });
    }

    /// `(1 − x_small / y_big)^exponent`.
    pub(crate) fn small_factor(&mut self, exponent: Rat, small: usize, big: usize) {
        debug_assert!(small < self.nsmall && big >= self.nsmall);
        self.smalls.push(Factor {
            exponent,
            shift: vec![(small, 1), (big, -1)],
        });
    }

    fn weight_of(&self, shift: &[(usize, i64)]) -> i64 {
        shift
            .iter()
            .filter(|(v, _)| *v >= self.nsmall)
            .map(|&(v, e)| -((v - self.nsmall + 1) as i64) * e)
            .sum()
    }

    fn weight(&self, exps: &[i64]) -> i64 {
        exps[self.nsmall..]
            .iter()
            .enumerate()
            .map(|(i, &e)| -((i + 1) as i64) * e)
            .sum()
    }

    /// Weight of the monomial `y^target`; the least sufficient truncation.
    pub(crate) fn target_weight(&self, target: &[i64]) -> i64 {
        -target
            .iter()
            .enumerate()
            .map(|(i, &e)| (i + 1) as i64 * e)
            .sum::<i64>()
    }

    fn multiply(
        &self,
        series: Series,
        factor: &Factor,
        bound: i64,
        keep: &dyn Fn(&[i64]) -> bool,
    ) -> Series {
        let step = self.weight_of(&factor.shift);
        let mut coeffs: Vec<Rat> = Vec::new();
        let mut out = Series::new();
        for (exps, c) in series {
            let mut w = self.weight(&exps);
            let mut e = exps;
            let mut p = 0usize;
            while w <= bound {
                if coeffs.len() <= p {
                    let b = gen_binomial(&factor.exponent, p as u32);
                    coeffs.push(if p.is_multiple_of(2) { b } else { -b });
                }
                if coeffs[p].is_zero() {
                    break;
                }
                if !keep(&e) {
                    break;
                }
                *out.entry(e.clone()).or_insert_with(Rat::zero) += &c * &coeffs[p];
                for &(v, s) in &factor.shift {
                    e[v] += s;
                }
                w += step;
                p += 1;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Coefficient of `y^target` as a map from small-variable exponents,
    /// expanding with every term of weight above `bound` discarded.
    pub(crate) fn coefficient(&self, target: &[i64], bound: i64) -> Vec<(Vec<u32>, Rat)> {
        assert_eq!(target.len(), self.nbig);
        let ns = self.nsmall;
        let xdeg = -target.iter().sum::<i64>();
        if xdeg < 0 {
            return Vec::new();
        }
        let mut series = Series::new();
        series.insert(vec![0; ns + self.nbig], Rat::one());
        let anything = |_: &[i64]| true;
        for f in &self.pairs {
            series = self.multiply(series, f, bound, &anything);
        }
        // small factors only lower big exponents and raise the x-degree
        let admissible = |e: &[i64]| {
            e[ns..].iter().zip(target).all(|(a, t)| a >= t)
                && e[..ns].iter().sum::<i64>() <= xdeg
        };
        series.retain(|e, _| admissible(e));
        for f in &self.smalls {
            series = self.multiply(series, f, bound, &admissible);
        }
        let mut out: Vec<(Vec<u32>, Rat)> = series
            .into_iter()
            .filter(|(e, _)| e[ns..] == *target)
            .map(|(e, c)| (e[..ns].iter().map(|&v| v as u32).collect(), c))
            .collect();
        out.sort();
        out
    }

    /// Extracts the coefficient at truncation `max(bound, weight(target))`
    /// and certifies it by recomputing at successively larger bounds until
    /// two consecutive results agree.
    pub(crate) fn certified_coefficient(
        &self,
        target: &[i64],
        bound: u32,
    ) -> Result<Vec<(Vec<u32>, Rat)>> {
        let mut t = (bound as i64).max(self.target_weight(target));
        let mut prev = self.coefficient(target, t);
        for _ in 0..MAX_CERTIFY_STEPS {
            t += 2;
            let next = self.coefficient(target, t);
            if next == prev {
                return Ok(prev);
            }
            prev = next;
        }
        Err(Error::Invariant(format!(
            "truncated expansion did not stabilize up to order {t}"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    #[test]
    fn single_factor_is_binomial_series() {
        // (1 − x/y)^{−1/2}: coefficient of y^{−3} is binom(−1/2, 3)·(−1)^3·x^3
        let mut p = SeriesProblem::new(1, 1);
        p.small_factor(rat(-1, 2), 0, 1);
        let c = p.coefficient(&[-3], 10);
        assert_eq!(c, vec![(vec![3], rat(5, 16))]);
    }

    #[test]
    fn finite_exponent_truncates_itself() {
        let mut p = SeriesProblem::new(1, 2);
        p.pair_factor(int(1), &[(1, 1), (2, -1)]);
        // 1 − y1/y2 has no y1^2 y2^{-2} term
        assert!(p.coefficient(&[2, -2], 10).is_empty());
        assert_eq!(p.coefficient(&[1, -1], 10), vec![(vec![0], int(-1))]);
    }

    #[test]
    fn certification_reaches_the_target_weight() {
        let mut p = SeriesProblem::new(1, 2);
        p.pair_factor(rat(1, 3), &[(1, 1), (2, -1)]);
        p.small_factor(rat(-1, 3), 0, 1);
        p.small_factor(rat(-1, 3), 0, 2);
        // a bound below the target weight must still give the full answer
        let low = p.certified_coefficient(&[0, -2], 0).unwrap();
        let high = p.coefficient(&[0, -2], 20);
        assert_eq!(low, high);
        assert!(!low.is_empty());
    }
}
