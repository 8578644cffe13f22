use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{int, Rat};
use crate::{Error, Result};

/// Graded reverse-lexicographic comparison of exponent vectors. Higher total
/// degree is greater; ties are broken by the last differing exponent, the
/// vector with the *smaller* entry there being greater.
pub fn grevlex_cmp<T: Copy + Ord + Into<i64>>(a: &[T], b: &[T]) -> Ordering {
    let da: i64 = a.iter().map(|&v| v.into()).sum();
    let db: i64 = b.iter().map(|&v| v.into()).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            match x.cmp(y) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    })
}

/// Sparse multivariate polynomial with rational coefficients, not assumed
/// symmetric. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn var(nvars: usize, j: usize) -> Self {
        let mut e = vec![0; nvars];
        e[j] = 1;
        Self::monomial(e, Rat::one())
    }

    pub fn monomial(exps: Vec<u32>, c: Rat) -> Self {
        let mut p = Poly::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    /// `a2·z_j² + a1·z_j + a0`.
    pub fn quadratic_in(nvars: usize, j: usize, a2: &Rat, a1: &Rat, a0: &Rat) -> Self {
        let mut p = Poly::zero(nvars);
        for (deg, c) in [(2u32, a2), (1, a1), (0, a0)] {
            let mut e = vec![0; nvars];
            e[j] = deg;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rat) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn derivative(&self, j: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[j] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[j] -= 1;
            out.add_term(e2, c * int(e[j] as i64));
        }
        out
    }

    /// Applies `perm` to the variables: variable `i` becomes `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; self.nvars];
            for (i, &v) in e.iter().enumerate() {
                e2[perm[i]] = v;
            }
            out.add_term(e2, c.clone());
        }
        out
    }

    pub fn evaluate(&self, point: &[Rat]) -> Result<Rat> {
        Error::check_len(self.nvars, point.len())?;
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                t *= num_traits::pow(x.clone(), k as usize);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Exact quotient by `z_j − z_k`. A nonzero remainder is an invariant
    /// violation.
    pub fn div_by_difference(&self, j: usize, k: usize) -> Result<Poly> {
        assert!(j != k && j < self.nvars && k < self.nvars);
        // Synthetic division in z_j, one z_j-degree at a time from the top:
        // a·z_j^d·r  =  (z_j − z_k)·a·z_j^{d−1}·r  +  a·z_j^{d−1}·z_k·r.
        let mut levels: BTreeMap<u32, BTreeMap<Vec<u32>, Rat>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let d = rest[j];
            rest[j] = 0;
            *levels.entry(d).or_default().entry(rest).or_insert_with(Rat::zero) += c;
        }
        let mut quotient = Poly::zero(self.nvars);
        while let Some((&d, _)) = levels.iter().next_back() {
            if d == 0 {
                break;
            }
            let level = levels.remove(&d).unwrap_or_default();
            for (rest, a) in level {
                if a.is_zero() {
                    continue;
                }
                let mut qe = rest.clone();
                qe[j] = d - 1;
                quotient.add_term(qe, a.clone());
                let mut carry = rest;
                carry[k] += 1;
                *levels
                    .entry(d - 1)
                    .or_default()
                    .entry(carry)
                    .or_insert_with(Rat::zero) += a;
            }
        }
        if let Some(rem) = levels.get(&0) {
            if rem.values().any(|c| !c.is_zero()) {
                return Err(Error::Invariant(format!(
                    "nonzero remainder dividing by (z{} - z{})",
                    j + 1,
                    k + 1
                )));
            }
        }
        Ok(quotient)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        self.scale(&-Rat::one())
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn x(n: usize, j: usize) -> Poly {
        Poly::var(n, j)
    }

    #[test]
    fn grevlex_order() {
        assert_eq!(grevlex_cmp(&[2u32, 0], &[1, 1]), Ordering::Greater);
        assert_eq!(grevlex_cmp(&[0u32, 0, 3], &[1, 1, 0]), Ordering::Greater);
        assert_eq!(grevlex_cmp(&[1u32, 1, 1], &[2, 0, 1]), Ordering::Less);
        assert_eq!(grevlex_cmp(&[1u32, 2], &[1, 2]), Ordering::Equal);
    }

    #[test]
    fn exact_division() {
        let n = 3;
        // (x1 - x2)(x1^2 + 3 x3)
        let lhs = &x(n, 0) - &x(n, 1);
        let rhs = &(&x(n, 0) * &x(n, 0)) + &x(n, 2).scale(&int(3));
        let prod = &lhs * &rhs;
        assert_eq!(prod.div_by_difference(0, 1).unwrap(), rhs);
        // dividing by (x2 - x1) flips the sign
        assert_eq!(prod.div_by_difference(1, 0).unwrap(), -&rhs);
    }

    #[test]
    fn inexact_division_is_reported() {
        let p = x(2, 0);
        assert!(matches!(
            p.div_by_difference(0, 1),
            Err(Error::Invariant(_))
        ));
    }

    #[test]
    fn derivative_and_evaluate() {
        let n = 2;
        let p = &(&x(n, 0) * &x(n, 0)) * &x(n, 1);
        assert_eq!(p.derivative(0), (&x(n, 0) * &x(n, 1)).scale(&int(2)));
        assert_eq!(p.evaluate(&[int(3), rat(1, 2)]).unwrap(), rat(9, 2));
        assert!(p.evaluate(&[int(1)]).is_err());
    }
}
