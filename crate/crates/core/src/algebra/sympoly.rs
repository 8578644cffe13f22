use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::index::Partition;
use super::poly::Poly;
use super::rational::Rat;
use crate::{Error, Result};

/// All distinct permutations of `parts`, in increasing lexicographic order.
pub fn distinct_permutations(parts: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = parts.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // standard next-permutation walk; visits each distinct arrangement once
    loop {
        let n = cur.len();
        if n < 2 {
            break;
        }
        let mut i = n - 1;
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}

/// A symmetric polynomial in `N` variables stored in the monomial basis
/// `m_λ`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    nvars: usize,
    coeffs: BTreeMap<Partition, Rat>,
}

impl SymPoly {
    pub fn zero(nvars: usize) -> Self {
        SymPoly {
            nvars,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        Self::monomial(Partition::zero(nvars), c)
    }

    /// `c·m_λ`.
    pub fn monomial(lam: Partition, c: Rat) -> Self {
        let mut p = SymPoly::zero(lam.len());
        p.add_term(lam, c);
        p
    }

    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Partition, Rat)>,
    ) -> Result<Self> {
        let mut p = SymPoly::zero(nvars);
        for (lam, c) in terms {
            Error::check_len(nvars, lam.len())?;
            p.add_term(lam, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, lam: &Partition) -> Rat {
        self.coeffs.get(lam).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, lam: Partition, c: Rat) {
        debug_assert_eq!(lam.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(lam) {
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

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().map(Partition::weight).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.coeffs.keys().map(Partition::weight);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// The part of degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> SymPoly {
        SymPoly {
            nvars: self.nvars,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(l, _)| l.weight() == d)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> SymPoly {
        if c.is_zero() {
            return SymPoly::zero(self.nvars);
        }
        SymPoly {
            nvars: self.nvars,
            coeffs: self
                .coeffs
                .iter()
                .map(|(l, v)| (l.clone(), v * c))
                .collect(),
        }
    }

    /// If `other = c·self` for some scalar `c`, returns `c`.
    pub fn ratio_to(&self, other: &SymPoly) -> Option<Rat> {
        if self.nvars != other.nvars {
            return None;
        }
        let (lam, lead) = self.coeffs.iter().next()?;
        let c = other.coeff(lam) / lead;
        if &self.scale(&c) == other {
            Some(c)
        } else {
            None
        }
    }

    /// Expands every `m_λ` into its distinct-permutation monomials.
    pub fn expand(&self) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (lam, c) in &self.coeffs {
            for e in distinct_permutations(lam.parts()) {
                out.add_term(e, c.clone());
            }
        }
        out
    }

    /// Collects a polynomial back into the monomial basis, checking that it
    /// is symmetric.
    pub fn from_poly(p: &Poly) -> Result<SymPoly> {
        let mut out = SymPoly::zero(p.nvars());
        let mut orbit_seen: BTreeMap<Partition, usize> = BTreeMap::new();
        for (e, c) in p.terms() {
            let lam = Partition::from_unsorted(e.clone());
            let rep = p.coeff(lam.parts());
            if &rep != c {
                return Err(Error::Invariant(format!(
                    "polynomial is not symmetric at exponent {e:?}"
                )));
            }
            *orbit_seen.entry(lam).or_default() += 1;
        }
        for (lam, seen) in orbit_seen {
            if seen != distinct_permutations(lam.parts()).len() {
                return Err(Error::Invariant(format!(
                    "polynomial is not symmetric: incomplete orbit of {lam}"
                )));
            }
            let c = p.coeff(lam.parts());
            out.add_term(lam, c);
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[Rat]) -> Result<Rat> {
        Error::check_len(self.nvars, point.len())?;
        self.expand().evaluate(point)
    }

    fn mul_impl(&self, rhs: &SymPoly) -> SymPoly {
        // [m_ν] m_λ·m_μ counts pairs (α, β) of distinct permutations of λ and
        // μ with α + β = ν; enumerating all pairs and keeping the sorted sums
        // counts each such pair exactly once.
        let mut out = SymPoly::zero(self.nvars);
        let mut perms_cache: BTreeMap<&Partition, Vec<Vec<u32>>> = BTreeMap::new();
        for lam in self.coeffs.keys() {
            perms_cache.insert(lam, distinct_permutations(lam.parts()));
        }
        for (mu, cb) in &rhs.coeffs {
            let mu_perms = distinct_permutations(mu.parts());
            for (lam, ca) in &self.coeffs {
                let prod = ca * cb;
                let mut counts: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
                for a in &perms_cache[lam] {
                    for b in &mu_perms {
                        let s: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                        if s.windows(2).all(|w| w[0] >= w[1]) {
                            *counts.entry(s).or_default() += 1;
                        }
                    }
                }
                for (nu, k) in counts {
                    out.add_term(Partition::from_unsorted(nu), &prod * Rat::from_integer(k.into()));
                }
            }
        }
        out
    }
}

pub fn poly_add(a: &SymPoly, b: &SymPoly) -> Result<SymPoly> {
    Error::check_len(a.nvars, b.nvars)?;
    Ok(a + b)
}

pub fn poly_scale(a: &SymPoly, c: &Rat) -> SymPoly {
    a.scale(c)
}

pub fn poly_mul(a: &SymPoly, b: &SymPoly) -> Result<SymPoly> {
    Error::check_len(a.nvars, b.nvars)?;
    Ok(a.mul_impl(b))
}

pub fn evaluate(p: &SymPoly, point: &[Rat]) -> Result<Rat> {
    p.evaluate(point)
}

impl Add for &SymPoly {
    type Output = SymPoly;

    fn add(self, rhs: &SymPoly) -> SymPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (l, c) in &rhs.coeffs {
            out.add_term(l.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SymPoly {
    type Output = SymPoly;

    fn sub(self, rhs: &SymPoly) -> SymPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (l, c) in &rhs.coeffs {
            out.add_term(l.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &SymPoly {
    type Output = SymPoly;

    fn neg(self) -> SymPoly {
        self.scale(&-Rat::one())
    }
}

impl Mul for &SymPoly {
    type Output = SymPoly;

    fn mul(self, rhs: &SymPoly) -> SymPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        self.mul_impl(rhs)
    }
}
