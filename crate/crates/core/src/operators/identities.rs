use num_traits::Zero;

use crate::algebra::{int, shifted_plus, IntVec, Poly, Rat, SymPoly};
use crate::genfunc::{FBasis, FExpansion};
use crate::{Error, Result};

use super::apply::apply_reduced_operator;
use super::model::{ModelSpec, Sign};
use super::eigenvalue_calogero;

/// Particle masses for the generalized groundstate identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MassSpec {
    pub masses: Vec<Rat>,
    pub kappa: Rat,
}

impl MassSpec {
    pub fn new(masses: Vec<Rat>, kappa: Rat) -> Result<Self> {
        if masses.is_empty() {
            return Err(Error::invalid("at least one mass is required"));
        }
        if masses.iter().any(Zero::is_zero) {
            return Err(Error::invalid("masses must be nonzero"));
        }
        Ok(MassSpec { masses, kappa })
    }

    pub fn count(&self) -> usize {
        self.masses.len()
    }

    /// `𝓔₀ = κ(Σ m_j)² + Σ (1 − κ m_j²)`.
    pub fn ground_energy(&self) -> Rat {
        let total: Rat = self.masses.iter().sum();
        let k = &self.kappa;
        let rest: Rat = self.masses.iter().map(|m| int(1) - k * m * m).sum();
        k * &total * &total + rest
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MassReport {
    pub e0: Rat,
    pub holds: bool,
    /// `D·(Φ₀⁻¹𝓗Φ₀ − 𝓔₀)` with `D = ∏_{j<k}(X_j − X_k)²`; zero iff the
    /// identity holds.
    pub residual: Poly,
}

/// Verifies `𝓗Φ₀ = 𝓔₀Φ₀` symbolically after clearing the denominator
/// `∏_{j<k}(X_j − X_k)²`.
pub fn mass_identity_check(spec: &MassSpec) -> Result<MassReport> {
    let n = spec.count();
    let m = &spec.masses;
    let k = &spec.kappa;
    let x = |j: usize| Poly::var(n, j);
    let mut l = Poly::one(n);
    for j in 0..n {
        for i in j + 1..n {
            l = &l * &(&x(j) - &x(i));
        }
    }
    let d = &l * &l;
    // lq[j][i] = L / (X_j − X_i)
    let mut lq = vec![vec![Poly::zero(n); n]; n];
    for j in 0..n {
        for i in j + 1..n {
            let q = l.div_by_difference(j, i)?;
            lq[i][j] = -&q;
            lq[j][i] = q;
        }
    }
    let mut lhs = Poly::zero(n);
    for j in 0..n {
        let inv = m[j].recip();
        // A_j = V_j·L
        let mut a = (&x(j) * &l).scale(&-m[j].clone());
        // (∂_j V_j)·D
        let mut dv = d.scale(&-m[j].clone());
        for i in (0..n).filter(|&i| i != j) {
            let c = k * &m[j] * &m[i];
            a = &a + &lq[j][i].scale(&c);
            dv = &dv - &(&lq[j][i] * &lq[j][i]).scale(&c);
        }
        let term = &(-&dv) - &(&a * &a);
        lhs = &lhs + &term.scale(&inv);
        lhs = &lhs + &(&(&x(j) * &x(j)) * &d).scale(&m[j]);
    }
    for j in 0..n {
        for i in j + 1..n {
            let c = k * (k * &m[j] * &m[i] - int(1)) * (&m[j] + &m[i]);
            lhs = &lhs + &(&lq[j][i] * &lq[j][i]).scale(&c);
        }
    }
    let e0 = spec.ground_energy();
    let residual = &lhs - &d.scale(&e0);
    Ok(MassReport {
        e0,
        holds: residual.is_zero(),
        residual,
    })
}

/// `C_N = 2(1 − κ)N`.
pub fn corollary_constant(nvars: usize, kappa: &Rat) -> Rat {
    int(2 * nvars as i64) * (int(1) - kappa)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    pub holds: bool,
    pub lhs: SymPoly,
    pub rhs: SymPoly,
    pub residual: SymPoly,
}

/// The right-hand side of the action formula as a combination of `f_m`:
/// `Ẽ_n f_n − Σ_j (n⁺_j−1)(n⁺_j−2) f_{n−2e_j}
///  + 2κ(κ−1) Σ_{j<k} Σ_{ν≥1} ν f_{n−(1−ν)e_j−(1+ν)e_k}`.
///
/// The `ν`-series is cut where the `k`-th suffix sum of the index turns
/// negative, beyond which every `f` vanishes.
pub fn lemma_action_rhs(n: &IntVec, kappa: &Rat) -> FExpansion {
    let nv = n.len();
    let mut out = FExpansion::new(nv);
    out.add_term(n.clone(), eigenvalue_calogero(n));
    let plus = shifted_plus(n, kappa);
    for (j, p) in plus.iter().enumerate() {
        let c = -((p - int(1)) * (p - int(2)));
        let mut m = n.clone();
        m.bump(j, -2);
        out.add_term(m, c);
    }
    let pair = int(2) * kappa * (kappa - int(1));
    let suffix = n.suffix_sums();
    for k in 0..nv {
        for j in 0..k {
            for nu in 1..suffix[k] {
                let mut m = n.clone();
                m.bump(j, nu - 1);
                m.bump(k, -(1 + nu));
                out.add_term(m, &pair * int(nu));
            }
        }
    }
    out
}

/// Checks the action formula for `H̃ f_n` exactly in the monomial basis.
pub fn lemma_action_check(n: &IntVec, nvars: usize, kappa: &Rat) -> Result<LemmaReport> {
    Error::check_len(nvars, n.len())?;
    let basis = FBasis::new(nvars, kappa.clone());
    let model = ModelSpec::calogero(nvars, kappa.clone());
    let lhs = apply_reduced_operator(&model, &basis.f(n), Sign::Minus)?;
    let rhs = lemma_action_rhs(n, kappa).to_sympoly(&basis);
    let residual = &lhs - &rhs;
    Ok(LemmaReport {
        holds: residual.is_zero(),
        lhs,
        rhs,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::operators::ground_energy;

    #[test]
    fn unit_masses_give_calogero_energy() {
        for nv in 1..=3 {
            let k = rat(1, 3);
            let spec = MassSpec::new(vec![int(1); nv], k.clone()).unwrap();
            let r = mass_identity_check(&spec).unwrap();
            assert!(r.holds);
            assert_eq!(r.e0, ground_energy(nv, &k));
        }
    }

    #[test]
    fn split_masses_give_corollary_constant() {
        let k = int(2);
        let spec = MassSpec::new(vec![int(1), int(1), int(-1), int(-1)], k.clone()).unwrap();
        let r = mass_identity_check(&spec).unwrap();
        assert!(r.holds);
        assert_eq!(r.e0, corollary_constant(2, &k));
        assert_eq!(r.e0, int(-4));
    }

    #[test]
    fn unequal_masses() {
        let spec = MassSpec::new(vec![int(1), int(2)], rat(1, 2)).unwrap();
        let r = mass_identity_check(&spec).unwrap();
        assert!(r.holds);
        assert_eq!(r.e0, int(4));
    }

    #[test]
    fn zero_mass_is_rejected() {
        assert!(matches!(
            MassSpec::new(vec![int(1), int(0)], int(1)),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn lemma_small_cases() {
        let zero = lemma_action_check(&IntVec::zeros(2), 2, &rat(1, 2)).unwrap();
        assert!(zero.holds && zero.lhs.is_zero());
        for k in [rat(1, 2), int(2), rat(1, 3)] {
            assert!(lemma_action_check(&IntVec::new(vec![2]), 1, &k).unwrap().holds);
            assert!(lemma_action_check(&IntVec::new(vec![1, 1]), 2, &k).unwrap().holds);
        }
    }
}
