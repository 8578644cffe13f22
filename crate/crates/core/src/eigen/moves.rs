use num_traits::Zero;

use crate::algebra::{int, shifted_plus, IntVec, Rat};
use crate::operators::{b_n_with, CoefficientScheme, ModelSpec};

/// An index displacement `E^{pν}_{jk} = (1−ν)e_j + (1−p+ν)e_k` (`j ≤ k`).
/// Calogero moves are the `p = 0` case with `ν ≥ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move {
    pub j: usize,
    pub k: usize,
    pub p: u8,
    pub nu: u32,
}

impl Move {
    pub fn calogero(j: usize, k: usize, nu: u32) -> Self {
        Move { j, k, p: 0, nu }
    }

    pub fn general(j: usize, k: usize, p: u8, nu: u32) -> Self {
        Move { j, k, p, nu }
    }

    pub fn displacement(&self, nvars: usize) -> IntVec {
        let nu = self.nu as i64;
        let mut e = IntVec::zeros(nvars);
        e.bump(self.j, 1 - nu);
        e.bump(self.k, 1 - self.p as i64 + nu);
        e
    }
}

/// `g_{jk}(ν; m) = 2κ(κ−1)ν(1−δ_{jk}) − m⁺_j(m⁺_j+1)δ_{ν0}δ_{jk}`.
pub fn g_move_coeff_calogero(mv: &Move, m: &IntVec, kappa: &Rat) -> Rat {
    debug_assert_eq!(mv.p, 0);
    if mv.j != mv.k {
        return int(2) * kappa * (kappa - int(1)) * int(mv.nu as i64);
    }
    if mv.nu != 0 {
        return Rat::zero();
    }
    let mp = &shifted_plus(m, kappa)[mv.j];
    -(mp * (mp + int(1)))
}

/// The general-scheme coefficient, transcribed verbatim:
/// `(1−δ_{jk})κ(κ−1)α_p(2ν−p) − δ_{jk}δ_{ν1}m⁺_j(δ_{p0}α₀(m⁺_j+1) + δ_{p1}(α₁(m⁺_j+κ+1) − β₀))`.
pub fn g_move_coeff_general(mv: &Move, m: &IntVec, model: &ModelSpec) -> Rat {
    g_move_coeff_with(mv, m, model, CoefficientScheme::Printed)
}

/// Move coefficient for either scheme. The derived diagonal `p = 1` entry
/// is `−m⁺_j(α₁(m⁺_j − κ) + β₀)`.
pub fn g_move_coeff_with(
    mv: &Move,
    m: &IntVec,
    model: &ModelSpec,
    scheme: CoefficientScheme,
) -> Rat {
    let kappa = &model.kappa;
    if mv.j != mv.k {
        let two_nu_p = 2 * mv.nu as i64 - mv.p as i64;
        return kappa * (kappa - int(1)) * model.alpha_coeff(mv.p as u32) * int(two_nu_p);
    }
    if mv.nu != 1 {
        return Rat::zero();
    }
    let mp = &shifted_plus(m, kappa)[mv.j];
    let [_, a1, a0] = &model.alpha;
    let b0 = &model.beta[1];
    match (mv.p, scheme) {
        (0, _) => -(mp * a0 * (mp + int(1))),
        (1, CoefficientScheme::Printed) => -(mp * (a1 * (mp + kappa + int(1)) - b0)),
        (1, CoefficientScheme::Derived) => -(mp * (a1 * (mp - kappa) + b0)),
        _ => Rat::zero(),
    }
}

/// Which recursion produces a coefficient table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scheme {
    /// Calogero moves with divisor `2(|n| − |m|)`.
    Calogero,
    /// `(p, ν)` moves with divisor `b_n(m)` for the given formulas.
    General(CoefficientScheme),
}

/// Moves and coefficients of one recursion, bound to a model.
pub(crate) struct Rules<'a> {
    pub model: &'a ModelSpec,
    pub scheme: Scheme,
}

impl Rules<'_> {
    pub fn coeff(&self, mv: &Move, m: &IntVec) -> Rat {
        match self.scheme {
            Scheme::Calogero => g_move_coeff_calogero(mv, m, &self.model.kappa),
            Scheme::General(s) => g_move_coeff_with(mv, m, self.model, s),
        }
    }

    pub fn divisor(&self, n: &IntVec, m: &IntVec) -> Rat {
        match self.scheme {
            Scheme::Calogero => int(2 * (n.weight() - m.weight())),
            Scheme::General(s) => b_n_with(self.model, n, m, s),
        }
    }

    /// Moves `mv` whose coefficient is not identically zero and for which
    /// `c − E(mv)` still has nonnegative suffix sums, paired with that index.
    pub fn moves_down(&self, c: &IntVec) -> Vec<(Move, IntVec)> {
        let nv = c.len();
        let suffix = c.suffix_sums();
        let mut out = Vec::new();
        let mut push = |mv: Move| {
            let child = c.minus(&mv.displacement(nv));
            if child.is_suffix_nonnegative() {
                out.push((mv, child));
            }
        };
        for k in 0..nv {
            for j in 0..=k {
                match self.scheme {
                    Scheme::Calogero => {
                        if j == k {
                            push(Move::calogero(j, k, 0));
                        } else {
                            for nu in 1..suffix[k].max(0) {
                                push(Move::calogero(j, k, nu as u32));
                            }
                        }
                    }
                    Scheme::General(_) => {
                        for p in 0..=2u8 {
                            let alpha_zero = self.model.alpha_coeff(p as u32).is_zero();
                            if j == k {
                                // the diagonal p = 1 coefficient also carries β₀
                                let live = !alpha_zero || (p == 1 && !self.model.beta[1].is_zero());
                                if p < 2 && live {
                                    push(Move::general(j, k, p, 1));
                                }
                                continue;
                            }
                            if alpha_zero {
                                continue;
                            }
                            // the k-th suffix sum drops by 1 − p + ν
                            let top = suffix[k] + p as i64 - 1;
                            for nu in 1..=top {
                                if 2 * nu != p as i64 {
                                    push(Move::general(j, k, p, nu as u32));
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }
}
