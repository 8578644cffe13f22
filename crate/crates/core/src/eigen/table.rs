use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use num_traits::{One, Zero};

use super::moves::{Move, Rules, Scheme};
use crate::algebra::{IntVec, Rat};
use crate::operators::{CoefficientScheme, ModelSpec};
use crate::{Error, Result};

/// Coefficients `u_n(m)` of `P_n = f_n + Σ_m u_n(m) f_m`.
///
/// Only indices with `0 ⪯ m ⪯ n` are kept: `f_m` vanishes unless `0 ⪯ m`,
/// and since every move raises the suffix order, entries outside that range
/// never feed entries inside it. Zero coefficients are not stored, except
/// `u_n(n) = 1` which is always present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffTable {
    pub root: IntVec,
    pub entries: BTreeMap<IntVec, Rat>,
}

impl CoeffTable {
    fn trivial(n: &IntVec) -> Self {
        CoeffTable {
            root: n.clone(),
            entries: BTreeMap::from([(n.clone(), Rat::one())]),
        }
    }

    pub fn get(&self, m: &IntVec) -> Rat {
        self.entries.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Sort key along which every move goes upward: the total of the suffix
/// sums strictly increases under any nonzero move.
fn height(m: &IntVec) -> i64 {
    m.suffix_sums().iter().sum()
}

fn recursion(n: &IntVec, rules: &Rules) -> Result<CoeffTable> {
    let mut table = CoeffTable::trivial(n);
    if !n.is_suffix_nonnegative() {
        // every f_m with m ⪯ n vanishes; nothing below n is needed
        return Ok(table);
    }
    // discover the reachable down-set, recording the incoming edges
    let mut edges: HashMap<IntVec, Vec<(Move, IntVec)>> = HashMap::new();
    let mut seen: BTreeSet<IntVec> = BTreeSet::from([n.clone()]);
    let mut queue = VecDeque::from([n.clone()]);
    while let Some(c) = queue.pop_front() {
        for (mv, child) in rules.moves_down(&c) {
            edges.entry(child.clone()).or_default().push((mv, c.clone()));
            if seen.insert(child.clone()) {
                queue.push_back(child);
            }
        }
    }
    let mut order: Vec<IntVec> = seen.into_iter().filter(|m| m != n).collect();
    order.sort_by_key(|m| std::cmp::Reverse(height(m)));
    let mut values: HashMap<IntVec, Rat> = HashMap::from([(n.clone(), Rat::one())]);
    for m in order {
        let b = rules.divisor(n, &m);
        if b.is_zero() {
            return Err(Error::Resonance { n: n.clone(), m });
        }
        let mut acc = Rat::zero();
        for (mv, parent) in &edges[&m] {
            if let Some(u) = values.get(parent) {
                acc += rules.coeff(mv, &m) * u;
            }
        }
        let u = acc / b;
        if !u.is_zero() {
            table.entries.insert(m.clone(), u.clone());
            values.insert(m, u);
        }
    }
    Ok(table)
}

/// Closed form: sum over ordered move sequences leading down from `n`,
/// each step contributing `g(mv; m_r)/divisor(m_r)` at the index `m_r`
/// reached after it.
fn closed_form(n: &IntVec, rules: &Rules) -> Result<CoeffTable> {
    let mut acc: BTreeMap<IntVec, Rat> = BTreeMap::new();
    if n.is_suffix_nonnegative() {
        walk(n, n, &Rat::one(), rules, &mut acc)?;
    }
    let mut table = CoeffTable::trivial(n);
    for (m, c) in acc {
        if !c.is_zero() {
            table.entries.insert(m, c);
        }
    }
    Ok(table)
}

fn walk(
    n: &IntVec,
    c: &IntVec,
    weight: &Rat,
    rules: &Rules,
    acc: &mut BTreeMap<IntVec, Rat>,
) -> Result<()> {
    for (mv, child) in rules.moves_down(c) {
        let g = rules.coeff(&mv, &child);
        if g.is_zero() {
            continue;
        }
        let b = rules.divisor(n, &child);
        if b.is_zero() {
            return Err(Error::Resonance { n: n.clone(), m: child });
        }
        let w = weight * g / b;
        *acc.entry(child.clone()).or_insert_with(Rat::zero) += &w;
        walk(n, &child, &w, rules, acc)?;
    }
    Ok(())
}

/// Calogero coefficients by memoized recursion,
/// `2(|n|−|m|) u_n(m) = Σ g_{jk}(ν; m) u_n(m + E^ν_{jk})`.
pub fn u_coeffs_calogero(n: &IntVec, nvars: usize, kappa: &Rat) -> Result<CoeffTable> {
    Error::check_len(nvars, n.len())?;
    let model = ModelSpec::calogero(nvars, kappa.clone());
    recursion(n, &Rules { model: &model, scheme: Scheme::Calogero })
}

/// Calogero coefficients from the closed-form move-sequence sum.
pub fn u_coeffs_calogero_closed(n: &IntVec, nvars: usize, kappa: &Rat) -> Result<CoeffTable> {
    Error::check_len(nvars, n.len())?;
    let model = ModelSpec::calogero(nvars, kappa.clone());
    closed_form(n, &Rules { model: &model, scheme: Scheme::Calogero })
}

/// General-scheme coefficients with the derived formulas.
pub fn u_coeffs_general(model: &ModelSpec, n: &IntVec) -> Result<CoeffTable> {
    u_coeffs_general_with(model, n, CoefficientScheme::Derived)
}

pub fn u_coeffs_general_with(
    model: &ModelSpec,
    n: &IntVec,
    scheme: CoefficientScheme,
) -> Result<CoeffTable> {
    model.check_index(n)?;
    recursion(n, &Rules { model, scheme: Scheme::General(scheme) })
}

/// General-scheme coefficients from the closed-form sequence sum.
pub fn u_coeffs_general_closed(
    model: &ModelSpec,
    n: &IntVec,
    scheme: CoefficientScheme,
) -> Result<CoeffTable> {
    model.check_index(n)?;
    closed_form(n, &Rules { model, scheme: Scheme::General(scheme) })
}

/// Table for any scheme.
pub fn u_coeffs(model: &ModelSpec, n: &IntVec, scheme: Scheme) -> Result<CoeffTable> {
    model.check_index(n)?;
    recursion(n, &Rules { model, scheme })
}
