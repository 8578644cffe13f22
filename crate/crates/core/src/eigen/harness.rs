use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::{eigenfunction, oracle_eigen_check, DEFAULT_SCHEME};
use crate::algebra::{partitions_up_to, Partition, Rat};
use crate::genfunc::FBasis;
use crate::operators::{eigenvalue_with, CoefficientScheme, ModelSpec, Preset, Sign};
use crate::{Error, Result};

/// A reading of the general eigenvalue formula: overall sign of the
/// operator and whether the index components are fed in reversed order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Convention {
    pub sign_minus: bool,
    pub reversed: bool,
}

impl Convention {
    pub const ALL: [Convention; 4] = [
        Convention { sign_minus: true, reversed: false },
        Convention { sign_minus: true, reversed: true },
        Convention { sign_minus: false, reversed: false },
        Convention { sign_minus: false, reversed: true },
    ];

    pub fn sign(self) -> Sign {
        if self.sign_minus {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

impl Default for Convention {
    fn default() -> Self {
        Convention::ALL[0]
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign_minus { "minus" } else { "plus" };
        let o = if self.reversed { "reversed" } else { "as-given" };
        write!(f, "{s}/{o}")
    }
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Convention::ALL
            .into_iter()
            .find(|c| c.to_string() == s)
            .ok_or_else(|| {
                Error::invalid(format!(
                    "unknown convention '{s}' (expected sign/order such as minus/as-given)"
                ))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarnessEntry {
    pub preset: Preset,
    pub nvars: usize,
    pub index: Partition,
    pub is_eigenvector: bool,
    /// Eigenvalue under the `minus` sign.
    pub recovered: Option<Rat>,
    pub matches: BTreeSet<Convention>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarnessReport {
    pub formula: CoefficientScheme,
    pub entries: Vec<HarnessEntry>,
}

impl HarnessReport {
    pub fn presets(&self) -> BTreeSet<Preset> {
        self.entries.iter().map(|e| e.preset).collect()
    }

    fn of(&self, preset: Preset) -> impl Iterator<Item = &HarnessEntry> {
        self.entries.iter().filter(move |e| e.preset == preset)
    }

    /// Conventions that match on every grid point of `preset`.
    pub fn matching(&self, preset: Preset) -> BTreeSet<Convention> {
        self.of(preset).fold(Convention::ALL.into_iter().collect(), |acc, e| {
            acc.intersection(&e.matches).copied().collect()
        })
    }

    /// A single convention reproduces the formula on the whole grid.
    pub fn is_stable(&self, preset: Preset) -> bool {
        !self.matching(preset).is_empty()
    }

    pub fn all_eigenvectors(&self) -> bool {
        self.entries.iter().all(|e| e.is_eigenvector)
    }
}

/// For every model and partition `|λ| ≤ maxweight`, builds `P_λ` with the
/// derived scheme, recovers its eigenvalue from the operator, and records
/// which conventions make `formula` reproduce it.
pub fn convention_harness(
    models: &[ModelSpec],
    maxweight: u32,
    formula: CoefficientScheme,
) -> Result<HarnessReport> {
    let mut entries = Vec::new();
    for model in models {
        let basis = FBasis::new(model.nvars, model.kappa.clone());
        let grid = partitions_up_to(maxweight, model.nvars);
        let rows: Vec<HarnessEntry> = grid
            .par_iter()
            .map(|lam| {
                let n = lam.to_intvec();
                let p = eigenfunction(model, &n, DEFAULT_SCHEME, &basis)?;
                let rep = oracle_eigen_check(model, &p, Sign::Minus)?;
                let matches = match &rep.recovered_eigenvalue {
                    None => BTreeSet::new(),
                    Some(r) => Convention::ALL
                        .into_iter()
                        .filter(|c| {
                            let idx = if c.reversed { n.reversed() } else { n.clone() };
                            let seen = if c.sign_minus { r.clone() } else { -r.clone() };
                            eigenvalue_with(model, &idx, formula) == seen
                        })
                        .collect(),
                };
                Ok(HarnessEntry {
                    preset: model.preset,
                    nvars: model.nvars,
                    index: lam.clone(),
                    is_eigenvector: rep.is_eigenvector,
                    recovered: rep.recovered_eigenvalue,
                    matches,
                })
            })
            .collect::<Result<_>>()?;
        entries.extend(rows);
    }
    Ok(HarnessReport { formula, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn convention_names_round_trip() {
        for c in Convention::ALL {
            assert_eq!(c.to_string().parse::<Convention>().unwrap(), c);
        }
        assert!("sideways".parse::<Convention>().is_err());
    }

    #[test]
    fn derived_formula_is_stable_for_hermite() {
        let models: Vec<_> = (1..=2).map(|n| ModelSpec::calogero(n, rat(1, 2))).collect();
        let rep = convention_harness(&models, 3, CoefficientScheme::Derived).unwrap();
        assert!(rep.all_eigenvectors());
        assert!(rep.is_stable(Preset::Hermite));
        assert!(rep.matching(Preset::Hermite).contains(&Convention::default()));
    }

    #[test]
    fn bessel_printed_formula_is_stable() {
        let models: Vec<_> = (1..=2)
            .map(|n| ModelSpec::preset(Preset::Bessel, n, rat(1, 2), rat(1, 3), rat(2, 5)).unwrap())
            .collect();
        let rep = convention_harness(&models, 3, CoefficientScheme::Printed).unwrap();
        assert!(rep.is_stable(Preset::Bessel));
    }
}
