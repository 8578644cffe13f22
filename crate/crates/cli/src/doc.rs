//! Serializable output documents. Every rational is a canonical `"p/q"`
//! string, so JSON output round-trips exactly.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use cspoly::algebra::{format_rat, grevlex_cmp, Rat};
use cspoly::operators::ModelSpec;

/// Model parameters as canonical rational strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelDescriptor {
    pub name: String,
    #[serde(rename = "N")]
    pub nvars: usize,
    pub kappa: String,
    /// `[α₂, α₁, α₀]`, empty when no operator is involved.
    pub alpha: Vec<String>,
    /// `[β₁, β₀]`, empty when no operator is involved.
    pub beta: Vec<String>,
    pub params: BTreeMap<String, String>,
}

impl ModelDescriptor {
    pub fn from_model(model: &ModelSpec) -> Self {
        ModelDescriptor {
            name: model.preset.name().to_string(),
            nvars: model.nvars,
            kappa: format_rat(&model.kappa),
            alpha: model.alpha.iter().map(format_rat).collect(),
            beta: model.beta.iter().map(format_rat).collect(),
            params: model
                .params
                .iter()
                .map(|(k, v)| (k.to_string(), format_rat(v)))
                .collect(),
        }
    }

    /// Descriptor for computations that depend only on `N` and `κ`.
    pub fn bare(name: &str, nvars: usize, kappa: &Rat) -> Self {
        ModelDescriptor {
            name: name.to_string(),
            nvars,
            kappa: format_rat(kappa),
            alpha: Vec::new(),
            beta: Vec::new(),
            params: BTreeMap::new(),
        }
    }
}

/// What the exponent vectors of the terms label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// Monomial symmetric polynomials `m_λ` (a product `m_λ(x)·m_μ(x̃)`
    /// for two-species output).
    M,
    /// The `f_n` family.
    F,
    /// Products `g_λ` of modified complete symmetric polynomials.
    G,
    /// Plain monomials `x^e`.
    X,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::F => "f",
            Basis::G => "g",
            Basis::X => "x",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub exponents: Vec<i64>,
    pub coeff: String,
}

/// Sorts terms in decreasing graded reverse lexicographic order of their
/// exponent vectors.
pub fn sorted_terms<'a, E, I>(terms: I) -> Vec<Term>
where
    E: Copy + Into<i64> + 'a,
    I: IntoIterator<Item = (&'a [E], &'a Rat)>,
{
    let mut out: Vec<Term> = terms
        .into_iter()
        .map(|(e, c)| Term {
            exponents: e.iter().map(|&x| x.into()).collect(),
            coeff: format_rat(c),
        })
        .collect();
    out.sort_by(|a, b| grevlex_cmp(&b.exponents, &a.exponents));
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub check: String,
    pub passed: bool,
    pub fields: BTreeMap<String, String>,
}

/// A polynomial with its provenance: which computation, model and index
/// produced it, and in which basis its terms are written.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub command: String,
    pub model: ModelDescriptor,
    pub index: Vec<i64>,
    /// Second-species index of a two-species expansion.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index_tilde: Option<Vec<i64>>,
    /// Number of leading exponent entries that belong to `x`; the rest
    /// belong to `x̃`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split: Option<usize>,
    pub eigenvalue: Option<String>,
    pub basis: Basis,
    pub terms: Vec<Term>,
    pub verification: Option<Verification>,
}

/// Outcome of a `verify` run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub scope: String,
    pub holds: bool,
    pub model: ModelDescriptor,
    pub fields: BTreeMap<String, String>,
    /// Basis of the residual terms.
    pub residual_basis: Basis,
    /// Empty when the check holds.
    pub residual: Vec<Term>,
}

/// Any document the CLI emits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Document {
    Output(OutputDocument),
    Verify(VerifyReport),
}

pub fn emit_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

pub fn parse_json(s: &str) -> serde_json::Result<Document> {
    serde_json::from_str(s)
}
