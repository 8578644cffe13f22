use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::{One, Zero};

use cspoly::algebra::{format_rat, int, partitions_up_to, IntVec, Partition, Poly, Rat, SymPoly};
use cspoly::eigen::{
    completeness_check, convention_harness, eigenfunction, oracle_eigen_check, scheme_eigenvalue,
    u_coeffs_calogero, u_coeffs_calogero_closed, Convention, Scheme,
};
use cspoly::genfunc::{deformed_f, f_truncated_series, f_vector, DeformedIndex, FBasis};
use cspoly::operators::{
    apply_reduced_operator, apply_reduced_operator_poly, corollary_constant, lemma_action_check,
    mass_identity_check, CoefficientScheme, MassSpec, ModelSpec, Preset,
};

use crate::doc::{
    emit_json, sorted_terms, Basis, ModelDescriptor, OutputDocument, Verification, VerifyReport,
};
use crate::render;
use crate::{
    usage, ApplyArgs, BenchArgs, Cli, CliError, Command, DeformedArgs, EigArgs, FArgs, Format,
    ModelArgs, SchemeArg, Scope, VerifyArgs, EXIT_OK, EXIT_VERIFY,
};

type Run = Result<(u8, String), CliError>;

/// A named timing target returning its term count.
type Route<'a> = (&'static str, Box<dyn FnMut() -> Result<usize, CliError> + 'a>);

pub(crate) fn execute(cli: &Cli) -> Run {
    match &cli.command {
        Command::F(a) => emit_output(cmd_f(a)?, cli.format),
        Command::Eig(a) => emit_output(cmd_eig(a)?, cli.format),
        Command::DeformedF(a) => emit_output(cmd_deformed_f(a)?, cli.format),
        Command::Apply(a) => emit_output(cmd_apply(a)?, cli.format),
        Command::Verify(a) => {
            let rep = cmd_verify(a)?;
            let code = if rep.holds { EXIT_OK } else { EXIT_VERIFY };
            let text = match cli.format {
                Format::Json => emit_json(&rep),
                Format::Csv => render::verify_csv(&rep),
                Format::Latex => render::verify_latex(&rep),
            };
            Ok((code, text))
        }
        Command::Bench(a) => Ok((EXIT_OK, cmd_bench(a)?)),
    }
}

fn emit_output(doc: OutputDocument, format: Format) -> Run {
    let passed = doc.verification.as_ref().is_none_or(|v| v.passed);
    let text = match format {
        Format::Json => emit_json(&doc),
        Format::Csv => render::output_csv(&doc),
        Format::Latex => render::output_latex(&doc),
    };
    Ok((if passed { EXIT_OK } else { EXIT_VERIFY }, text))
}

fn sym_terms(p: &SymPoly) -> Vec<crate::doc::Term> {
    sorted_terms(p.terms().map(|(lam, c)| (lam.parts(), c)))
}

fn poly_terms(p: &Poly) -> Vec<crate::doc::Term> {
    sorted_terms(p.terms().map(|(e, c)| (e.as_slice(), c)))
}

fn required<T: Clone>(v: &Option<T>, flag: &str) -> Result<T, CliError> {
    v.clone().ok_or_else(|| usage(format!("missing --{flag}")))
}

impl ModelArgs {
    fn build(&self) -> Result<ModelSpec, CliError> {
        let nvars = required(&self.nvars, "N")?;
        let kappa = required(&self.kappa, "kappa")?;
        if self.alpha.is_some() || self.beta.is_some() {
            if !matches!(self.preset, None | Some(Preset::Custom)) {
                return Err(usage("--alpha/--beta cannot be combined with a named preset"));
            }
            let alpha = required(&self.alpha, "alpha")?.0;
            let beta = required(&self.beta, "beta")?.0;
            let alpha: [Rat; 3] = alpha
                .try_into()
                .map_err(|_| usage("--alpha takes three values α₂,α₁,α₀"))?;
            let beta: [Rat; 2] = beta
                .try_into()
                .map_err(|_| usage("--beta takes two values β₁,β₀"))?;
            return Ok(ModelSpec::custom(nvars, kappa, alpha, beta)?);
        }
        let preset = self.preset.unwrap_or(Preset::Hermite);
        if preset == Preset::Custom {
            return Err(usage("the custom preset needs --alpha and --beta"));
        }
        let (ua, ub) = preset.uses_params();
        let param = |v: &Option<Rat>, used: bool, name: &str| match (v, used) {
            (Some(x), true) => Ok(x.clone()),
            (None, false) => Ok(Rat::zero()),
            (None, true) => Err(usage(format!("preset {preset} needs --{name}"))),
            (Some(_), false) => Err(usage(format!("preset {preset} takes no parameter {name}"))),
        };
        let a = param(&self.a, ua, "a")?;
        let b = param(&self.b, ub, "b")?;
        Ok(ModelSpec::preset(preset, nvars, kappa, a, b)?)
    }
}

fn resolve_scheme(arg: Option<SchemeArg>, model: &ModelSpec) -> Result<Scheme, CliError> {
    match arg {
        None if model.preset == Preset::Hermite => Ok(Scheme::Calogero),
        None | Some(SchemeArg::Derived) => Ok(Scheme::General(CoefficientScheme::Derived)),
        Some(SchemeArg::Printed) => Ok(Scheme::General(CoefficientScheme::Printed)),
        Some(SchemeArg::Calogero) if model.preset == Preset::Hermite => Ok(Scheme::Calogero),
        Some(SchemeArg::Calogero) => Err(usage("the calogero scheme applies to the hermite preset only")),
    }
}

fn scheme_name(s: Scheme) -> &'static str {
    match s {
        Scheme::Calogero => "calogero",
        Scheme::General(CoefficientScheme::Derived) => "derived",
        Scheme::General(CoefficientScheme::Printed) => "printed",
    }
}

fn cmd_f(a: &FArgs) -> Result<OutputDocument, CliError> {
    if a.n.len() != a.nvars {
        return Err(usage(format!("--n has {} entries but N = {}", a.n.len(), a.nvars)));
    }
    let f = f_vector(&a.n, &a.kappa);
    let verification = if a.oracle {
        let series = f_truncated_series(&a.n, &a.kappa)?;
        Some(Verification {
            check: "truncated-series".into(),
            passed: series == f,
            fields: BTreeMap::from([("terms".into(), series.len().to_string())]),
        })
    } else {
        None
    };
    Ok(OutputDocument {
        command: "f".into(),
        model: ModelDescriptor::bare("genfunc", a.nvars, &a.kappa),
        index: a.n.parts().to_vec(),
        index_tilde: None,
        split: None,
        eigenvalue: None,
        basis: Basis::M,
        terms: sym_terms(&f),
        verification,
    })
}

fn cmd_eig(a: &EigArgs) -> Result<OutputDocument, CliError> {
    let model = a.model.build()?;
    let n = a.lambda.to_intvec();
    model.check_index(&n)?;
    let scheme = resolve_scheme(a.scheme, &model)?;
    let conv = a.convention.unwrap_or_default();
    let fbasis = FBasis::new(model.nvars, model.kappa.clone());
    let mut result = eigenfunction(&model, &n, scheme, &fbasis)?;
    let read_at = if conv.reversed { n.reversed() } else { n.clone() };
    result.eigenvalue = scheme_eigenvalue(&model, &read_at, scheme);

    let verification = if a.verify {
        let rep = oracle_eigen_check(&model, &result, conv.sign())?;
        let mut fields = BTreeMap::from([
            ("convention".to_string(), conv.to_string()),
            ("scheme".to_string(), scheme_name(scheme).to_string()),
            ("is_eigenvector".to_string(), rep.is_eigenvector.to_string()),
            ("matches_formula".to_string(), rep.matches_formula.to_string()),
        ]);
        if let Some(r) = &rep.recovered_eigenvalue {
            fields.insert("recovered_eigenvalue".into(), format_rat(r));
        }
        Some(Verification {
            check: "operator".into(),
            passed: rep.is_eigenvector && rep.matches_formula,
            fields,
        })
    } else {
        None
    };

    let normalize = |c: Rat| -> Rat {
        if a.no_normalize || c.is_zero() {
            Rat::one()
        } else {
            c.recip()
        }
    };
    let terms = match a.basis {
        Basis::M => {
            let s = normalize(result.poly.coeff(&a.lambda));
            sym_terms(&result.poly.scale(&s))
        }
        Basis::F => {
            let lead = result.f_expansion.terms().find(|(m, _)| **m == n).map(|(_, c)| c.clone());
            let s = normalize(lead.unwrap_or_else(Rat::zero));
            let scaled: Vec<(IntVec, Rat)> = result
                .f_expansion
                .terms()
                .map(|(m, c)| (m.clone(), c * &s))
                .collect();
            sorted_terms(scaled.iter().map(|(m, c)| (m.parts(), c)))
        }
        Basis::G => {
            let g = fbasis.to_g_basis(&result.poly)?;
            let s = normalize(g.get(&a.lambda).cloned().unwrap_or_else(Rat::zero));
            let scaled: Vec<(Partition, Rat)> = g.into_iter().map(|(m, c)| (m, c * &s)).collect();
            sorted_terms(scaled.iter().map(|(m, c)| (m.parts(), c)))
        }
        Basis::X => return Err(usage("eig emits the m, f or g basis")),
    };
    Ok(OutputDocument {
        command: "eig".into(),
        model: ModelDescriptor::from_model(&model),
        index: n.parts().to_vec(),
        index_tilde: None,
        split: None,
        eigenvalue: Some(format_rat(&result.eigenvalue)),
        basis: a.basis,
        terms,
        verification,
    })
}

fn is_weakly_decreasing(v: &[u32]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

fn cmd_deformed_f(a: &DeformedArgs) -> Result<OutputDocument, CliError> {
    if a.n.len() != a.nvars || a.ntilde.len() != a.nvars_tilde {
        return Err(usage("--n and --ntilde must have N and Ntilde entries"));
    }
    let idx = DeformedIndex::new(a.n.clone(), a.ntilde.clone());
    let f = deformed_f(&idx, a.nvars, a.nvars_tilde, &a.kappa)?;
    if !f.is_bisymmetric() {
        return Err(CliError::Core(cspoly::Error::Invariant(
            "two-species expansion is not symmetric in each species".into(),
        )));
    }
    // One representative per orbit: both blocks weakly decreasing.
    let s = a.nvars;
    let reps: Vec<(&Vec<u32>, &Rat)> = f
        .poly
        .terms()
        .filter(|(e, _)| is_weakly_decreasing(&e[..s]) && is_weakly_decreasing(&e[s..]))
        .collect();
    Ok(OutputDocument {
        command: "deformed-f".into(),
        model: ModelDescriptor::bare("deformed", a.nvars, &a.kappa),
        index: a.n.parts().to_vec(),
        index_tilde: Some(a.ntilde.parts().to_vec()),
        split: Some(s),
        eigenvalue: None,
        basis: Basis::M,
        terms: sorted_terms(reps.into_iter().map(|(e, c)| (e.as_slice(), c))),
        verification: None,
    })
}

fn parse_term_list(spec: &str, nvars: usize) -> Result<Vec<(Vec<u32>, Rat)>, CliError> {
    let mut out = Vec::new();
    for item in spec.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (exps, coeff) = item
            .split_once(':')
            .ok_or_else(|| usage(format!("term {item:?} is not of the form exponents:coeff")))?;
        let exps: Vec<u32> = exps
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| usage(format!("malformed exponent {t:?}"))))
            .collect::<Result<_, _>>()?;
        if exps.len() != nvars {
            return Err(usage(format!("term {item:?} has {} exponents but N = {nvars}", exps.len())));
        }
        out.push((exps, cspoly::algebra::parse_rat(coeff)?));
    }
    Ok(out)
}

fn cmd_apply(a: &ApplyArgs) -> Result<OutputDocument, CliError> {
    let model = a.model.build()?;
    let conv = a.convention.unwrap_or_default();
    let terms = parse_term_list(&a.terms, model.nvars)?;
    let (basis, out) = if a.raw {
        let mut p = Poly::zero(model.nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        let image = apply_reduced_operator_poly(&model, &p, conv.sign())?;
        (Basis::X, poly_terms(&image))
    } else {
        let mut p = SymPoly::zero(model.nvars);
        for (e, c) in terms {
            p.add_term(Partition::new(e)?, c);
        }
        (Basis::M, sym_terms(&apply_reduced_operator(&model, &p, conv.sign())?))
    };
    Ok(OutputDocument {
        command: "apply".into(),
        model: ModelDescriptor::from_model(&model),
        index: Vec::new(),
        index_tilde: None,
        split: None,
        eigenvalue: None,
        basis,
        terms: out,
        verification: None,
    })
}

fn cmd_verify(a: &VerifyArgs) -> Result<VerifyReport, CliError> {
    let m = &a.model;
    let mut fields = BTreeMap::new();
    let report = |scope: &str, holds, model, fields, residual_basis, residual| VerifyReport {
        scope: scope.into(),
        holds,
        model,
        fields,
        residual_basis,
        residual,
    };
    match a.scope {
        Scope::Lemma => {
            let nvars = required(&m.nvars, "N")?;
            let kappa = required(&m.kappa, "kappa")?;
            let n = required(&a.n, "n")?;
            let rep = lemma_action_check(&n, nvars, &kappa)?;
            fields.insert("n".into(), n.to_string());
            Ok(report(
                "lemma",
                rep.holds,
                ModelDescriptor::bare("genfunc", nvars, &kappa),
                fields,
                Basis::M,
                sym_terms(&rep.residual),
            ))
        }
        Scope::Masses => {
            let kappa = required(&m.kappa, "kappa")?;
            let masses = required(&a.masses, "masses")?.0;
            let spec = MassSpec::new(masses, kappa.clone())?;
            let rep = mass_identity_check(&spec)?;
            fields.insert("E0".into(), format_rat(&rep.e0));
            fields.insert("particles".into(), spec.count().to_string());
            Ok(report(
                "masses",
                rep.holds,
                ModelDescriptor::bare("masses", spec.count(), &kappa),
                fields,
                Basis::X,
                poly_terms(&rep.residual),
            ))
        }
        Scope::Corollary => {
            let nvars = required(&m.nvars, "N")?;
            let kappa = required(&m.kappa, "kappa")?;
            let c = corollary_constant(nvars, &kappa);
            let mut masses = vec![int(1); nvars];
            masses.extend(vec![int(-1); nvars]);
            let rep = mass_identity_check(&MassSpec::new(masses, kappa.clone())?)?;
            fields.insert("C_N".into(), format_rat(&c));
            fields.insert("E0_split".into(), format_rat(&rep.e0));
            Ok(report(
                "corollary",
                rep.holds && rep.e0 == c,
                ModelDescriptor::bare("masses", 2 * nvars, &kappa),
                fields,
                Basis::X,
                poly_terms(&rep.residual),
            ))
        }
        Scope::Completeness => {
            let model = m.build()?;
            let scheme = resolve_scheme(a.scheme, &model)?;
            let rep = completeness_check(&model, a.maxweight, scheme)?;
            fields.insert("scheme".into(), scheme_name(scheme).into());
            fields.insert("maxweight".into(), a.maxweight.to_string());
            fields.insert("size".into(), rep.labels.len().to_string());
            fields.insert("rank".into(), rep.rank.to_string());
            fields.insert("determinant".into(), format_rat(&rep.determinant));
            fields.insert("invertible".into(), rep.invertible.to_string());
            fields.insert("unitriangular_in_g".into(), rep.unitriangular_in_g.to_string());
            Ok(report(
                "completeness",
                rep.invertible,
                ModelDescriptor::from_model(&model),
                fields,
                Basis::M,
                Vec::new(),
            ))
        }
        Scope::Eigen => {
            let model = m.build()?;
            let scheme = resolve_scheme(a.scheme, &model)?;
            let conv = a.convention.unwrap_or_default();
            let (checked, failed) = eigen_sweep(&model, a.maxweight, scheme, conv)?;
            let formula = match scheme {
                Scheme::General(s) => s,
                Scheme::Calogero => CoefficientScheme::Derived,
            };
            let harness = convention_harness(std::slice::from_ref(&model), a.maxweight, formula)?;
            let matching: Vec<String> =
                harness.matching(model.preset).iter().map(ToString::to_string).collect();
            fields.insert("scheme".into(), scheme_name(scheme).into());
            fields.insert("convention".into(), conv.to_string());
            fields.insert("maxweight".into(), a.maxweight.to_string());
            fields.insert("checked".into(), checked.to_string());
            fields.insert("failed".into(), failed.join(" "));
            fields.insert(
                "matching_conventions".into(),
                if matching.is_empty() { "none".into() } else { matching.join(" ") },
            );
            Ok(report(
                "eigen",
                failed.is_empty(),
                ModelDescriptor::from_model(&model),
                fields,
                Basis::M,
                Vec::new(),
            ))
        }
    }
}

/// Checks every `|λ| ≤ maxweight`; returns the count and the failing labels.
fn eigen_sweep(
    model: &ModelSpec,
    maxweight: u32,
    scheme: Scheme,
    conv: Convention,
) -> Result<(usize, Vec<String>), CliError> {
    let fbasis = FBasis::new(model.nvars, model.kappa.clone());
    let mut failed = Vec::new();
    let labels = partitions_up_to(maxweight, model.nvars);
    for lam in &labels {
        let n = lam.to_intvec();
        let mut r = eigenfunction(model, &n, scheme, &fbasis)?;
        let read_at = if conv.reversed { n.reversed() } else { n.clone() };
        r.eigenvalue = scheme_eigenvalue(model, &read_at, scheme);
        let rep = oracle_eigen_check(model, &r, conv.sign())?;
        if !(rep.is_eigenvector && rep.matches_formula) {
            failed.push(lam.to_string());
        }
    }
    Ok((labels.len(), failed))
}

fn cmd_bench(a: &BenchArgs) -> Result<String, CliError> {
    let mut rows = vec![["suite", "N", "weight", "index", "route", "micros", "terms"]
        .map(String::from)
        .to_vec()];
    let suites: Vec<&str> = a.suite.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    if let Some(bad) = suites.iter().find(|s| !matches!(**s, "f" | "u")) {
        return Err(usage(format!("unknown bench suite {bad:?} (expected f or u)")));
    }
    let timed = |f: &mut dyn FnMut() -> Result<usize, CliError>| -> Result<(u128, usize), CliError> {
        let start = Instant::now();
        let terms = f()?;
        Ok((start.elapsed().as_micros(), terms))
    };
    for suite in suites {
        for nvars in 1..=a.max_nvars {
            for w in 0..=a.max_weight {
                let mut parts = vec![0i64; nvars];
                parts[0] = w as i64;
                let n = IntVec::new(parts);
                let k = &a.kappa;
                let routes: [Route; 2] = match suite {
                    "f" => [
                        ("vector", Box::new(|| Ok(f_vector(&n, k).len()))),
                        ("series", Box::new(|| Ok(f_truncated_series(&n, k)?.len()))),
                    ],
                    _ => [
                        ("recursion", Box::new(|| Ok(u_coeffs_calogero(&n, nvars, k)?.len()))),
                        ("closed", Box::new(|| Ok(u_coeffs_calogero_closed(&n, nvars, k)?.len()))),
                    ],
                };
                for (route, mut f) in routes {
                    let (micros, terms) = timed(&mut *f)?;
                    rows.push(vec![
                        suite.to_string(),
                        nvars.to_string(),
                        w.to_string(),
                        n.to_string(),
                        route.to_string(),
                        micros.to_string(),
                        terms.to_string(),
                    ]);
                }
            }
        }
    }
    Ok(render::table_csv(&rows))
}
