//! CSV and LaTeX renderings. JSON is the lossless format; these are views.

use crate::doc::{Basis, OutputDocument, Term, VerifyReport};

fn csv_string(rows: &[Vec<String>]) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    for row in rows {
        w.write_record(row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flushing to memory")).expect("csv output is utf-8")
}

fn join(v: &[i64], sep: &str) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(sep)
}

/// One row per term: `basis,exponents,coeff`, exponents joined with `;`.
pub fn output_csv(doc: &OutputDocument) -> String {
    let mut rows = vec![vec!["basis".into(), "exponents".into(), "coeff".into()]];
    for t in &doc.terms {
        rows.push(vec![doc.basis.to_string(), join(&t.exponents, ";"), t.coeff.clone()]);
    }
    csv_string(&rows)
}

/// `key,value` rows, followed by residual terms as `residual[exps]` keys.
pub fn verify_csv(rep: &VerifyReport) -> String {
    let mut rows = vec![
        vec!["key".into(), "value".into()],
        vec!["scope".into(), rep.scope.clone()],
        vec!["holds".into(), rep.holds.to_string()],
    ];
    for (k, v) in &rep.fields {
        rows.push(vec![k.clone(), v.clone()]);
    }
    for t in &rep.residual {
        rows.push(vec![format!("residual[{}]", join(&t.exponents, ";")), t.coeff.clone()]);
    }
    csv_string(&rows)
}

/// Table of arbitrary rows, first row is the header.
pub fn table_csv(rows: &[Vec<String>]) -> String {
    csv_string(rows)
}

fn latex_rat(s: &str) -> (bool, String) {
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s),
    };
    let tex = match body.split_once('/') {
        Some((p, q)) => format!("\\frac{{{p}}}{{{q}}}"),
        None => body.to_string(),
    };
    (neg, tex)
}

fn latex_label(sym: &str, exps: &[i64]) -> String {
    format!("{sym}_{{({})}}", join(exps, ","))
}

fn latex_monomial(vars: &[(&str, i64)]) -> String {
    let factors: Vec<String> = vars
        .iter()
        .filter(|(_, e)| *e != 0)
        .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{{{e}}}") })
        .collect();
    factors.join(" ")
}

fn latex_basis_element(doc: &OutputDocument, t: &Term) -> String {
    match (doc.basis, doc.split) {
        (Basis::X, split) => {
            let names: Vec<String> = (0..t.exponents.len())
                .map(|j| match split {
                    Some(s) if j >= s => format!("\\tilde{{x}}_{{{}}}", j - s + 1),
                    _ => format!("x_{{{}}}", j + 1),
                })
                .collect();
            let vars: Vec<(&str, i64)> = names.iter().map(String::as_str).zip(t.exponents.iter().copied()).collect();
            latex_monomial(&vars)
        }
        (Basis::M, Some(s)) => {
            let (a, b) = t.exponents.split_at(s);
            let mut parts = Vec::new();
            if a.iter().any(|&e| e != 0) {
                parts.push(format!("{}(x)", latex_label("m", a)));
            }
            if b.iter().any(|&e| e != 0) {
                parts.push(format!("{}(\\tilde{{x}})", latex_label("m", b)));
            }
            parts.join(" ")
        }
        (basis, None) => {
            if basis == Basis::M && t.exponents.iter().all(|&e| e == 0) {
                String::new()
            } else {
                latex_label(basis.symbol(), &t.exponents)
            }
        }
        (basis, Some(_)) => latex_label(basis.symbol(), &t.exponents),
    }
}

/// `lhs = c_1 b_1 + c_2 b_2 + …` with basis elements written symbolically.
pub fn latex_sum(doc: &OutputDocument) -> String {
    if doc.terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, t) in doc.terms.iter().enumerate() {
        let (neg, c) = latex_rat(&t.coeff);
        let elem = latex_basis_element(doc, t);
        let sign = match (i, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        };
        out.push_str(sign);
        match (c.as_str(), elem.is_empty()) {
            (_, true) => out.push_str(&c),
            ("1", false) => out.push_str(&elem),
            (_, false) => out.push_str(&format!("{c} {elem}")),
        }
    }
    out
}

pub fn output_latex(doc: &OutputDocument) -> String {
    let lhs = match doc.command.as_str() {
        "eig" => latex_label("P", &doc.index),
        "deformed-f" => format!(
            "f_{{({});({})}}",
            join(&doc.index, ","),
            join(doc.index_tilde.as_deref().unwrap_or(&[]), ",")
        ),
        "apply" => "\\tilde{H} p".into(),
        _ => latex_label("f", &doc.index),
    };
    let mut out = format!("{lhs} = {}\n", latex_sum(doc));
    if let Some(e) = &doc.eigenvalue {
        let (neg, c) = latex_rat(e);
        out.push_str(&format!("% eigenvalue: {}{c}\n", if neg { "-" } else { "" }));
    }
    if let Some(v) = &doc.verification {
        out.push_str(&format!("% {}: {}\n", v.check, if v.passed { "passed" } else { "failed" }));
    }
    out
}

pub fn verify_latex(rep: &VerifyReport) -> String {
    let mut out = String::from("\\begin{tabular}{ll}\n");
    out.push_str(&format!("scope & {} \\\\\n", rep.scope));
    out.push_str(&format!("holds & {} \\\\\n", rep.holds));
    for (k, v) in &rep.fields {
        let (neg, c) = latex_rat(v);
        let shown = if v.parse::<f64>().is_ok() || v.contains('/') {
            format!("${}{c}$", if neg { "-" } else { "" })
        } else {
            v.replace('_', "\\_")
        };
        out.push_str(&format!("{} & {shown} \\\\\n", k.replace('_', "\\_")));
    }
    out.push_str("\\end{tabular}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doc::ModelDescriptor;
    use cspoly::algebra::rat;

    fn doc(basis: Basis, split: Option<usize>, terms: &[(&[i64], &str)]) -> OutputDocument {
        OutputDocument {
            command: "eig".into(),
            model: ModelDescriptor::bare("hermite", 1, &rat(1, 1)),
            index: vec![2],
            index_tilde: None,
            split,
            eigenvalue: Some("4".into()),
            basis,
            terms: terms
                .iter()
                .map(|(e, c)| Term { exponents: e.to_vec(), coeff: c.to_string() })
                .collect(),
            verification: None,
        }
    }

    #[test]
    fn latex_of_a_monomial_expansion() {
        let d = doc(Basis::M, None, &[(&[2], "1"), (&[0], "-1/2")]);
        assert_eq!(latex_sum(&d), "m_{(2)} - \\frac{1}{2}");
        assert!(output_latex(&d).starts_with("P_{(2)} = "));
    }

    #[test]
    fn latex_of_two_species_monomials() {
        let d = doc(Basis::X, Some(1), &[(&[1, 0], "1/2"), (&[0, 1], "-1")]);
        assert_eq!(latex_sum(&d), "\\frac{1}{2} x_{1} - \\tilde{x}_{1}");
    }

    #[test]
    fn csv_has_a_header_and_one_row_per_term() {
        let d = doc(Basis::F, None, &[(&[1, -1], "3/4")]);
        assert_eq!(output_csv(&d), "basis,exponents,coeff\nf,1;-1,3/4\n");
    }
}
