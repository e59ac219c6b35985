//! Text and JSON rendering of presentations and matrices, symbolic or
//! evaluated at exact rational parameter values.

use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::coeff::{ParamAssignment, ParamNames};
use crate::error::Result;
use crate::presentation::Presentation;
use crate::qspace::DeformationMatrix;

/// Text styling; `QGROBNER_COLOR=1` turns on ANSI colours.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TextStyle {
    pub color: bool,
}

impl TextStyle {
    pub fn plain() -> Self {
        Self { color: false }
    }

    pub fn from_env() -> Self {
        Self {
            color: std::env::var("QGROBNER_COLOR").is_ok_and(|v| v.trim() == "1"),
        }
    }

    fn lead(&self, s: &str) -> String {
        if self.color {
            format!("\x1b[1m{s}\x1b[0m")
        } else {
            s.to_owned()
        }
    }

    fn coeff(&self, s: &str) -> String {
        if self.color {
            format!("\x1b[36m{s}\x1b[0m")
        } else {
            s.to_owned()
        }
    }
}

fn finish(lines: Vec<String>) -> String {
    let mut out = lines.join("\n");
    out.push('\n');
    out
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("render output serializes");
    s.push('\n');
    s
}

pub fn presentation_text(p: &Presentation, style: TextStyle) -> String {
    let mut lines = Vec::with_capacity(p.relations.len() + p.monomial_relations.len());
    for r in &p.relations {
        let lead = style.lead(&r.lead.to_text(&p.generator_labels));
        let tail = r.tail.to_text(&p.generator_labels);
        if r.coeff.is_unit() {
            lines.push(format!("{lead} - {tail}"));
        } else {
            let c = style.coeff(&r.coeff.to_text(&p.params));
            lines.push(format!("{lead} - {c} {tail}"));
        }
    }
    for w in &p.monomial_relations {
        lines.push(style.lead(&w.to_text(&p.generator_labels)));
    }
    finish(lines)
}

pub fn presentation_json(p: &Presentation) -> String {
    p.to_json()
}

/// `a/b` or `a`.
pub fn rational_text(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn signed_term(c: &BigRational, tail: &str, style: TextStyle) -> String {
    let (sign, abs) = if c.is_negative() {
        ("+", -c)
    } else {
        ("-", c.clone())
    };
    if abs.is_one() {
        format!("{sign} {tail}")
    } else {
        format!("{sign} {} {tail}", style.coeff(&rational_text(&abs)))
    }
}

/// Relations with coefficients evaluated under `assignment`.
pub fn presentation_eval_text(
    p: &Presentation,
    assignment: &ParamAssignment,
    style: TextStyle,
) -> Result<String> {
    let mut lines = Vec::with_capacity(p.relations.len() + p.monomial_relations.len());
    for r in &p.relations {
        let c = r.coeff.eval(assignment)?;
        let lead = style.lead(&r.lead.to_text(&p.generator_labels));
        let tail = r.tail.to_text(&p.generator_labels);
        lines.push(format!("{lead} {}", signed_term(&c, &tail, style)));
    }
    for w in &p.monomial_relations {
        lines.push(style.lead(&w.to_text(&p.generator_labels)));
    }
    Ok(finish(lines))
}

#[derive(Serialize)]
struct EvalRelationJson {
    lead: Vec<usize>,
    coeff: String,
    tail: Vec<usize>,
}

#[derive(Serialize)]
struct EvalPresentationJson<'a> {
    provenance: String,
    header: crate::presentation::Header,
    assignment: Vec<(String, String)>,
    generators: &'a [String],
    relations: Vec<EvalRelationJson>,
    monomial_relations: Vec<&'a [usize]>,
}

fn assignment_pairs(names: &ParamNames, assignment: &ParamAssignment) -> Vec<(String, String)> {
    names
        .ids()
        .filter_map(|id| {
            assignment.get(id).map(|v| {
                (
                    names.name(id).unwrap_or_default().to_owned(),
                    rational_text(v),
                )
            })
        })
        .collect()
}

pub fn presentation_eval_json(p: &Presentation, assignment: &ParamAssignment) -> Result<String> {
    let relations = p
        .relations
        .iter()
        .map(|r| {
            Ok(EvalRelationJson {
                lead: r.lead.0.clone(),
                coeff: rational_text(&r.coeff.eval(assignment)?),
                tail: r.tail.0.clone(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(json_line(&EvalPresentationJson {
        provenance: p.provenance.to_string(),
        header: p.header,
        assignment: assignment_pairs(&p.params, assignment),
        generators: &p.generator_labels,
        relations,
        monomial_relations: p.monomial_relations.iter().map(|w| w.letters()).collect(),
    }))
}

fn aligned(labels: &[String], cells: Vec<Vec<String>>) -> String {
    let mut width = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
    for row in &cells {
        for c in row {
            width = width.max(c.chars().count());
        }
    }
    let pad = |s: &str| format!("{s:>width$}");
    let mut lines = Vec::with_capacity(labels.len() + 1);
    let mut head = vec![pad("")];
    head.extend(labels.iter().map(|l| pad(l)));
    lines.push(head.join("  ").trim_end().to_owned());
    for (label, row) in labels.iter().zip(cells) {
        let mut line = vec![pad(label)];
        line.extend(row.iter().map(|c| pad(c)));
        lines.push(line.join("  "));
    }
    finish(lines)
}

/// Matrix with row and column labels; entry `(r, c)` is the coefficient in
/// `label_r * label_c = entry · label_c * label_r`.
pub fn matrix_text(m: &DeformationMatrix, names: &ParamNames, labels: &[String]) -> String {
    let cells = m
        .rows()
        .map(|row| row.iter().map(|e| e.to_text(names)).collect())
        .collect();
    aligned(labels, cells)
}

pub fn matrix_eval_text(
    m: &DeformationMatrix,
    labels: &[String],
    assignment: &ParamAssignment,
) -> Result<String> {
    let cells = m
        .rows()
        .map(|row| {
            row.iter()
                .map(|e| Ok(rational_text(&e.eval(assignment)?)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(aligned(labels, cells))
}

#[derive(Serialize)]
struct MatrixJson<'a, T> {
    size: usize,
    params: &'a [String],
    generators: &'a [String],
    entries: Vec<Vec<T>>,
}

pub fn matrix_json(m: &DeformationMatrix, names: &ParamNames, labels: &[String]) -> String {
    json_line(&MatrixJson {
        size: m.size(),
        params: names.names(),
        generators: labels,
        entries: m
            .rows()
            .map(|row| row.iter().map(|e| e.to_named_pairs(names)).collect())
            .collect(),
    })
}

pub fn matrix_eval_json(
    m: &DeformationMatrix,
    names: &ParamNames,
    labels: &[String],
    assignment: &ParamAssignment,
) -> Result<String> {
    let entries = m
        .rows()
        .map(|row| {
            row.iter()
                .map(|e| Ok(rational_text(&e.eval(assignment)?)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(json_line(&MatrixJson {
        size: m.size(),
        params: names.names(),
        generators: labels,
        entries,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::parse_rational;
    use crate::qspace::QuantumSpace;

    #[test]
    fn text_rendering() {
        let s = QuantumSpace::generic(2);
        let text = presentation_text(&s.relations(), TextStyle::plain());
        assert_eq!(
            text,
            "x1*x0 - q10 x0*x1\nx2*x0 - q20 x0*x2\nx2*x1 - q21 x1*x2\n"
        );
        let colored = presentation_text(&s.relations(), TextStyle { color: true });
        assert!(colored.contains("\x1b[1mx1*x0\x1b[0m"));
    }

    #[test]
    fn evaluated_rendering() {
        let s = QuantumSpace::generic(2);
        let p = s.relations();
        let a = ParamAssignment::parse(&["q10=1", "q20=-1", "q21=-2/3"], &p.params).unwrap();
        let text = presentation_eval_text(&p, &a, TextStyle::plain()).unwrap();
        assert_eq!(text, "x1*x0 - x0*x1\nx2*x0 + x0*x2\nx2*x1 + 2/3 x1*x2\n");

        let json = presentation_eval_json(&p, &a).unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["relations"][2]["coeff"], "-2/3");
        assert_eq!(v["assignment"][0], serde_json::json!(["q10", "1"]));

        let partial = ParamAssignment::parse(&["q10=2"], &p.params).unwrap();
        assert!(presentation_eval_text(&p, &partial, TextStyle::plain()).is_err());
    }

    #[test]
    fn matrix_rendering() {
        let s = QuantumSpace::generic(1);
        let text = matrix_text(s.matrix(), s.params(), s.labels());
        assert_eq!(
            text,
            "        x0    x1\n  x0     1  q^-1\n  x1     q     1\n"
        );
        let json = matrix_json(s.matrix(), s.params(), s.labels());
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["entries"][1][0], serde_json::json!([["q", 1]]));
        assert_eq!(v["entries"][0][0], serde_json::json!([]));

        let a = ParamAssignment::constant(s.params(), parse_rational("2").unwrap()).unwrap();
        let text = matrix_eval_text(s.matrix(), s.labels(), &a).unwrap();
        assert!(text.contains("1/2"));
    }
}
