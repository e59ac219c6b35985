//! Binomial relations and presentations, with a JSON form that round-trips.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::coeff::{LaurentMonomial, ParamNames};
use crate::error::{Error, Result};
use crate::qspace::{deglex_compare, Word};

/// `lead - coeff · tail` with `lead ≻ tail` in deglex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinomialRelation {
    pub lead: Word,
    pub coeff: LaurentMonomial,
    pub tail: Word,
}

impl BinomialRelation {
    pub fn new(lead: Word, coeff: LaurentMonomial, tail: Word) -> Result<Self> {
        if lead.len() != tail.len() {
            return Err(Error::MalformedRelation(format!(
                "lead {:?} and tail {:?} have different lengths",
                lead.letters(),
                tail.letters()
            )));
        }
        if deglex_compare(&lead, &tail).is_le() {
            return Err(Error::MalformedRelation(format!(
                "lead {:?} is not larger than tail {:?}",
                lead.letters(),
                tail.letters()
            )));
        }
        Ok(Self { lead, coeff, tail })
    }

    pub(crate) fn new_unchecked(lead: Word, coeff: LaurentMonomial, tail: Word) -> Self {
        debug_assert!(deglex_compare(&lead, &tail).is_gt());
        Self { lead, coeff, tail }
    }

    /// `y1*y1 - q^2 y0*y2`; a unit coefficient is omitted.
    pub fn to_text(&self, p: &Presentation) -> String {
        let lead = self.lead.to_text(&p.generator_labels);
        let tail = self.tail.to_text(&p.generator_labels);
        if self.coeff.is_unit() {
            format!("{lead} - {tail}")
        } else {
            format!("{lead} - {} {tail}", self.coeff.to_text(&p.params))
        }
    }
}

/// Which construction produced a presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Provenance {
    QuantumSpace,
    VeroneseR1,
    VeroneseR2,
    VeroneseR1Prime,
    VeroneseKernel,
    LiftedKernel,
    SegreSpace,
    SegreKernel,
    KoszulDual,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Size data of the construction. `big_n + 1` is the number of generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Header {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(rename = "N")]
    pub big_n: usize,
}

impl Header {
    pub fn space(n: usize) -> Self {
        Self {
            n,
            d: None,
            m: None,
            big_n: n,
        }
    }

    pub fn veronese(n: usize, d: usize, big_n: usize) -> Self {
        Self {
            n,
            d: Some(d),
            m: None,
            big_n,
        }
    }

    pub fn segre(n: usize, m: usize) -> Self {
        Self {
            n,
            d: None,
            m: Some(m),
            big_n: (n + 1) * (m + 1) - 1,
        }
    }
}

/// Generators, binomial relations and optional monomial relations.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub provenance: Provenance,
    pub header: Header,
    pub params: Arc<ParamNames>,
    pub generator_labels: Vec<String>,
    pub relations: Vec<BinomialRelation>,
    pub monomial_relations: Vec<Word>,
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.provenance == other.provenance
            && self.header == other.header
            && self.params.names() == other.params.names()
            && self.generator_labels == other.generator_labels
            && self.relations == other.relations
            && self.monomial_relations == other.monomial_relations
    }
}

impl Eq for Presentation {}

#[derive(Serialize, Deserialize)]
struct RelationJson {
    lead: Vec<usize>,
    coeff: Vec<(String, i64)>,
    tail: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PresentationJson {
    provenance: Provenance,
    header: Header,
    params: Vec<String>,
    generators: Vec<String>,
    relations: Vec<RelationJson>,
    #[serde(default)]
    monomial_relations: Vec<Vec<usize>>,
}

impl Presentation {
    pub fn num_generators(&self) -> usize {
        self.generator_labels.len()
    }

    pub fn leads(&self) -> impl Iterator<Item = &Word> {
        self.relations.iter().map(|r| &r.lead)
    }

    /// One line per relation, binomials first.
    pub fn text_lines(&self) -> Vec<String> {
        let mut lines: Vec<String> = self.relations.iter().map(|r| r.to_text(self)).collect();
        lines.extend(
            self.monomial_relations
                .iter()
                .map(|w| w.to_text(&self.generator_labels)),
        );
        lines
    }

    /// Pretty JSON, newline-terminated.
    pub fn to_json(&self) -> String {
        let doc = PresentationJson {
            provenance: self.provenance,
            header: self.header,
            params: self.params.names().to_vec(),
            generators: self.generator_labels.clone(),
            relations: self
                .relations
                .iter()
                .map(|r| RelationJson {
                    lead: r.lead.0.clone(),
                    coeff: r.coeff.to_named_pairs(&self.params),
                    tail: r.tail.0.clone(),
                })
                .collect(),
            monomial_relations: self
                .monomial_relations
                .iter()
                .map(|w| w.0.clone())
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("presentation serializes");
        s.push('\n');
        s
    }

    /// Parses the output of [`Presentation::to_json`], validating letters,
    /// lead/tail order and uniqueness of leads.
    pub fn from_json(s: &str) -> Result<Self> {
        let doc: PresentationJson = serde_json::from_str(s)?;
        let mut params = ParamNames::new();
        for name in doc.params {
            params.push(name)?;
        }
        let size = doc.generators.len();
        let check = |w: &[usize]| -> Result<Word> {
            if let Some(&bad) = w.iter().find(|&&k| k >= size) {
                return Err(Error::MalformedRelation(format!(
                    "letter {bad} outside 0..{size}"
                )));
            }
            Ok(Word(w.to_vec()))
        };
        let mut relations = Vec::with_capacity(doc.relations.len());
        let mut seen = HashSet::new();
        for r in doc.relations {
            let lead = check(&r.lead)?;
            if !seen.insert(lead.clone()) {
                return Err(Error::MalformedRelation(format!(
                    "duplicate lead {:?}",
                    lead.letters()
                )));
            }
            let coeff = LaurentMonomial::from_named_pairs(&r.coeff, &params)?;
            relations.push(BinomialRelation::new(lead, coeff, check(&r.tail)?)?);
        }
        let monomial_relations = doc
            .monomial_relations
            .iter()
            .map(|w| check(w))
            .collect::<Result<_>>()?;
        Ok(Self {
            provenance: doc.provenance,
            header: doc.header,
            params: Arc::new(params),
            generator_labels: doc.generators,
            relations,
            monomial_relations,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Presentation {
        let mut names = ParamNames::new();
        let q10 = names.push("q10").unwrap();
        let q21 = names.push("q21").unwrap();
        Presentation {
            provenance: Provenance::QuantumSpace,
            header: Header::space(2),
            params: Arc::new(names),
            generator_labels: vec!["x0".into(), "x1".into(), "x2".into()],
            relations: vec![
                BinomialRelation::new(
                    Word(vec![1, 0]),
                    LaurentMonomial::param(q10),
                    Word(vec![0, 1]),
                )
                .unwrap(),
                BinomialRelation::new(
                    Word(vec![2, 1]),
                    LaurentMonomial::from_pairs([(q10, 2), (q21, -1)]),
                    Word(vec![1, 2]),
                )
                .unwrap(),
                BinomialRelation::new(Word(vec![2, 0]), LaurentMonomial::unit(), Word(vec![0, 2]))
                    .unwrap(),
            ],
            monomial_relations: vec![Word(vec![1, 1])],
        }
    }

    #[test]
    fn text_lines() {
        let p = sample();
        assert_eq!(
            p.text_lines(),
            [
                "x1*x0 - q10 x0*x1",
                "x2*x1 - q10^2*q21^-1 x1*x2",
                "x2*x0 - x0*x2",
                "x1*x1"
            ]
        );
    }

    #[test]
    fn json_shape() {
        let json = sample().to_json();
        assert!(json.ends_with("}\n"));
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["provenance"], "QuantumSpace");
        assert_eq!(v["header"]["N"], 2);
        assert!(v["header"].get("d").is_none());
        assert_eq!(
            v["relations"][0],
            serde_json::json!({"lead":[1,0],"coeff":[["q10",1]],"tail":[0,1]})
        );
        assert_eq!(
            v["relations"][1]["coeff"],
            serde_json::json!([["q10", 2], ["q21", -1]])
        );
    }

    #[test]
    fn json_round_trip() {
        let p = sample();
        let back = Presentation::from_json(&p.to_json()).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn relation_order_is_checked() {
        assert!(
            BinomialRelation::new(Word(vec![0, 1]), LaurentMonomial::unit(), Word(vec![1, 0]))
                .is_err()
        );
        assert!(
            BinomialRelation::new(Word(vec![1, 1]), LaurentMonomial::unit(), Word(vec![1, 1]))
                .is_err()
        );
        assert!(
            BinomialRelation::new(Word(vec![1]), LaurentMonomial::unit(), Word(vec![0, 0]))
                .is_err()
        );
    }

    #[test]
    fn malformed_json_is_rejected() {
        let good = sample().to_json();
        let dup = good.replacen(
            "\"lead\": [\n        2,\n        1\n      ]",
            "\"lead\": [\n        1,\n        0\n      ]",
            1,
        );
        assert_ne!(dup, good);
        assert!(matches!(
            Presentation::from_json(&dup),
            Err(Error::MalformedRelation(_))
        ));

        let unknown = good.replacen("\"q21\",\n          -1", "\"q99\",\n          -1", 1);
        assert_ne!(unknown, good);
        assert!(matches!(
            Presentation::from_json(&unknown),
            Err(Error::UnknownParameter(_))
        ));

        assert!(matches!(Presentation::from_json("{"), Err(Error::Json(_))));
    }
}
