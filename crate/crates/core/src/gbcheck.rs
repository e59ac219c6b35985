//! Certification of quadratic binomial rewriting systems.
//!
//! In the free algebra a system is a Gröbner basis iff every overlap
//! `abt` (leads `ab`, `bt`) resolves, which for quadratic systems is
//! equivalent to the number of length-3 normal words matching `dim A_3`.
//! Inside a quantum space only the counting criterion is used: the ordered
//! words avoiding all leads must number `dim B_3`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coeff::LaurentMonomial;
use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::qspace::{deglex_compare, DeformationMatrix, Strategy, Word};

/// Where the rules live.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Setting {
    FreeAlgebra,
    /// Rules are read modulo `x_b x_a = g_ba x_a x_b` of the ambient space.
    QuantumSpace(DeformationMatrix),
}

impl Setting {
    pub fn name(&self) -> &'static str {
        match self {
            Setting::FreeAlgebra => "FreeAlgebra",
            Setting::QuantumSpace(_) => "QuantumSpace",
        }
    }
}

/// `Some((c, t))` rewrites the lead to `c·t`, `None` rewrites it to zero.
pub type RuleTarget = Option<(LaurentMonomial, Word)>;

/// A set of quadratic rules `lead → coeff · tail`.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    pub id: String,
    alphabet_size: usize,
    rules: BTreeMap<Word, RuleTarget>,
    setting: Setting,
}

/// One rewrite applied during a reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub position: usize,
    pub coeff: LaurentMonomial,
    /// `None` once the word has been sent to zero.
    pub result: Option<Word>,
}

/// A reduction result with its step-by-step audit trail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    /// `None` means the word reduces to zero.
    pub normal: Option<(LaurentMonomial, Word)>,
    pub trace: Vec<TraceStep>,
}

/// The overlap ambiguity of rules with leads `ab` and `bt`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    pub overlap_word: Word,
    /// Rewriting `ab` first.
    pub left_result: RuleTarget,
    /// Rewriting `bt` first.
    pub right_result: RuleTarget,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solvability {
    pub solvable: bool,
    pub left: Reduction,
    pub right: Reduction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificationReport {
    pub system_id: String,
    pub setting: String,
    pub n_overlaps: usize,
    pub n_solvable: usize,
    pub normal3_count: u64,
    pub expected_dim3: u64,
    pub pass: bool,
}

impl CertificationReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        format!(
            "{}: {} [{}] overlaps {}/{} solvable, |N_3| = {} (expected {})\n",
            self.system_id,
            if self.pass { "PASS" } else { "FAIL" },
            self.setting,
            self.n_solvable,
            self.n_overlaps,
            self.normal3_count,
            self.expected_dim3
        )
    }
}

impl RewriteSystem {
    pub fn new(id: impl Into<String>, alphabet_size: usize, setting: Setting) -> Result<Self> {
        if let Setting::QuantumSpace(g) = &setting {
            if g.size() != alphabet_size {
                return Err(Error::InvalidArgument(format!(
                    "ambient matrix has size {}, alphabet has {alphabet_size} letters",
                    g.size()
                )));
            }
        }
        Ok(Self {
            id: id.into(),
            alphabet_size,
            rules: BTreeMap::new(),
            setting,
        })
    }

    /// Binomial and monomial relations of `p` as rules.
    pub fn from_presentation(p: &Presentation, setting: Setting) -> Result<Self> {
        let h = &p.header;
        let mut id = format!("{} n={}", p.provenance, h.n);
        if let Some(d) = h.d {
            id.push_str(&format!(" d={d}"));
        }
        if let Some(m) = h.m {
            id.push_str(&format!(" m={m}"));
        }
        let mut sys = Self::new(id, p.num_generators(), setting)?;
        for r in &p.relations {
            sys.add_rule(r.lead.clone(), r.coeff.clone(), r.tail.clone())?;
        }
        for w in &p.monomial_relations {
            sys.add_monomial_rule(w.clone())?;
        }
        Ok(sys)
    }

    fn check_lead(&self, lead: &Word) -> Result<()> {
        if lead.len() != 2 {
            return Err(Error::MalformedRelation(format!(
                "lead {:?} is not quadratic",
                lead.letters()
            )));
        }
        if lead.letters().iter().any(|&k| k >= self.alphabet_size) {
            return Err(Error::MalformedRelation(format!(
                "lead {:?} uses a letter outside the alphabet",
                lead.letters()
            )));
        }
        if matches!(self.setting, Setting::QuantumSpace(_)) && !lead.is_ordered() {
            return Err(Error::MalformedRelation(format!(
                "lead {:?} is not an ordered word",
                lead.letters()
            )));
        }
        if self.rules.contains_key(lead) {
            return Err(Error::MalformedRelation(format!(
                "duplicate lead {:?}",
                lead.letters()
            )));
        }
        Ok(())
    }

    pub fn add_rule(&mut self, lead: Word, coeff: LaurentMonomial, tail: Word) -> Result<()> {
        self.check_lead(&lead)?;
        if tail.len() != 2 || tail.letters().iter().any(|&k| k >= self.alphabet_size) {
            return Err(Error::MalformedRelation(format!(
                "tail {:?} is not a quadratic word over the alphabet",
                tail.letters()
            )));
        }
        if deglex_compare(&lead, &tail).is_le() {
            return Err(Error::MalformedRelation(format!(
                "tail {:?} is not smaller than lead {:?}",
                tail.letters(),
                lead.letters()
            )));
        }
        if matches!(self.setting, Setting::QuantumSpace(_)) && !tail.is_ordered() {
            return Err(Error::MalformedRelation(format!(
                "tail {:?} is not an ordered word",
                tail.letters()
            )));
        }
        self.rules.insert(lead, Some((coeff, tail)));
        Ok(())
    }

    /// Rule `lead → 0`.
    pub fn add_monomial_rule(&mut self, lead: Word) -> Result<()> {
        self.check_lead(&lead)?;
        self.rules.insert(lead, None);
        Ok(())
    }

    pub fn remove_rule(&mut self, lead: &Word) -> Option<RuleTarget> {
        self.rules.remove(lead)
    }

    /// Multiplies the coefficient of the rule at `lead` by `factor`.
    pub fn scale_rule(&mut self, lead: &Word, factor: &LaurentMonomial) -> Result<()> {
        match self.rules.get_mut(lead) {
            Some(Some((c, _))) => {
                *c = c.mul(factor);
                Ok(())
            }
            _ => Err(Error::InvalidArgument(format!(
                "no binomial rule with lead {:?}",
                lead.letters()
            ))),
        }
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn setting(&self) -> &Setting {
        &self.setting
    }

    pub fn rules(&self) -> impl Iterator<Item = (&Word, &RuleTarget)> {
        self.rules.iter()
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn is_lead(&self, a: usize, b: usize) -> bool {
        self.rules.contains_key(&Word(vec![a, b]))
    }

    // The rewrite applicable to the pair (a, b), own rules first, then the
    // ambient commutation rules.
    fn rewrite(&self, a: usize, b: usize) -> Option<RuleTarget> {
        if let Some(t) = self.rules.get(&Word(vec![a, b])) {
            return Some(t.clone());
        }
        match &self.setting {
            Setting::QuantumSpace(g) if a > b => {
                Some(Some((g.entry(a, b).clone(), Word(vec![b, a]))))
            }
            _ => None,
        }
    }

    /// Full reduction of `w` with the given choice of redex.
    pub fn reduce_with(&self, w: &Word, strategy: Strategy) -> Result<Reduction> {
        let bound = (w.len() * w.len() * self.alphabet_size * self.alphabet_size).max(16);
        let mut rng = match strategy {
            Strategy::RandomSeeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        };
        let mut coeff = LaurentMonomial::unit();
        let mut current = w.clone();
        let mut trace = Vec::new();
        loop {
            let redexes: Vec<usize> = current
                .letters()
                .windows(2)
                .enumerate()
                .filter(|(_, p)| self.rewrite(p[0], p[1]).is_some())
                .map(|(i, _)| i)
                .collect();
            if redexes.is_empty() {
                return Ok(Reduction {
                    normal: Some((coeff, current)),
                    trace,
                });
            }
            if trace.len() >= bound {
                return Err(Error::Internal(format!(
                    "reduction of {:?} in {} exceeded {bound} steps",
                    w.letters(),
                    self.id
                )));
            }
            let position = match strategy {
                Strategy::Leftmost => redexes[0],
                Strategy::Rightmost => redexes[redexes.len() - 1],
                Strategy::RandomSeeded(_) => {
                    let rng = rng.as_mut().unwrap();
                    redexes[rng.gen_range(0..redexes.len())]
                }
            };
            let l = current.letters();
            match self.rewrite(l[position], l[position + 1]).unwrap() {
                None => {
                    trace.push(TraceStep {
                        position,
                        coeff: LaurentMonomial::unit(),
                        result: None,
                    });
                    return Ok(Reduction {
                        normal: None,
                        trace,
                    });
                }
                Some((c, tail)) => {
                    let mut next = l[..position].to_vec();
                    next.extend_from_slice(tail.letters());
                    next.extend_from_slice(&l[position + 2..]);
                    coeff = coeff.mul(&c);
                    current = Word(next);
                    trace.push(TraceStep {
                        position,
                        coeff: c,
                        result: Some(current.clone()),
                    });
                }
            }
        }
    }

    /// Normal form of `w` as a list of terms: one term, or none when `w`
    /// reduces to zero.
    pub fn reduce_word(&self, w: &Word) -> Result<Vec<(LaurentMonomial, Word)>> {
        Ok(self
            .reduce_with(w, Strategy::Leftmost)?
            .normal
            .into_iter()
            .collect())
    }

    fn reduce_target(&self, target: &RuleTarget) -> Result<Reduction> {
        match target {
            None => Ok(Reduction {
                normal: None,
                trace: Vec::new(),
            }),
            Some((c, w)) => {
                let mut r = self.reduce_with(w, Strategy::Leftmost)?;
                if let Some((rc, _)) = &mut r.normal {
                    *rc = c.mul(rc);
                }
                Ok(r)
            }
        }
    }

    fn require_free(&self) -> Result<()> {
        match self.setting {
            Setting::FreeAlgebra => Ok(()),
            Setting::QuantumSpace(_) => Err(Error::InvalidArgument(
                "overlap compositions are only defined in the free algebra".into(),
            )),
        }
    }

    /// All one-letter overlaps `ab·t = a·bt` of leads, self-overlaps included,
    /// sorted by overlap word.
    pub fn overlap_compositions(&self) -> Result<Vec<Composition>> {
        self.require_free()?;
        let mut out = Vec::new();
        for (l1, t1) in &self.rules {
            let (a, b) = (l1.0[0], l1.0[1]);
            for (l2, t2) in self.rules.range(Word(vec![b, 0])..) {
                if l2.0[0] != b {
                    break;
                }
                let t = l2.0[1];
                let left_result = t1
                    .as_ref()
                    .map(|(c, tail)| (c.clone(), tail.concat(&Word(vec![t]))));
                let right_result = t2
                    .as_ref()
                    .map(|(c, tail)| (c.clone(), Word(vec![a]).concat(tail)));
                out.push(Composition {
                    overlap_word: Word(vec![a, b, t]),
                    left_result,
                    right_result,
                });
            }
        }
        Ok(out)
    }

    /// Reduces both branches of `comp` to normal form and compares them.
    pub fn check_solvable(&self, comp: &Composition) -> Result<Solvability> {
        self.require_free()?;
        let left = self.reduce_target(&comp.left_result)?;
        let right = self.reduce_target(&comp.right_result)?;
        Ok(Solvability {
            solvable: left.normal == right.normal,
            left,
            right,
        })
    }

    // M[a][b] = 1 iff ab is allowed.
    fn transitions(&self, ordered: bool) -> Vec<Vec<bool>> {
        let k = self.alphabet_size;
        (0..k)
            .map(|a| {
                (0..k)
                    .map(|b| !self.is_lead(a, b) && (!ordered || a <= b))
                    .collect()
            })
            .collect()
    }

    fn count_paths(&self, length: usize, ordered: bool) -> BigUint {
        if length == 0 {
            return BigUint::from(1u32);
        }
        let m = self.transitions(ordered);
        let k = self.alphabet_size;
        let mut v = vec![BigUint::from(1u32); k];
        for _ in 1..length {
            let mut next = vec![BigUint::zero(); k];
            for a in 0..k {
                for b in 0..k {
                    if m[a][b] {
                        next[b] += &v[a];
                    }
                }
            }
            v = next;
        }
        v.into_iter().sum()
    }

    /// Words of the given length with no lead as a factor.
    pub fn count_normal_words_free(&self, length: usize) -> BigUint {
        self.count_paths(length, false)
    }

    /// Ordered words of the given length with no lead as a factor.
    pub fn count_normal_ordered_words(&self, length: usize) -> BigUint {
        self.count_paths(length, true)
    }

    /// PASS iff the length-3 normal-word count equals `expected_dim3` and,
    /// in the free algebra, every overlap composition is solvable.
    pub fn certify_quadratic_gb(&self, expected_dim3: u64) -> Result<CertificationReport> {
        let (n_overlaps, n_solvable, count) = match self.setting {
            Setting::FreeAlgebra => {
                let comps = self.overlap_compositions()?;
                let mut solvable = 0;
                for c in &comps {
                    if self.check_solvable(c)?.solvable {
                        solvable += 1;
                    }
                }
                (comps.len(), solvable, self.count_normal_words_free(3))
            }
            Setting::QuantumSpace(_) => (0, 0, self.count_normal_ordered_words(3)),
        };
        let normal3_count = count
            .to_u64()
            .ok_or_else(|| Error::Internal("normal-word count exceeds u64".into()))?;
        Ok(CertificationReport {
            system_id: self.id.clone(),
            setting: self.setting.name().to_owned(),
            n_overlaps,
            n_solvable,
            normal3_count,
            expected_dim3,
            pass: n_solvable == n_overlaps && normal3_count == expected_dim3,
        })
    }
}
