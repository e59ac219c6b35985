//! The d-Veronese subalgebra of a quantum space.
//!
//! Degree-d ordered monomials `w_0 < w_1 < ... < w_N` become generators
//! `y_0..y_N`. Every product `w_i w_j` normalises to `φ_ij w_i' w_j'` with
//! `(i', j')` a pair whose concatenation is already ordered; all relations
//! of the Veronese presentation and all kernel bases are built from these
//! coefficients.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::coeff::LaurentMonomial;
use crate::error::{Error, Result};
use crate::presentation::{BinomialRelation, Header, Presentation, Provenance};
use crate::qspace::{binomial, DeformationMatrix, ExponentVector, QuantumSpace, Word};

/// The degree-d ordered monomials of `A^n_q`, increasing in deglex order.
#[derive(Clone, Debug)]
pub struct TermTable {
    n: usize,
    d: usize,
    terms: Vec<ExponentVector>,
    index_of: HashMap<ExponentVector, usize>,
}

impl TermTable {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidArgument("degree d must be at least 1".into()));
        }
        let mut terms = Vec::new();
        let mut current = Vec::with_capacity(d);
        push_ordered(n + 1, d, 0, &mut current, &mut terms);
        let index_of = terms
            .iter()
            .enumerate()
            .map(|(k, t)| (t.clone(), k))
            .collect();
        Ok(Self {
            n,
            d,
            terms,
            index_of,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `N + 1 = C(n+d, d)`.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `N`, the largest term index.
    pub fn big_n(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn terms(&self) -> &[ExponentVector] {
        &self.terms
    }

    pub fn term(&self, k: usize) -> &ExponentVector {
        &self.terms[k]
    }

    pub fn index(&self, alpha: &ExponentVector) -> Option<usize> {
        self.index_of.get(alpha).copied()
    }

    /// `w_k` as an ordered word over `x_0..x_n`.
    pub fn word(&self, k: usize) -> Word {
        self.terms[k].to_word()
    }

    /// `m(k)`: smallest generator index occurring in `w_k`.
    pub fn min_letter(&self, k: usize) -> usize {
        self.terms[k].0.iter().position(|&e| e > 0).unwrap()
    }

    /// `M(k)`: largest generator index occurring in `w_k`.
    pub fn max_letter(&self, k: usize) -> usize {
        self.terms[k].0.iter().rposition(|&e| e > 0).unwrap()
    }

    /// `w_i w_j` is an ordered word.
    pub fn is_c2(&self, i: usize, j: usize) -> bool {
        self.max_letter(i) <= self.min_letter(j)
    }
}

// Nondecreasing letter sequences of length `left` starting at `from`, in
// lexicographic order.
fn push_ordered(
    size: usize,
    left: usize,
    from: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<ExponentVector>,
) {
    if left == 0 {
        out.push(ExponentVector::of_word(&Word(current.clone()), size));
        return;
    }
    for k in from..size {
        current.push(k);
        push_ordered(size, left - 1, k, current, out);
        current.pop();
    }
}

/// Partition of the pairs `i <= j` into C2 (ordered product) and MV.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairClasses {
    pub c2: Vec<(usize, usize)>,
    pub mv: Vec<(usize, usize)>,
}

pub fn classify_pairs(table: &TermTable) -> PairClasses {
    let mut c2 = Vec::new();
    let mut mv = Vec::new();
    for i in 0..table.len() {
        for j in i..table.len() {
            if table.is_c2(i, j) {
                c2.push((i, j));
            } else {
                mv.push((i, j));
            }
        }
    }
    PairClasses { c2, mv }
}

/// Chains `i <= j <= k` with `(i, j)` and `(j, k)` in C2.
pub fn c3_set(table: &TermTable) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..table.len() {
        for j in i..table.len() {
            if !table.is_c2(i, j) {
                continue;
            }
            for k in j..table.len() {
                if table.is_c2(j, k) {
                    out.push((i, j, k));
                }
            }
        }
    }
    out
}

/// `Nor(w_i w_j) = phi · w_i' w_j'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiEntry {
    pub i: usize,
    pub j: usize,
    pub phi: LaurentMonomial,
    pub i_prime: usize,
    pub j_prime: usize,
}

pub fn phi(space: &QuantumSpace, table: &TermTable, i: usize, j: usize) -> PhiEntry {
    let nf = space.normal_form(&table.word(i).concat(&table.word(j)));
    let sorted = nf.term.to_word();
    let (left, right) = sorted.letters().split_at(table.d());
    let size = space.num_generators();
    let i_prime = table
        .index(&ExponentVector::of_word(&Word::from(left), size))
        .expect("first half of an ordered degree-2d word is a degree-d term");
    let j_prime = table
        .index(&ExponentVector::of_word(&Word::from(right), size))
        .expect("second half of an ordered degree-2d word is a degree-d term");
    PhiEntry {
        i,
        j,
        phi: nf.coeff,
        i_prime,
        j_prime,
    }
}

/// The three relation sets of the d-Veronese presentation.
#[derive(Clone, Debug)]
pub struct VeronesePresentation {
    /// `y_j y_i - φ_ji y_i' y_j'` for `i < j`.
    pub r1: Presentation,
    /// `y_i y_j - φ_ij y_i' y_j'` for `(i, j)` in MV.
    pub r2: Presentation,
    /// `y_j y_i - g_ji y_i y_j` for `i < j`.
    pub r1_prime: Presentation,
}

/// The Veronese map `v_{n,d}` from the derived quantum space on `y_0..y_N`
/// onto the d-Veronese subalgebra of `space`.
#[derive(Clone, Debug)]
pub struct VeroneseMap {
    space: QuantumSpace,
    table: TermTable,
    phis: Vec<PhiEntry>,
    labels: Vec<String>,
}

impl VeroneseMap {
    pub fn new(space: &QuantumSpace, d: usize) -> Result<Self> {
        let table = TermTable::new(space.n(), d)?;
        let size = table.len();
        let mut phis = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                phis.push(phi(space, &table, i, j));
            }
        }
        let labels = (0..size).map(|k| format!("y{k}")).collect();
        Ok(Self {
            space: space.clone(),
            table,
            phis,
            labels,
        })
    }

    pub fn space(&self) -> &QuantumSpace {
        &self.space
    }

    pub fn table(&self) -> &TermTable {
        &self.table
    }

    pub fn d(&self) -> usize {
        self.table.d()
    }

    pub fn big_n(&self) -> usize {
        self.table.big_n()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn phi(&self, i: usize, j: usize) -> &PhiEntry {
        &self.phis[i * self.table.len() + j]
    }

    pub fn classes(&self) -> PairClasses {
        classify_pairs(&self.table)
    }

    fn header(&self) -> Header {
        Header::veronese(self.space.n(), self.d(), self.big_n())
    }

    fn wrap(&self, provenance: Provenance, relations: Vec<BinomialRelation>) -> Presentation {
        Presentation {
            provenance,
            header: self.header(),
            params: self.space.params().clone(),
            generator_labels: self.labels.clone(),
            relations,
            monomial_relations: Vec::new(),
        }
    }

    fn phi_relation(&self, a: usize, b: usize) -> BinomialRelation {
        let e = self.phi(a, b);
        BinomialRelation::new_unchecked(
            Word(vec![a, b]),
            e.phi.clone(),
            Word(vec![e.i_prime, e.j_prime]),
        )
    }

    fn r1_relations(&self) -> Vec<BinomialRelation> {
        let size = self.table.len();
        let mut out = Vec::with_capacity(size * (size - 1) / 2);
        for i in 0..size {
            for j in i + 1..size {
                out.push(self.phi_relation(j, i));
            }
        }
        out
    }

    fn r2_relations(&self) -> Vec<BinomialRelation> {
        self.classes()
            .mv
            .into_iter()
            .map(|(i, j)| self.phi_relation(i, j))
            .collect()
    }

    pub fn presentation(&self) -> VeronesePresentation {
        let g = self.derived_matrix();
        let size = self.table.len();
        let mut r1_prime = Vec::with_capacity(size * (size - 1) / 2);
        for i in 0..size {
            for j in i + 1..size {
                r1_prime.push(BinomialRelation::new_unchecked(
                    Word(vec![j, i]),
                    g.entry(j, i).clone(),
                    Word(vec![i, j]),
                ));
            }
        }
        VeronesePresentation {
            r1: self.wrap(Provenance::VeroneseR1, self.r1_relations()),
            r2: self.wrap(Provenance::VeroneseR2, self.r2_relations()),
            r1_prime: self.wrap(Provenance::VeroneseR1Prime, r1_prime),
        }
    }

    /// `g_ji = φ_ji / φ_ij`.
    pub fn derived_matrix(&self) -> DeformationMatrix {
        DeformationMatrix::from_fn(self.table.len(), |r, c| {
            self.phi(r, c).phi.div(&self.phi(c, r).phi)
        })
        .expect("φ quotients form an anti-symmetric matrix")
    }

    /// The quantum space on `y_0..y_N` with matrix `g`.
    pub fn derived_space(&self) -> QuantumSpace {
        QuantumSpace::with_labels(
            self.derived_matrix(),
            self.space.params().clone(),
            self.labels.clone(),
        )
    }

    /// Reduced Gröbner basis of the kernel inside the derived quantum space:
    /// `y_i y_j - φ_ij y_i' y_j'` over MV, in lexicographic order.
    pub fn kernel_gb(&self) -> Presentation {
        self.wrap(Provenance::VeroneseKernel, self.r2_relations())
    }

    /// The two halves `(Re1, Re2)` of the kernel basis in the free algebra.
    pub fn lifted_kernel_parts(&self) -> (Presentation, Presentation) {
        (
            self.wrap(Provenance::LiftedKernel, self.r1_relations()),
            self.wrap(Provenance::LiftedKernel, self.r2_relations()),
        )
    }

    /// `Re1 ∪ Re2`, the reduced Gröbner basis of the kernel of
    /// `k<y_0..y_N> → A^(d)`.
    pub fn lifted_kernel_gb(&self) -> Presentation {
        let mut relations = self.r1_relations();
        relations.extend(self.r2_relations());
        self.wrap(Provenance::LiftedKernel, relations)
    }

    /// Substitutes `y_k ↦ w_k`.
    pub fn image(&self, w: &Word) -> Word {
        let mut letters = Vec::with_capacity(w.len() * self.d());
        for &k in w.letters() {
            letters.extend(self.table.word(k).letters());
        }
        Word(letters)
    }

    /// `dim A^(d)_k = C(n + kd, n)`.
    pub fn image_dim(&self, k: u64) -> BigUint {
        let n = self.space.n() as u64;
        binomial(n + k * self.d() as u64, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(space: &QuantumSpace, name: &str) -> LaurentMonomial {
        LaurentMonomial::param(space.params().lookup(name).unwrap())
    }

    #[test]
    fn term_tables() {
        let t = TermTable::new(1, 3).unwrap();
        let words: Vec<_> = (0..t.len()).map(|k| t.word(k).0).collect();
        assert_eq!(
            words,
            [vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 1], vec![1, 1, 1]]
        );

        let t = TermTable::new(2, 2).unwrap();
        let words: Vec<_> = (0..t.len()).map(|k| t.word(k).0).collect();
        assert_eq!(
            words,
            [
                vec![0, 0],
                vec![0, 1],
                vec![0, 2],
                vec![1, 1],
                vec![1, 2],
                vec![2, 2]
            ]
        );

        let t = TermTable::new(3, 1).unwrap();
        assert_eq!(t.len(), 4);
        assert!((0..4).all(|k| t.word(k).0 == vec![k]));

        assert!(TermTable::new(2, 0).is_err());
    }

    #[test]
    fn min_max_letters() {
        let t = TermTable::new(7, 6).unwrap();
        let k = t
            .index(&ExponentVector(vec![0, 0, 1, 0, 3, 0, 0, 2]))
            .unwrap();
        assert_eq!((t.min_letter(k), t.max_letter(k)), (2, 7));
        assert_eq!((t.min_letter(0), t.max_letter(0)), (0, 0));
        let t = TermTable::new(1, 3).unwrap();
        assert_eq!((t.min_letter(1), t.max_letter(1)), (0, 1));
    }

    #[test]
    fn pair_classes() {
        let t = TermTable::new(1, 3).unwrap();
        assert_eq!(classify_pairs(&t).mv, [(1, 1), (1, 2), (2, 2)]);
        let t = TermTable::new(2, 2).unwrap();
        assert_eq!(classify_pairs(&t).mv.len(), 6);
        let t = TermTable::new(1, 2).unwrap();
        let c = classify_pairs(&t);
        assert_eq!((c.c2.len(), c.mv.len()), (5, 1));
    }

    #[test]
    fn c3_counts() {
        assert_eq!(c3_set(&TermTable::new(1, 3).unwrap()).len(), 10);
        assert_eq!(c3_set(&TermTable::new(2, 2).unwrap()).len(), 28);
        assert_eq!(c3_set(&TermTable::new(3, 1).unwrap()).len(), 20);
    }

    #[test]
    fn phi_examples() {
        let s = QuantumSpace::generic(1);
        let t = TermTable::new(1, 3).unwrap();
        let e = phi(&s, &t, 1, 1);
        assert_eq!((e.phi, e.i_prime, e.j_prime), (q(&s, "q").pow(2), 0, 2));

        let s = QuantumSpace::generic(2);
        let t = TermTable::new(2, 2).unwrap();
        let e = phi(&s, &t, 2, 3);
        assert_eq!((e.phi, e.i_prime, e.j_prime), (q(&s, "q21").pow(2), 1, 4));

        let e = phi(&s, &t, 1, 4);
        assert!(e.phi.is_unit());
        assert_eq!((e.i_prime, e.j_prime), (1, 4));
    }

    #[test]
    fn presentation_counts() {
        for (n, d, r1, r2) in [(1, 3, 6, 3), (2, 2, 15, 6)] {
            let v = VeroneseMap::new(&QuantumSpace::generic(n), d).unwrap();
            let p = v.presentation();
            assert_eq!((p.r1.relations.len(), p.r2.relations.len()), (r1, r2));
            assert_eq!(p.r1_prime.relations.len(), r1);
        }
    }

    #[test]
    fn degree_one_is_the_space_itself() {
        let s = QuantumSpace::generic(2);
        let v = VeroneseMap::new(&s, 1).unwrap();
        assert_eq!(v.derived_matrix(), *s.matrix());
        let p = v.presentation();
        assert!(p.r2.relations.is_empty());
        let base = s.relations();
        assert_eq!(p.r1.relations, base.relations);
    }

    #[test]
    fn twisted_cubic_kernel() {
        let v = VeroneseMap::new(&QuantumSpace::generic(1), 3).unwrap();
        let k = v.kernel_gb();
        assert_eq!(
            k.text_lines(),
            ["y1*y1 - q^2 y0*y2", "y1*y2 - q y0*y3", "y2*y2 - q^2 y1*y3"]
        );
        assert_eq!(k.header, Header::veronese(1, 3, 3));
    }

    #[test]
    fn lifted_kernel_n1_d2() {
        let s = QuantumSpace::generic(1);
        let v = VeroneseMap::new(&s, 2).unwrap();
        let (re1, re2) = v.lifted_kernel_parts();
        assert_eq!((re1.relations.len(), re2.relations.len()), (3, 1));
        assert_eq!(re2.text_lines(), ["y1*y1 - q y0*y2"]);
        assert_eq!(v.lifted_kernel_gb().relations.len(), 4);
        // C2 pairs in Re1 keep the tail y_i y_j with coefficient g_ji
        let g = v.derived_matrix();
        for r in &re1.relations {
            let (j, i) = (r.lead.0[0], r.lead.0[1]);
            if v.table().is_c2(i, j) {
                assert_eq!(r.tail.0, vec![i, j]);
                assert_eq!(&r.coeff, g.entry(j, i));
            }
        }
    }

    #[test]
    fn image_dims() {
        let v = VeroneseMap::new(&QuantumSpace::generic(1), 3).unwrap();
        assert_eq!(v.image_dim(2), BigUint::from(7u32));
        assert_eq!(v.image_dim(0), BigUint::from(1u32));
        let v = VeroneseMap::new(&QuantumSpace::generic(2), 2).unwrap();
        assert_eq!(v.image_dim(3), BigUint::from(28u32));
    }

    #[test]
    fn image_substitutes_terms() {
        let v = VeroneseMap::new(&QuantumSpace::generic(1), 2).unwrap();
        assert_eq!(v.image(&Word(vec![2, 1])).0, vec![1, 1, 0, 1]);
    }
}
