//! The Segre map `s_{n,m}: z_iα ↦ x_i ⊗ y_α` from the quantum space on
//! the `(n+1)(m+1)` generators `z_iα` with matrix `q ⊗ q'` into
//! `A^n_q ⊗ A^m_q'`.

use std::sync::Arc;

use num_bigint::BigUint;

use crate::coeff::{LaurentMonomial, ParamNames};
use crate::error::{Error, Result};
use crate::presentation::{BinomialRelation, Header, Presentation, Provenance};
use crate::qspace::{binomial, DeformationMatrix, ExponentVector, QuantumSpace, Word};

/// Generator `z_iα`; `flat = i(m+1) + α` matches the order on `Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SegreIndex {
    pub i: usize,
    pub alpha: usize,
    pub flat: usize,
}

/// `i < j`, `α < β`: indexes the kernel binomial
/// `z_iβ z_jα - q'_βα z_iα z_jβ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SegreQuadruple {
    pub i: usize,
    pub j: usize,
    pub alpha: usize,
    pub beta: usize,
}

/// `g[(i,α),(j,β)] = q_ij q'_αβ`.
pub fn segre_matrix(q: &DeformationMatrix, q_prime: &DeformationMatrix) -> DeformationMatrix {
    q.kronecker(q_prime)
}

#[derive(Clone, Debug)]
pub struct SegreMap {
    first: DeformationMatrix,
    second: DeformationMatrix,
    params: Arc<ParamNames>,
    space: QuantumSpace,
}

impl SegreMap {
    /// Generic `q` (parameters `q..`) and `q'` (parameters `qp..`).
    pub fn generic(n: usize, m: usize) -> Self {
        let mut names = ParamNames::new();
        let q = DeformationMatrix::generic(n + 1, "q", &mut names)
            .expect("fresh parameter table has no name clashes");
        let q_prime = DeformationMatrix::generic(m + 1, "qp", &mut names)
            .expect("q and qp names are disjoint");
        Self::new(q, q_prime, Arc::new(names))
    }

    pub fn new(q: DeformationMatrix, q_prime: DeformationMatrix, params: Arc<ParamNames>) -> Self {
        let (rows, cols) = (q.size(), q_prime.size());
        let wide = rows > 10 || cols > 10;
        let labels = (0..rows * cols)
            .map(|k| {
                let (i, a) = (k / cols, k % cols);
                if wide {
                    format!("z{i}_{a}")
                } else {
                    format!("z{i}{a}")
                }
            })
            .collect();
        let space = QuantumSpace::with_labels(segre_matrix(&q, &q_prime), params.clone(), labels);
        Self {
            first: q,
            second: q_prime,
            params,
            space,
        }
    }

    pub fn n(&self) -> usize {
        self.first.size() - 1
    }

    pub fn m(&self) -> usize {
        self.second.size() - 1
    }

    pub fn params(&self) -> &Arc<ParamNames> {
        &self.params
    }

    pub fn first_space(&self) -> QuantumSpace {
        QuantumSpace::from_parts(self.first.clone(), self.params.clone(), "x")
    }

    pub fn second_space(&self) -> QuantumSpace {
        QuantumSpace::from_parts(self.second.clone(), self.params.clone(), "y")
    }

    /// The quantum space on the `z_iα`.
    pub fn space(&self) -> &QuantumSpace {
        &self.space
    }

    pub fn matrix(&self) -> &DeformationMatrix {
        self.space.matrix()
    }

    pub fn index(&self, i: usize, alpha: usize) -> Result<SegreIndex> {
        if i > self.n() || alpha > self.m() {
            return Err(Error::InvalidArgument(format!(
                "z{i}{alpha} is outside the {}x{} grid",
                self.n() + 1,
                self.m() + 1
            )));
        }
        Ok(SegreIndex {
            i,
            alpha,
            flat: i * (self.m() + 1) + alpha,
        })
    }

    pub fn from_flat(&self, flat: usize) -> SegreIndex {
        let cols = self.m() + 1;
        SegreIndex {
            i: flat / cols,
            alpha: flat % cols,
            flat,
        }
    }

    fn flat(&self, i: usize, alpha: usize) -> usize {
        i * (self.m() + 1) + alpha
    }

    /// All quadruples in lexicographic `(i, j, α, β)` order.
    pub fn quadruples(&self) -> Vec<SegreQuadruple> {
        let (n, m) = (self.n(), self.m());
        let mut out = Vec::new();
        for i in 0..=n {
            for j in i + 1..=n {
                for alpha in 0..=m {
                    for beta in alpha + 1..=m {
                        out.push(SegreQuadruple { i, j, alpha, beta });
                    }
                }
            }
        }
        out
    }

    fn wrap(&self, provenance: Provenance, relations: Vec<BinomialRelation>) -> Presentation {
        Presentation {
            provenance,
            header: Header::segre(self.n(), self.m()),
            params: self.params.clone(),
            generator_labels: self.space.labels().to_vec(),
            relations,
            monomial_relations: Vec::new(),
        }
    }

    /// One relation `z_v z_u - g_vu z_u z_v` per pair `u < v`.
    pub fn space_relations(&self) -> Presentation {
        let relations = self.space.relations().relations;
        self.wrap(Provenance::SegreSpace, relations)
    }

    /// Reduced Gröbner basis of the kernel of the Segre map, one binomial per
    /// quadruple.
    pub fn kernel_gb(&self) -> Presentation {
        let relations = self
            .quadruples()
            .into_iter()
            .map(|s| {
                BinomialRelation::new_unchecked(
                    Word(vec![self.flat(s.i, s.beta), self.flat(s.j, s.alpha)]),
                    self.second.entry(s.beta, s.alpha).clone(),
                    Word(vec![self.flat(s.i, s.alpha), self.flat(s.j, s.beta)]),
                )
            })
            .collect();
        self.wrap(Provenance::SegreKernel, relations)
    }

    /// Image of a word in `A^n_q ⊗ A^m_q'`: the coefficient and the two
    /// ordered monomials. The x- and y-projections normalise independently.
    pub fn tensor_eval(&self, w: &Word) -> (LaurentMonomial, ExponentVector, ExponentVector) {
        let cols = self.m() + 1;
        let xs = Word(w.letters().iter().map(|&k| k / cols).collect());
        let ys = Word(w.letters().iter().map(|&k| k % cols).collect());
        let nx = self.first_space().normal_form(&xs);
        let ny = self.second_space().normal_form(&ys);
        (nx.coeff.mul(&ny.coeff), nx.term, ny.term)
    }

    /// `C(n+t, t) · C(m+t, t)`.
    pub fn hilbert_dim(&self, t: u64) -> BigUint {
        binomial(self.n() as u64 + t, t) * binomial(self.m() as u64 + t, t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &SegreMap, name: &str) -> LaurentMonomial {
        LaurentMonomial::param(s.params().lookup(name).unwrap())
    }

    #[test]
    fn quadric() {
        let s = SegreMap::generic(1, 1);
        assert_eq!(s.space().labels(), ["z00", "z01", "z10", "z11"]);
        assert_eq!(s.matrix().entry(1, 2), &p(&s, "q").inv().mul(&p(&s, "qp")));
        let k = s.kernel_gb();
        assert_eq!(k.text_lines(), ["z01*z10 - qp z00*z11"]);
        assert_eq!(s.space_relations().relations.len(), 6);
    }

    #[test]
    fn threefold() {
        let s = SegreMap::generic(2, 1);
        assert_eq!(
            s.kernel_gb().text_lines(),
            [
                "z01*z10 - qp z00*z11",
                "z01*z20 - qp z00*z21",
                "z11*z20 - qp z10*z21"
            ]
        );
        // (z11, z20)
        assert_eq!(
            s.matrix().entry(3, 4),
            &p(&s, "q21").inv().mul(&p(&s, "qp"))
        );
    }

    #[test]
    fn kernel_counts() {
        assert_eq!(SegreMap::generic(1, 2).kernel_gb().relations.len(), 3);
        assert_eq!(SegreMap::generic(3, 2).kernel_gb().relations.len(), 18);
        assert!(SegreMap::generic(0, 3).kernel_gb().relations.is_empty());
    }

    #[test]
    fn tensor_eval_examples() {
        let s = SegreMap::generic(1, 1);
        let (c, x, y) = s.tensor_eval(&Word(vec![1, 2]));
        assert_eq!(c, p(&s, "qp"));
        assert_eq!((x.0, y.0), (vec![1, 1], vec![1, 1]));
        let (c, x, y) = s.tensor_eval(&Word(vec![0, 3]));
        assert!(c.is_unit());
        assert_eq!((x.0, y.0), (vec![1, 1], vec![1, 1]));
        let (c, x, y) = s.tensor_eval(&Word(vec![2]));
        assert!(c.is_unit());
        assert_eq!((x.0, y.0), (vec![0, 1], vec![1, 0]));
    }

    #[test]
    fn space_relation_family() {
        let s = SegreMap::generic(2, 2);
        let rels = s.space_relations();
        assert_eq!(rels.relations.len(), 36);
        for i in 0..=2 {
            for a in 0..=2 {
                for b in a + 1..=2 {
                    let lead = Word(vec![s.flat(i, b), s.flat(i, a)]);
                    let r = rels.relations.iter().find(|r| r.lead == lead).unwrap();
                    assert_eq!(r.coeff, p(&s, &format!("qp{b}{a}")));
                }
            }
        }
    }

    #[test]
    fn indices() {
        let s = SegreMap::generic(2, 3);
        let z = s.index(1, 2).unwrap();
        assert_eq!(z.flat, 6);
        assert_eq!(s.from_flat(6), z);
        assert!(s.index(3, 0).is_err());
    }

    #[test]
    fn hilbert() {
        assert_eq!(SegreMap::generic(1, 1).hilbert_dim(2), BigUint::from(9u32));
        assert_eq!(SegreMap::generic(2, 1).hilbert_dim(3), BigUint::from(40u32));
        assert_eq!(SegreMap::generic(4, 2).hilbert_dim(0), BigUint::from(1u32));
    }
}
