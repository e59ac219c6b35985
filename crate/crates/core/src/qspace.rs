//! Quantum spaces `A^n_q`: deformation matrices, words, normal forms.
//!
//! The ordered monomials `T_α = x_0^{α_0} ... x_n^{α_n}` form a basis of
//! `A^n_q`, and every word `u` satisfies `u = ζ_u T_α` in the algebra, where
//! `α` is the letter multiset of `u`. The coefficient `ζ_u` is the product
//! of `q_ab` over all inversions `(a, b)` of `u`, which is what
//! [`QuantumSpace::normal_form`] computes. [`QuantumSpace::normal_form_oracle`]
//! reaches the same result by applying the defining relations one at a time.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeff::{LaurentMonomial, ParamId, ParamNames};
use crate::error::{Error, Result};
use crate::presentation::{BinomialRelation, Header, Presentation, Provenance};

/// A word in the free monoid on generators `0..size`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(letters: impl Into<Vec<usize>>) -> Self {
        Self(letters.into())
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Letters are weakly increasing.
    pub fn is_ordered(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// `x1*x0` style rendering; the empty word is `1`.
    pub fn to_text(&self, labels: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_owned();
        }
        self.0
            .iter()
            .map(|&k| labels.get(k).cloned().unwrap_or_else(|| format!("#{k}")))
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl From<&[usize]> for Word {
    fn from(v: &[usize]) -> Self {
        Word(v.to_vec())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        deglex_compare(self, other)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree-lexicographic order: shorter words are smaller, words of equal
/// length compare letter by letter.
pub fn deglex_compare(u: &Word, v: &Word) -> Ordering {
    u.0.len().cmp(&v.0.len()).then_with(|| u.0.cmp(&v.0))
}

/// Multi-degree `α`, identified with the ordered monomial `T_α`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn zero(size: usize) -> Self {
        Self(vec![0; size])
    }

    /// Letter multiset of `w` over an alphabet of `size` letters.
    pub fn of_word(w: &Word, size: usize) -> Self {
        let mut alpha = vec![0u32; size];
        for &k in w.letters() {
            alpha[k] += 1;
        }
        Self(alpha)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// The ordered word `T_α`.
    pub fn to_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.degree() as usize);
        for (k, &e) in self.0.iter().enumerate() {
            letters.extend(std::iter::repeat_n(k, e as usize));
        }
        Word(letters)
    }
}

/// `coeff · T_α`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalTerm {
    pub coeff: LaurentMonomial,
    pub term: ExponentVector,
}

impl NormalTerm {
    pub fn unit(size: usize) -> Self {
        Self {
            coeff: LaurentMonomial::unit(),
            term: ExponentVector::zero(size),
        }
    }

    pub fn monomial(term: ExponentVector) -> Self {
        Self {
            coeff: LaurentMonomial::unit(),
            term,
        }
    }
}

/// Multiplicatively anti-symmetric matrix of Laurent monomials.
///
/// `entry(j, i)` is the coefficient in the relation `x_j x_i = q_ji x_i x_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationMatrix {
    size: usize,
    entries: Vec<LaurentMonomial>,
}

impl DeformationMatrix {
    /// Validates `q_ii = 1` and `q_ij q_ji = 1`. `entries` is row-major.
    pub fn from_entries(size: usize, entries: Vec<LaurentMonomial>) -> Result<Self> {
        if size == 0 || entries.len() != size * size {
            return Err(Error::BadMatrix {
                row: 0,
                col: 0,
                reason: format!(
                    "expected {size}x{size} = {} entries, got {}",
                    size * size,
                    entries.len()
                ),
            });
        }
        let m = Self { size, entries };
        for i in 0..size {
            if !m.entry(i, i).is_unit() {
                return Err(Error::BadMatrix {
                    row: i,
                    col: i,
                    reason: "diagonal entry is not 1".into(),
                });
            }
            for j in i + 1..size {
                if !m.entry(i, j).mul(m.entry(j, i)).is_unit() {
                    return Err(Error::BadMatrix {
                        row: j,
                        col: i,
                        reason: "entries (i,j) and (j,i) are not mutually inverse".into(),
                    });
                }
            }
        }
        Ok(m)
    }

    pub fn from_fn(size: usize, f: impl Fn(usize, usize) -> LaurentMonomial) -> Result<Self> {
        let mut entries = Vec::with_capacity(size * size);
        for row in 0..size {
            for col in 0..size {
                entries.push(f(row, col));
            }
        }
        Self::from_entries(size, entries)
    }

    /// Generic matrix on `size` generators: one fresh parameter per pair
    /// `j > i`, registered in `names` as `{prefix}{j}{i}` (or bare `prefix`
    /// when there is exactly one pair).
    pub fn generic(size: usize, prefix: &str, names: &mut ParamNames) -> Result<Self> {
        let pairs = size * size.saturating_sub(1) / 2;
        let mut ids = vec![None::<ParamId>; size * size];
        for j in 0..size {
            for i in 0..j {
                let name = param_name(prefix, j, i, pairs == 1);
                ids[j * size + i] = Some(names.push(name)?);
            }
        }
        Self::from_fn(size, |row, col| match row.cmp(&col) {
            Ordering::Equal => LaurentMonomial::unit(),
            Ordering::Greater => LaurentMonomial::param(ids[row * size + col].unwrap()),
            Ordering::Less => LaurentMonomial::param(ids[col * size + row].unwrap()).inv(),
        })
    }

    /// All-unit matrix (the commutative case).
    pub fn ones(size: usize) -> Self {
        Self {
            size,
            entries: vec![LaurentMonomial::unit(); size * size],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, row: usize, col: usize) -> &LaurentMonomial {
        &self.entries[row * self.size + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[LaurentMonomial]> {
        self.entries.chunks(self.size)
    }

    /// Kronecker product `self ⊗ other`, indexed by `(i, α) ↦ i·m + α`.
    pub fn kronecker(&self, other: &Self) -> Self {
        let m = other.size;
        let size = self.size * m;
        let mut entries = Vec::with_capacity(size * size);
        for row in 0..size {
            for col in 0..size {
                entries.push(
                    self.entry(row / m, col / m)
                        .mul(other.entry(row % m, col % m)),
                );
            }
        }
        Self { size, entries }
    }
}

pub(crate) fn param_name(prefix: &str, hi: usize, lo: usize, single: bool) -> String {
    if single {
        prefix.to_owned()
    } else if hi >= 10 || lo >= 10 {
        format!("{prefix}{hi}_{lo}")
    } else {
        format!("{prefix}{hi}{lo}")
    }
}

/// How [`QuantumSpace::normal_form_oracle`] picks the next reducible pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
    RandomSeeded(u64),
}

/// Binomial coefficient as a big integer.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// The quantum space defined by a deformation matrix.
#[derive(Clone, Debug)]
pub struct QuantumSpace {
    matrix: DeformationMatrix,
    params: Arc<ParamNames>,
    labels: Vec<String>,
}

impl QuantumSpace {
    /// `A^n_q` for generic `q`, with parameters `q` (n = 1) or `q{j}{i}`.
    pub fn generic(n: usize) -> Self {
        let mut names = ParamNames::new();
        let matrix = DeformationMatrix::generic(n + 1, "q", &mut names)
            .expect("fresh parameter table has no name clashes");
        Self::from_parts(matrix, Arc::new(names), "x")
    }

    /// Checks that `q` is `(n+1)×(n+1)`; anti-symmetry was checked when the
    /// matrix was built.
    pub fn new(n: usize, q: DeformationMatrix, params: Arc<ParamNames>) -> Result<Self> {
        if q.size() != n + 1 {
            return Err(Error::BadMatrix {
                row: q.size(),
                col: q.size(),
                reason: format!("expected size {}, got {}", n + 1, q.size()),
            });
        }
        Ok(Self::from_parts(q, params, "x"))
    }

    pub(crate) fn from_parts(
        matrix: DeformationMatrix,
        params: Arc<ParamNames>,
        var_prefix: &str,
    ) -> Self {
        let labels = (0..matrix.size())
            .map(|k| format!("{var_prefix}{k}"))
            .collect();
        Self {
            matrix,
            params,
            labels,
        }
    }

    pub(crate) fn with_labels(
        matrix: DeformationMatrix,
        params: Arc<ParamNames>,
        labels: Vec<String>,
    ) -> Self {
        debug_assert_eq!(labels.len(), matrix.size());
        Self {
            matrix,
            params,
            labels,
        }
    }

    /// `n`, one less than the number of generators.
    pub fn n(&self) -> usize {
        self.matrix.size() - 1
    }

    pub fn num_generators(&self) -> usize {
        self.matrix.size()
    }

    pub fn matrix(&self) -> &DeformationMatrix {
        &self.matrix
    }

    pub fn params(&self) -> &Arc<ParamNames> {
        &self.params
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `{x_j x_i - q_ji x_i x_j : i < j}`, ordered by `(i, j)`.
    pub fn relations(&self) -> Presentation {
        let size = self.num_generators();
        let mut relations = Vec::with_capacity(size * (size - 1) / 2);
        for i in 0..size {
            for j in i + 1..size {
                relations.push(BinomialRelation::new_unchecked(
                    Word(vec![j, i]),
                    self.matrix.entry(j, i).clone(),
                    Word(vec![i, j]),
                ));
            }
        }
        Presentation {
            provenance: Provenance::QuantumSpace,
            header: Header::space(self.n()),
            params: self.params.clone(),
            generator_labels: self.labels.clone(),
            relations,
            monomial_relations: Vec::new(),
        }
    }

    fn check_word(&self, w: &Word) {
        let size = self.num_generators();
        assert!(
            w.letters().iter().all(|&k| k < size),
            "word {:?} has letters outside 0..{size}",
            w.letters()
        );
    }

    /// Closed-form normal form: `ζ_u T_α` with `ζ_u` the product of `q_ab`
    /// over inversions `(a, b)` of `w`.
    ///
    /// Panics if `w` uses a letter outside the alphabet.
    pub fn normal_form(&self, w: &Word) -> NormalTerm {
        self.check_word(w);
        let size = self.num_generators();
        // inversions[a * size + b] = #{p < p' : w_p = a > b = w_p'}
        let mut seen = vec![0u64; size];
        let mut inversions = vec![0u64; size * size];
        for &b in w.letters() {
            for a in b + 1..size {
                inversions[a * size + b] += seen[a];
            }
            seen[b] += 1;
        }
        let mut coeff = LaurentMonomial::unit();
        for a in 0..size {
            for b in 0..a {
                let c = inversions[a * size + b];
                if c > 0 {
                    coeff = coeff.mul(&self.matrix.entry(a, b).pow(c as i64));
                }
            }
        }
        NormalTerm {
            coeff,
            term: ExponentVector(seen.iter().map(|&c| c as u32).collect()),
        }
    }

    /// One application of a defining relation at `position`.
    pub fn reduce_step(&self, w: &Word, position: usize) -> Result<(LaurentMonomial, Word)> {
        let letters = w.letters();
        if position + 1 >= letters.len() || letters[position] <= letters[position + 1] {
            return Err(Error::NotReducible { position });
        }
        let (a, b) = (letters[position], letters[position + 1]);
        let mut out = letters.to_vec();
        out.swap(position, position + 1);
        Ok((self.matrix.entry(a, b).clone(), Word(out)))
    }

    /// Normal form by repeated single reductions until the word is ordered.
    pub fn normal_form_oracle(&self, w: &Word, strategy: Strategy) -> NormalTerm {
        self.check_word(w);
        let mut rng = match strategy {
            Strategy::RandomSeeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        };
        let mut coeff = LaurentMonomial::unit();
        let mut current = w.clone();
        loop {
            let reducible: Vec<usize> = current
                .letters()
                .windows(2)
                .enumerate()
                .filter(|(_, p)| p[0] > p[1])
                .map(|(i, _)| i)
                .collect();
            let Some(&first) = reducible.first() else {
                break;
            };
            let position = match strategy {
                Strategy::Leftmost => first,
                Strategy::Rightmost => *reducible.last().unwrap(),
                Strategy::RandomSeeded(_) => {
                    let rng = rng.as_mut().unwrap();
                    reducible[rng.gen_range(0..reducible.len())]
                }
            };
            let (c, next) = self
                .reduce_step(&current, position)
                .expect("position was chosen among reducible pairs");
            coeff = coeff.mul(&c);
            current = next;
        }
        NormalTerm {
            coeff,
            term: ExponentVector::of_word(&current, self.num_generators()),
        }
    }

    /// `a • b = Nor(ab)` on the normal basis.
    pub fn bullet(&self, a: &NormalTerm, b: &NormalTerm) -> NormalTerm {
        let size = self.num_generators();
        // Only letters of a that exceed letters of b get swapped.
        let mut coeff = a.coeff.mul(&b.coeff);
        for x in 0..size {
            let ax = a.term.0[x] as i64;
            if ax == 0 {
                continue;
            }
            for y in 0..x {
                let by = b.term.0[y] as i64;
                if by > 0 {
                    coeff = coeff.mul(&self.matrix.entry(x, y).pow(ax * by));
                }
            }
        }
        NormalTerm {
            coeff,
            term: a.term.add(&b.term),
        }
    }

    /// `dim A_d = C(n+d, d)`.
    pub fn hilbert_dim(&self, d: u64) -> BigUint {
        binomial(self.n() as u64 + d, d)
    }

    /// Presentation of the Koszul dual: `ξ_j ξ_i - q_ji^{-1} ξ_i ξ_j` for
    /// `i < j` together with the monomials `ξ_j²`.
    pub fn koszul_dual(&self) -> Presentation {
        let size = self.num_generators();
        let mut relations = Vec::new();
        for i in 0..size {
            for j in i + 1..size {
                relations.push(BinomialRelation::new_unchecked(
                    Word(vec![j, i]),
                    self.matrix.entry(j, i).inv(),
                    Word(vec![i, j]),
                ));
            }
        }
        Presentation {
            provenance: Provenance::KoszulDual,
            header: Header::space(self.n()),
            params: self.params.clone(),
            generator_labels: (0..size).map(|k| format!("xi{k}")).collect(),
            relations,
            monomial_relations: (0..size).map(|j| Word(vec![j, j])).collect(),
        }
    }
}

impl fmt::Display for QuantumSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A^{}_q on {}", self.n(), self.labels.join(", "))
    }
}
