//! Coefficients: Laurent monomials in named, nonzero parameters.
//!
//! Every coefficient produced by the constructions in this crate is a
//! product of integer powers of the deformation parameters, so the group of
//! Laurent monomials is closed under everything we need and structural
//! equality coincides with equality as functions of the parameters.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Index of a base parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParamId(pub u32);

impl fmt::Display for ParamId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p{}", self.0)
    }
}

/// Names of the parameters of one session, indexed by [`ParamId`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParamNames {
    names: Vec<String>,
}

impl ParamNames {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers a new parameter. Names must be unique.
    pub fn push(&mut self, name: impl Into<String>) -> Result<ParamId> {
        let name = name.into();
        if self.lookup(&name).is_some() {
            return Err(Error::InvalidArgument(format!(
                "parameter `{name}` declared twice"
            )));
        }
        let id = ParamId(self.names.len() as u32);
        self.names.push(name);
        Ok(id)
    }

    pub fn name(&self, id: ParamId) -> Option<&str> {
        self.names.get(id.0 as usize).map(String::as_str)
    }

    pub fn lookup(&self, name: &str) -> Option<ParamId> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| ParamId(i as u32))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = ParamId> + '_ {
        (0..self.names.len()).map(|i| ParamId(i as u32))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    fn display_name(&self, id: ParamId) -> String {
        self.name(id)
            .map(str::to_owned)
            .unwrap_or_else(|| id.to_string())
    }
}

/// `∏ p_k^{e_k}` with every stored exponent nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentMonomial {
    exponents: BTreeMap<ParamId, i64>,
}

impl LaurentMonomial {
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn param(id: ParamId) -> Self {
        Self::param_pow(id, 1)
    }

    pub fn param_pow(id: ParamId, exp: i64) -> Self {
        let mut exponents = BTreeMap::new();
        if exp != 0 {
            exponents.insert(id, exp);
        }
        Self { exponents }
    }

    /// Builds a monomial from `(param, exponent)` pairs; repeated parameters
    /// accumulate and zero totals are dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (ParamId, i64)>) -> Self {
        let mut out = Self::unit();
        for (id, e) in pairs {
            out.add_exponent(id, e);
        }
        out
    }

    fn add_exponent(&mut self, id: ParamId, e: i64) {
        if e == 0 {
            return;
        }
        let slot = self.exponents.entry(id).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.exponents.remove(&id);
        }
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponent(&self, id: ParamId) -> i64 {
        self.exponents.get(&id).copied().unwrap_or(0)
    }

    /// Nonzero `(param, exponent)` entries in increasing parameter order.
    pub fn iter(&self) -> impl Iterator<Item = (ParamId, i64)> + '_ {
        self.exponents.iter().map(|(&id, &e)| (id, e))
    }

    /// Largest absolute exponent, 0 for the unit.
    pub fn degree_bound(&self) -> u64 {
        self.exponents
            .values()
            .map(|e| e.unsigned_abs())
            .max()
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (id, e) in other.iter() {
            out.add_exponent(id, e);
        }
        out
    }

    pub fn inv(&self) -> Self {
        Self {
            exponents: self.exponents.iter().map(|(&id, &e)| (id, -e)).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        if k == 0 {
            return Self::unit();
        }
        Self {
            exponents: self.exponents.iter().map(|(&id, &e)| (id, e * k)).collect(),
        }
    }

    /// `self · other⁻¹`
    pub fn div(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (id, e) in other.iter() {
            out.add_exponent(id, -e);
        }
        out
    }

    /// Exact value under a numeric assignment.
    pub fn eval(&self, assignment: &ParamAssignment) -> Result<BigRational> {
        let mut acc = BigRational::one();
        for (id, e) in self.iter() {
            let v = assignment
                .get(id)
                .ok_or_else(|| Error::MissingParameter(id.to_string()))?;
            acc *= pow_rational(v, e);
        }
        Ok(acc)
    }

    /// `q10^2*q21^-1`, or `1` for the unit.
    pub fn to_text(&self, names: &ParamNames) -> String {
        if self.is_unit() {
            return "1".to_owned();
        }
        self.iter()
            .map(|(id, e)| {
                let name = names.display_name(id);
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Sorted `[name, exponent]` pairs, the JSON form of a monomial.
    pub fn to_named_pairs(&self, names: &ParamNames) -> Vec<(String, i64)> {
        self.iter()
            .map(|(id, e)| (names.display_name(id), e))
            .collect()
    }

    pub fn from_named_pairs(pairs: &[(String, i64)], names: &ParamNames) -> Result<Self> {
        let mut out = Self::unit();
        for (name, e) in pairs {
            let id = names
                .lookup(name)
                .ok_or_else(|| Error::UnknownParameter(name.clone()))?;
            out.add_exponent(id, *e);
        }
        Ok(out)
    }
}

impl Mul for &LaurentMonomial {
    type Output = LaurentMonomial;

    fn mul(self, rhs: &LaurentMonomial) -> LaurentMonomial {
        LaurentMonomial::mul(self, rhs)
    }
}

fn pow_rational(v: &BigRational, e: i64) -> BigRational {
    let base = if e < 0 { v.recip() } else { v.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

/// Exact nonzero rational values for parameters.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParamAssignment {
    values: BTreeMap<ParamId, BigRational>,
}

impl ParamAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, id: ParamId, value: BigRational) -> Result<()> {
        if value.is_zero() {
            return Err(Error::InvalidArgument(format!(
                "parameter {id} must be nonzero"
            )));
        }
        self.values.insert(id, value);
        Ok(())
    }

    pub fn get(&self, id: ParamId) -> Option<&BigRational> {
        self.values.get(&id)
    }

    /// Assigns the same value to every named parameter.
    pub fn constant(names: &ParamNames, value: BigRational) -> Result<Self> {
        let mut out = Self::new();
        for id in names.ids() {
            out.set(id, value.clone())?;
        }
        Ok(out)
    }

    /// Parses `name=rational` strings such as `q=1`, `q10=-2/3`.
    pub fn parse<S: AsRef<str>>(items: &[S], names: &ParamNames) -> Result<Self> {
        let mut out = Self::new();
        for item in items {
            let item = item.as_ref();
            let (name, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected name=value, got `{item}`")))?;
            let name = name.trim();
            let id = names
                .lookup(name)
                .ok_or_else(|| Error::UnknownParameter(name.to_owned()))?;
            out.set(id, parse_rational(value.trim())?)?;
        }
        Ok(out)
    }

    /// Names of parameters in `names` that have no value.
    pub fn missing(&self, names: &ParamNames) -> Vec<String> {
        names
            .ids()
            .filter(|id| !self.values.contains_key(id))
            .map(|id| names.display_name(id))
            .collect()
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("`{s}` is not a rational number"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn mono(pairs: &[(u32, i64)]) -> LaurentMonomial {
        LaurentMonomial::from_pairs(pairs.iter().map(|&(p, e)| (ParamId(p), e)))
    }

    #[test]
    fn mul_adds_exponents() {
        assert_eq!(mono(&[(0, 1)]).mul(&mono(&[(0, 2)])), mono(&[(0, 3)]));
        assert_eq!(
            mono(&[(0, 1)]).mul(&mono(&[(0, -1)])),
            LaurentMonomial::unit()
        );
        assert_eq!(
            mono(&[(0, 1)]).mul(&mono(&[(2, 2)])),
            mono(&[(0, 1), (2, 2)])
        );
    }

    #[test]
    fn canonical_form_drops_zero_exponents() {
        let m = mono(&[(0, 2), (1, 3), (0, -2)]);
        assert_eq!(m.iter().collect::<Vec<_>>(), vec![(ParamId(1), 3)]);
        assert_eq!(
            LaurentMonomial::param_pow(ParamId(4), 0),
            LaurentMonomial::unit()
        );
    }

    #[test]
    fn inverse() {
        assert_eq!(mono(&[(0, 3)]).inv(), mono(&[(0, -3)]));
        assert_eq!(LaurentMonomial::unit().inv(), LaurentMonomial::unit());
        assert_eq!(mono(&[(0, 1), (2, -2)]).inv(), mono(&[(0, -1), (2, 2)]));
    }

    #[test]
    fn eval_exact() {
        let mut s = ParamAssignment::new();
        s.set(ParamId(0), r(3, 1)).unwrap();
        assert_eq!(mono(&[(0, 2)]).eval(&s).unwrap(), r(9, 1));

        let mut s = ParamAssignment::new();
        s.set(ParamId(0), r(2, 5)).unwrap();
        assert_eq!(mono(&[(0, -1)]).eval(&s).unwrap(), r(5, 2));

        let mut s = ParamAssignment::new();
        s.set(ParamId(0), r(2, 1)).unwrap();
        s.set(ParamId(1), r(3, 1)).unwrap();
        assert_eq!(mono(&[(0, 1), (1, 1)]).eval(&s).unwrap(), r(6, 1));
    }

    #[test]
    fn eval_reports_missing_parameter() {
        let s = ParamAssignment::new();
        let err = mono(&[(7, 1)]).eval(&s).unwrap_err();
        assert!(matches!(err, Error::MissingParameter(ref p) if p == "p7"));
    }

    #[test]
    fn zero_assignment_is_rejected() {
        let mut s = ParamAssignment::new();
        assert!(s.set(ParamId(0), r(0, 1)).is_err());
    }

    #[test]
    fn parse_assignments() {
        let mut names = ParamNames::new();
        names.push("q10").unwrap();
        names.push("q21").unwrap();
        let s = ParamAssignment::parse(&["q10=2", "q21 = -3/4"], &names).unwrap();
        assert_eq!(s.get(ParamId(1)), Some(&r(-3, 4)));
        assert!(ParamAssignment::parse(&["q99=1"], &names).is_err());
        assert!(ParamAssignment::parse(&["q10=1/0"], &names).is_err());
        assert!(ParamAssignment::parse(&["q10"], &names).is_err());
        assert_eq!(
            ParamAssignment::parse(&["q10=1"], &names)
                .unwrap()
                .missing(&names),
            vec!["q21".to_owned()]
        );
    }

    #[test]
    fn text_and_pairs() {
        let mut names = ParamNames::new();
        names.push("q10").unwrap();
        names.push("q21").unwrap();
        let m = mono(&[(0, 2), (1, -1)]);
        assert_eq!(m.to_text(&names), "q10^2*q21^-1");
        assert_eq!(mono(&[(1, 1)]).to_text(&names), "q21");
        assert_eq!(LaurentMonomial::unit().to_text(&names), "1");
        let pairs = m.to_named_pairs(&names);
        assert_eq!(pairs, vec![("q10".into(), 2), ("q21".into(), -1)]);
        assert_eq!(
            LaurentMonomial::from_named_pairs(&pairs, &names).unwrap(),
            m
        );
    }
}
