//! The graded ring Q[t₁, t₂, ...] with deg t_j = j, and Schur functions in it.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::characters::{CharacterEvaluator, CycleType};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_odd_partitions, enumerate_partitions, Partition};

/// t_1^{e_1} t_2^{e_2} ..., stored as (variable, exponent) pairs with
/// increasing variable index and positive exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<(usize, u32)>,
    degree: usize,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new(), degree: 0 }
    }

    fn from_sorted(exps: Vec<(usize, u32)>) -> Self {
        let degree = exps.iter().map(|&(j, e)| j * e as usize).sum();
        Monomial { exps, degree }
    }

    pub fn var(j: usize) -> Self {
        Self::from_pairs(vec![(j, 1)])
    }

    /// Normalizes unordered pairs, merging repeats and dropping zero exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut map: BTreeMap<usize, u32> = BTreeMap::new();
        for (j, e) in pairs {
            assert!(j >= 1, "variables are indexed from 1");
            *map.entry(j).or_default() += e;
        }
        Self::from_sorted(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    /// t^ν for a cycle type ν: exponent of t_j is the multiplicity of j.
    pub fn from_cycles(cycles: &Partition) -> Self {
        Self::from_pairs(cycles.parts().iter().map(|&j| (j, 1)))
    }

    /// Inverse of [`Monomial::from_cycles`].
    pub fn to_cycles(&self) -> Partition {
        let parts = self
            .exps
            .iter()
            .flat_map(|&(j, e)| std::iter::repeat_n(j, e as usize))
            .collect();
        Partition::from_unsorted(parts)
    }

    pub fn exponents(&self) -> &[(usize, u32)] {
        &self.exps
    }

    pub fn exponent(&self, j: usize) -> u32 {
        self.exps
            .iter()
            .find(|&&(k, _)| k == j)
            .map_or(0, |&(_, e)| e)
    }

    /// Σ j·e_j.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn uses_even_variable(&self) -> bool {
        self.exps.iter().any(|&(j, _)| j % 2 == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (mut a, mut b) = (self.exps.iter().peekable(), other.exps.iter().peekable());
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(i, e)), Some(&&(j, f))) => match i.cmp(&j) {
                    Ordering::Less => {
                        exps.push((i, e));
                        a.next();
                    }
                    Ordering::Greater => {
                        exps.push((j, f));
                        b.next();
                    }
                    Ordering::Equal => {
                        exps.push((i, e + f));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&x), None) => {
                    exps.push(x);
                    a.next();
                }
                (None, Some(&&y)) => {
                    exps.push(y);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial { exps, degree: self.degree + other.degree }
    }

    /// Drops `power` from the exponent of t_j; `None` if it is too small.
    pub fn divide_var(&self, j: usize, power: u32) -> Option<Monomial> {
        let e = self.exponent(j);
        if e < power {
            return None;
        }
        let exps = self
            .exps
            .iter()
            .map(|&(k, f)| if k == j { (k, f - power) } else { (k, f) })
            .filter(|&(_, f)| f > 0)
            .collect();
        Some(Self::from_sorted(exps))
    }
}

/// Weighted degree ascending, then the dense exponent vector
/// (e_1, e_2, ...) in descending lexicographic order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            // first variable where the dense exponent vectors differ
            let (mut a, mut b) = (self.exps.iter(), other.exps.iter());
            loop {
                match (a.next(), b.next()) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Less,
                    (None, Some(_)) => return Ordering::Greater,
                    (Some(&(i, e)), Some(&(j, f))) => {
                        if i != j {
                            // the side with the smaller index has a positive exponent there
                            return if i < j { Ordering::Less } else { Ordering::Greater };
                        }
                        if e != f {
                            return f.cmp(&e);
                        }
                    }
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        for (i, &(j, e)) in self.exps.iter().enumerate() {
            if i > 0 {
                f.write_str("·")?;
            }
            if e == 1 {
                write!(f, "t{j}")?;
            } else {
                write!(f, "t{j}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial with exact rational coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedPolynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl GradedPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn var(j: usize) -> Self {
        Self::term(Monomial::var(j), BigRational::one())
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Largest weighted degree of a term, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// True when every term has weighted degree `d` (vacuous for zero).
    pub fn is_homogeneous_of(&self, d: usize) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.degree() {
            Some(d) => self.is_homogeneous_of(d),
            None => true,
        }
    }

    /// The weighted-degree-d part.
    pub fn homogeneous_component(&self, d: usize) -> Self {
        GradedPolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Sets t_2 = t_4 = ... = 0.
    pub fn reduce_even(&self) -> Self {
        GradedPolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.uses_even_variable())
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn uses_only_odd_variables(&self) -> bool {
        self.terms.keys().all(|m| !m.uses_even_variable())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        GradedPolynomial {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        GradedPolynomial {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    /// ∂^power / ∂t_j^power.
    pub fn derivative(&self, j: usize, power: u32) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(j);
            if let Some(rest) = m.divide_var(j, power) {
                let falling: BigInt = (0..power).map(|i| BigInt::from(e - i)).product();
                out.add_term(rest, c * BigRational::from_integer(falling));
            }
        }
        out
    }

    pub fn pretty(&self) -> String {
        self.to_string()
    }
}

impl Add for &GradedPolynomial {
    type Output = GradedPolynomial;

    fn add(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl AddAssign<&GradedPolynomial> for GradedPolynomial {
    fn add_assign(&mut self, rhs: &GradedPolynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Sub for &GradedPolynomial {
    type Output = GradedPolynomial;

    fn sub(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &GradedPolynomial {
    type Output = GradedPolynomial;

    fn neg(self) -> GradedPolynomial {
        GradedPolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &GradedPolynomial {
    type Output = GradedPolynomial;

    fn mul(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        let mut out = GradedPolynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for GradedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}·{m}")?;
            }
        }
        Ok(())
    }
}

fn parse_err(input: &str, reason: impl Into<String>) -> Error {
    Error::Parse { input: input.to_string(), reason: reason.into() }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| parse_err(s, "bad numerator"))?;
    let den: BigInt = den.parse().map_err(|_| parse_err(s, "bad denominator"))?;
    if den.is_zero() {
        return Err(parse_err(s, "zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

impl FromStr for GradedPolynomial {
    type Err = Error;

    /// Parses the pretty form, e.g. "1/24·t1^4 + t1·t3"; `*` also works as
    /// the product sign.
    fn from_str(input: &str) -> Result<Self> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(parse_err(input, "empty polynomial"));
        }
        // split into signed terms at top-level + and -
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut negative = false;
        let mut current = String::new();
        for ch in s.chars() {
            if (ch == '+' || ch == '-') && !current.is_empty() {
                chunks.push((negative, std::mem::take(&mut current)));
                negative = ch == '-';
            } else if (ch == '+' || ch == '-') && current.is_empty() {
                negative ^= ch == '-';
            } else {
                current.push(ch);
            }
        }
        if current.is_empty() {
            return Err(parse_err(input, "dangling sign"));
        }
        chunks.push((negative, current));

        let mut poly = GradedPolynomial::zero();
        for (negative, chunk) in chunks {
            let mut coeff = BigRational::one();
            let mut pairs = Vec::new();
            for factor in chunk.split(['·', '*']) {
                if let Some(var) = factor.strip_prefix('t') {
                    let (j, e) = match var.split_once('^') {
                        Some((j, e)) => (j, e),
                        None => (var, "1"),
                    };
                    let j: usize = j.parse().map_err(|_| parse_err(input, "bad variable index"))?;
                    let e: u32 = e.parse().map_err(|_| parse_err(input, "bad exponent"))?;
                    if j == 0 {
                        return Err(parse_err(input, "variables start at t1"));
                    }
                    pairs.push((j, e));
                } else {
                    coeff *= parse_rational(factor)?;
                }
            }
            if negative {
                coeff = -coeff;
            }
            poly.add_term(Monomial::from_pairs(pairs), coeff);
        }
        Ok(poly)
    }
}

struct ExpsMap<'a>(&'a Monomial);

impl Serialize for ExpsMap<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.exps.len()))?;
        for (j, e) in &self.0.exps {
            map.serialize_entry(&j.to_string(), e)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct TermOut<'a> {
    exps: ExpsMap<'a>,
    coeff: String,
}

#[derive(Deserialize)]
struct TermIn {
    exps: BTreeMap<String, u32>,
    coeff: String,
}

/// JSON form: `[{"exps": {"1": 4}, "coeff": "1/24"}, ...]` in canonical order.
impl Serialize for GradedPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            seq.serialize_element(&TermOut { exps: ExpsMap(m), coeff: c.to_string() })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for GradedPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<TermIn>::deserialize(deserializer)?;
        let mut poly = GradedPolynomial::zero();
        for term in raw {
            let mut pairs = Vec::with_capacity(term.exps.len());
            for (j, e) in term.exps {
                let j: usize = j.parse().map_err(D::Error::custom)?;
                if j == 0 {
                    return Err(D::Error::custom("variables start at t1"));
                }
                pairs.push((j, e));
            }
            let c = parse_rational(&term.coeff).map_err(D::Error::custom)?;
            poly.add_term(Monomial::from_pairs(pairs), c);
        }
        Ok(poly)
    }
}

/// S_Y(t) = Σ_ν χ_Y(ν) t^ν / ∏ ν_j!, over every cycle type of size |Y|.
pub fn schur(shape: &Partition) -> GradedPolynomial {
    schur_over(shape, enumerate_partitions(shape.size()))
}

/// S_Y with every even-indexed variable set to zero.
///
/// Only odd cycle types contribute, so the others are never evaluated.
pub fn reduced_schur(shape: &Partition) -> GradedPolynomial {
    schur_over(shape, enumerate_odd_partitions(shape.size()))
}

fn schur_over(shape: &Partition, classes: Vec<Partition>) -> GradedPolynomial {
    let mut evaluator = CharacterEvaluator::new();
    let mut out = GradedPolynomial::zero();
    for cycles in classes {
        let class = CycleType::new(cycles);
        let chi = evaluator.character(shape, &class).expect("sizes agree");
        if chi.is_zero() {
            continue;
        }
        let coeff = BigRational::new(chi, class.multiplicity_factorials());
        out.add_term(Monomial::from_cycles(class.cycles()), coeff);
    }
    out
}

/// Coefficients a_λ with f = Σ a_λ S_λ, for f homogeneous of degree `degree`.
///
/// a_λ = Σ_ν c_ν (∏ν_j!) χ_λ(ν) / z_ν. Zero coefficients are omitted.
pub fn schur_expand(f: &GradedPolynomial, degree: usize) -> Result<BTreeMap<Partition, BigRational>> {
    if !f.is_homogeneous_of(degree) {
        return Err(Error::NotHomogeneous(degree));
    }
    let mut out = BTreeMap::new();
    if f.is_zero() {
        return Ok(out);
    }
    let weights: Vec<(CycleType, BigRational)> = f
        .terms()
        .map(|(m, c)| {
            let class = CycleType::new(m.to_cycles());
            let w = c * BigRational::new(class.multiplicity_factorials(), class.centralizer_order());
            (class, w)
        })
        .collect();
    for shape in enumerate_partitions(degree) {
        let mut evaluator = CharacterEvaluator::new();
        let mut a = BigRational::zero();
        for (class, w) in &weights {
            let chi = evaluator.character(&shape, class).expect("sizes agree");
            a += w * BigRational::from_integer(chi);
        }
        if !a.is_zero() {
            out.insert(shape, a);
        }
    }
    Ok(out)
}
