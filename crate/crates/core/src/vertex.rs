//! Heisenberg operators a_j and vertex-operator modes X_k on Q[t₁, t₃, t₅, ...].
//!
//! X(p) = -1/2 · exp(2 Σ t_j p^j) · exp(-2 Σ (1/j) ∂_j p^{-j}), sums over odd j,
//! and X_k is the coefficient of p^{-k}. On a polynomial of degree d only
//! finitely many terms of the product survive, so every mode acts exactly.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Solution};
use crate::partitions::enumerate_odd_partitions;
use crate::symfunc::{GradedPolynomial, Monomial};

/// An element of V: a polynomial in the odd variables only.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OddPolynomial(GradedPolynomial);

impl OddPolynomial {
    pub fn new(poly: GradedPolynomial) -> Result<Self> {
        for (m, _) in poly.terms() {
            if let Some(&(j, _)) = m.exponents().iter().find(|&&(j, _)| j % 2 == 0) {
                return Err(Error::EvenVariable(j));
            }
        }
        Ok(OddPolynomial(poly))
    }

    pub fn zero() -> Self {
        OddPolynomial(GradedPolynomial::zero())
    }

    pub fn one() -> Self {
        OddPolynomial(GradedPolynomial::one())
    }

    pub fn monomial(m: Monomial) -> Result<Self> {
        Self::new(GradedPolynomial::term(m, BigRational::one()))
    }

    pub fn as_poly(&self) -> &GradedPolynomial {
        &self.0
    }

    pub fn into_poly(self) -> GradedPolynomial {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    // closed under these, so no re-validation
    fn add(&self, other: &OddPolynomial) -> OddPolynomial {
        OddPolynomial(&self.0 + &other.0)
    }

    fn sub(&self, other: &OddPolynomial) -> OddPolynomial {
        OddPolynomial(&self.0 - &other.0)
    }

    fn scale(&self, c: &BigRational) -> OddPolynomial {
        OddPolynomial(self.0.scale(c))
    }
}

impl fmt::Display for OddPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// a_j: ∂/∂t_j for j > 0, multiplication by |j|·t_{|j|} for j < 0.
pub fn heisenberg_apply(j: i64, f: &OddPolynomial) -> Result<OddPolynomial> {
    if j % 2 == 0 {
        return Err(Error::Precondition(format!("Heisenberg index {j} must be odd")));
    }
    let idx = j.unsigned_abs() as usize;
    let out = if j > 0 {
        f.0.derivative(idx, 1)
    } else {
        f.0.mul_monomial(&Monomial::var(idx), &BigRational::from_integer(BigInt::from(idx)))
    };
    Ok(OddPolynomial(out))
}

thread_local! {
    static EXP_COEFFICIENTS: RefCell<Vec<Rc<GradedPolynomial>>> = const { RefCell::new(Vec::new()) };
}

fn compute_exp_coefficient(m: usize) -> GradedPolynomial {
    let mut out = GradedPolynomial::zero();
    for nu in enumerate_odd_partitions(m) {
        let mono = Monomial::from_cycles(&nu);
        let mut coeff = BigRational::one();
        for &(_, e) in mono.exponents() {
            let fact = crate::characters::factorial(e as usize);
            coeff *= BigRational::new(BigInt::from(2).pow(e), fact);
        }
        out.add_term(mono, coeff);
    }
    out
}

// memoized per thread; entries never change once computed
fn exp_coefficient_shared(m: usize) -> Rc<GradedPolynomial> {
    EXP_COEFFICIENTS.with(|cache| {
        let mut cache = cache.borrow_mut();
        while cache.len() <= m {
            let next = compute_exp_coefficient(cache.len());
            cache.push(Rc::new(next));
        }
        Rc::clone(&cache[m])
    })
}

/// A_m, the coefficient of p^m in exp(2 Σ_{j odd} t_j p^j).
pub fn exp_xi_coefficient(m: usize) -> OddPolynomial {
    OddPolynomial((*exp_coefficient_shared(m)).clone())
}

/// B_l f, B_l the coefficient of p^{-l} in exp(-2 Σ_{j odd} (1/j) ∂_j p^{-j}).
///
/// B_l is A_l with each t_j replaced by -(1/j)∂_j.
pub fn exp_dual_apply(l: usize, f: &OddPolynomial) -> OddPolynomial {
    let mut out = GradedPolynomial::zero();
    let coefficient = exp_coefficient_shared(l);
    for (mono, coeff) in coefficient.terms() {
        let mut scale = coeff.clone();
        let mut g = f.0.clone();
        for &(j, e) in mono.exponents() {
            let factor = BigRational::new(BigInt::from(-1), BigInt::from(j));
            for _ in 0..e {
                scale *= &factor;
            }
            g = g.derivative(j, e);
            if g.is_zero() {
                break;
            }
        }
        if !g.is_zero() {
            out += &g.scale(&scale);
        }
    }
    OddPolynomial(out)
}

thread_local! {
    static VERTEX_ON_MONOMIALS: RefCell<HashMap<(i64, Monomial), Rc<GradedPolynomial>>> =
        RefCell::new(HashMap::new());
}

fn vertex_on_monomial(k: i64, mono: &Monomial) -> Rc<GradedPolynomial> {
    let key = (k, mono.clone());
    if let Some(hit) = VERTEX_ON_MONOMIALS.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let f = OddPolynomial(GradedPolynomial::term(mono.clone(), BigRational::one()));
    let deg = mono.degree() as i64;
    let mut out = GradedPolynomial::zero();
    let mut m = (-k).max(0);
    while m + k <= deg {
        let lowered = exp_dual_apply((m + k) as usize, &f);
        if !lowered.is_zero() {
            out += &(&*exp_coefficient_shared(m as usize) * &lowered.0);
        }
        m += 1;
    }
    let out = Rc::new(out.scale(&BigRational::new(BigInt::from(-1), BigInt::from(2))));
    VERTEX_ON_MONOMIALS.with(|c| c.borrow_mut().insert(key, Rc::clone(&out)));
    out
}

/// X_k f = -1/2 Σ_{m ≥ 0, m+k ≤ deg f} A_m · B_{m+k} f.
///
/// Applied term by term; the image of each monomial is memoized per thread.
pub fn vertex_apply(k: i64, f: &OddPolynomial) -> OddPolynomial {
    let mut out = GradedPolynomial::zero();
    for (mono, c) in f.0.terms() {
        out += &vertex_on_monomial(k, mono).scale(c);
    }
    OddPolynomial(out)
}

/// The operators spanned by the realization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Operator {
    /// a_j, j odd.
    Heisenberg(i64),
    /// X_k.
    Vertex(i64),
    Identity,
}

impl Operator {
    pub fn apply(&self, f: &OddPolynomial) -> Result<OddPolynomial> {
        match *self {
            Operator::Heisenberg(j) => heisenberg_apply(j, f),
            Operator::Vertex(k) => Ok(vertex_apply(k, f)),
            Operator::Identity => Ok(f.clone()),
        }
    }

    /// The amount by which the operator lowers weighted degree.
    pub fn mode(&self) -> i64 {
        match *self {
            Operator::Heisenberg(j) => j,
            Operator::Vertex(k) => k,
            Operator::Identity => 0,
        }
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operator::Heisenberg(j) => write!(f, "a{j}"),
            Operator::Vertex(k) => write!(f, "X{k}"),
            Operator::Identity => f.write_str("1"),
        }
    }
}

impl FromStr for Operator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { input: s.to_string(), reason: "expected aJ, XK or 1".into() };
        if s == "1" || s == "id" {
            return Ok(Operator::Identity);
        }
        let (head, idx) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let idx: i64 = idx.parse().map_err(|_| bad())?;
        match head {
            "a" if idx % 2 != 0 => Ok(Operator::Heisenberg(idx)),
            "X" | "x" => Ok(Operator::Vertex(idx)),
            _ => Err(bad()),
        }
    }
}

/// Monomials in the odd variables with weighted degree at most `max_degree`.
pub fn odd_monomials_up_to(max_degree: usize) -> Vec<Monomial> {
    (0..=max_degree)
        .flat_map(enumerate_odd_partitions)
        .map(|nu| Monomial::from_cycles(&nu))
        .collect()
}

/// [op1, op2] f.
pub fn commutator_apply(op1: Operator, op2: Operator, f: &OddPolynomial) -> Result<OddPolynomial> {
    let first = op1.apply(&op2.apply(f)?)?;
    let second = op2.apply(&op1.apply(f)?)?;
    Ok(first.sub(&second))
}

/// Result of fitting [op1, op2] against {a_m, X_m, 1}, m = mode(op1) + mode(op2).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutatorFit {
    pub op1: Operator,
    pub op2: Operator,
    pub degree_bound: usize,
    pub monomials_checked: usize,
    /// Nonzero coefficients of the fitted combination; `None` when no fit exists.
    pub combination: Option<Vec<(Operator, String)>>,
    /// Candidates whose coefficient the test monomials could not pin down.
    pub undetermined: Vec<Operator>,
    /// First monomial whose inclusion made the system inconsistent.
    pub witness: Option<String>,
}

impl CommutatorFit {
    pub fn is_consistent(&self) -> bool {
        self.combination.is_some()
    }

    /// The fitted coefficient of `op`, zero if absent; `None` if no fit.
    pub fn coefficient(&self, op: Operator) -> Option<BigRational> {
        let combo = self.combination.as_ref()?;
        Some(
            combo
                .iter()
                .find(|(o, _)| *o == op)
                .map(|(_, c)| crate::symfunc::parse_rational(c).expect("own output"))
                .unwrap_or_else(BigRational::zero),
        )
    }
}

impl fmt::Display for CommutatorFit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}] = ", self.op1, self.op2)?;
        match &self.combination {
            None => write!(
                f,
                "no fit (witness {})",
                self.witness.as_deref().unwrap_or("?")
            ),
            Some(c) if c.is_empty() => f.write_str("0"),
            Some(c) => {
                let terms: Vec<String> = c
                    .iter()
                    .map(|(op, k)| match (op, k.as_str()) {
                        (Operator::Identity, _) => k.clone(),
                        (_, "1") => op.to_string(),
                        (_, "-1") => format!("-{op}"),
                        _ => format!("{k}·{op}"),
                    })
                    .collect();
                f.write_str(&terms.join(" + "))
            }
        }
    }
}

/// Checks [op1, op2] = Σ c·op on every odd monomial of degree ≤ `degree_bound`.
///
/// Returns the first monomial where the two sides differ, if any.
pub fn check_relation(
    op1: Operator,
    op2: Operator,
    expected: &[(Operator, BigRational)],
    degree_bound: usize,
) -> Result<Option<Monomial>> {
    for mono in odd_monomials_up_to(degree_bound) {
        let f = OddPolynomial::monomial(mono.clone())?;
        let lhs = commutator_apply(op1, op2, &f)?;
        let mut rhs = OddPolynomial::zero();
        for (op, c) in expected {
            rhs = rhs.add(&op.apply(&f)?.scale(c));
        }
        if lhs != rhs {
            return Ok(Some(mono));
        }
    }
    Ok(None)
}

/// Candidate operators for a commutator of total mode `m`.
pub fn closure_candidates(m: i64) -> Vec<Operator> {
    let mut out = Vec::new();
    if m % 2 != 0 {
        out.push(Operator::Heisenberg(m));
    }
    out.push(Operator::Vertex(m));
    out.push(Operator::Identity);
    out
}

/// Equations "commutator = Σ c_i candidate_i" on one monomial, one row per output monomial.
fn equations_for(
    op1: Operator,
    op2: Operator,
    candidates: &[Operator],
    mono: &Monomial,
) -> Result<(Vec<Vec<BigRational>>, Vec<BigRational>)> {
    let f = OddPolynomial::monomial(mono.clone())?;
    let lhs = commutator_apply(op1, op2, &f)?;
    let images: Vec<OddPolynomial> =
        candidates.iter().map(|c| c.apply(&f)).collect::<Result<_>>()?;
    let mut support: Vec<Monomial> = lhs.0.terms().map(|(m, _)| m.clone()).collect();
    for img in &images {
        support.extend(img.0.terms().map(|(m, _)| m.clone()));
    }
    support.sort();
    support.dedup();
    let rows = support
        .iter()
        .map(|m| images.iter().map(|img| img.0.coefficient(m)).collect())
        .collect();
    let rhs = support.iter().map(|m| lhs.0.coefficient(m)).collect();
    Ok((rows, rhs))
}

/// Fits [op1, op2] on every odd monomial of degree ≤ `degree_bound`.
pub fn commutator_fit(op1: Operator, op2: Operator, degree_bound: usize) -> Result<CommutatorFit> {
    let candidates = closure_candidates(op1.mode() + op2.mode());
    let monomials = odd_monomials_up_to(degree_bound);
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    let mut rhs: Vec<BigRational> = Vec::new();
    let mut fit = CommutatorFit {
        op1,
        op2,
        degree_bound,
        monomials_checked: monomials.len(),
        combination: None,
        undetermined: Vec::new(),
        witness: None,
    };
    let mut blocks = Vec::with_capacity(monomials.len());
    for mono in &monomials {
        let (r, b) = equations_for(op1, op2, &candidates, mono)?;
        rows.extend(r.iter().cloned());
        rhs.extend(b.iter().cloned());
        blocks.push((r, b));
    }
    if !rows.is_empty() {
        if let Solution::Inconsistent { .. } = linalg::solve(&rows, &rhs) {
            // replay monomial by monomial to find the first one that breaks the fit
            let (mut seen_rows, mut seen_rhs) = (Vec::new(), Vec::new());
            for (mono, (r, b)) in monomials.iter().zip(blocks) {
                seen_rows.extend(r);
                seen_rhs.extend(b);
                if seen_rows.is_empty() {
                    continue;
                }
                if let Solution::Inconsistent { .. } = linalg::solve(&seen_rows, &seen_rhs) {
                    fit.witness = Some(mono.to_string());
                    break;
                }
            }
            return Ok(fit);
        }
    }

    // keep the candidate columns that the data can distinguish
    let mut kept: Vec<usize> = Vec::new();
    for (col, &candidate) in candidates.iter().enumerate() {
        let mut trial = kept.clone();
        trial.push(col);
        let sub: Vec<Vec<BigRational>> =
            rows.iter().map(|r| trial.iter().map(|&c| r[c].clone()).collect()).collect();
        if linalg::rank(&sub) == trial.len() {
            kept = trial;
        } else {
            fit.undetermined.push(candidate);
        }
    }
    let sub: Vec<Vec<BigRational>> =
        rows.iter().map(|r| kept.iter().map(|&c| r[c].clone()).collect()).collect();
    let coefficients = if kept.is_empty() {
        Vec::new()
    } else {
        match linalg::solve(&sub, &rhs) {
            Solution::Unique(x) => x,
            other => unreachable!("consistent full-rank system solved as {other:?}"),
        }
    };
    fit.combination = Some(
        kept.iter()
            .zip(coefficients)
            .filter(|(_, c)| !c.is_zero())
            .map(|(&col, c)| (candidates[col], c.to_string()))
            .collect(),
    );
    Ok(fit)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn odd(s: &str) -> OddPolynomial {
        OddPolynomial::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn odd_polynomial_rejects_even_variables() {
        assert_eq!(OddPolynomial::new("t1*t2".parse().unwrap()), Err(Error::EvenVariable(2)));
    }

    #[test]
    fn heisenberg_examples() {
        assert_eq!(heisenberg_apply(1, &odd("t1")).unwrap(), OddPolynomial::one());
        assert_eq!(heisenberg_apply(-1, &OddPolynomial::one()).unwrap(), odd("t1"));
        assert_eq!(heisenberg_apply(-3, &odd("t1")).unwrap(), odd("3*t1*t3"));
        assert!(heisenberg_apply(2, &odd("t1")).is_err());
        assert!(heisenberg_apply(0, &odd("t1")).is_err());
    }

    #[test]
    fn exponential_coefficients() {
        assert_eq!(exp_xi_coefficient(0), OddPolynomial::one());
        assert_eq!(exp_xi_coefficient(1), odd("2*t1"));
        assert_eq!(exp_xi_coefficient(2), odd("2*t1^2"));
        assert_eq!(exp_xi_coefficient(3), odd("4/3*t1^3 + 2*t3"));
    }

    #[test]
    fn exponential_recurrence() {
        // m A_m = 2 Σ_{j odd ≤ m} j t_j A_{m-j}
        for m in 1..=12usize {
            let lhs = exp_xi_coefficient(m).0.scale(&q(m as i64, 1));
            let mut rhs = GradedPolynomial::zero();
            for j in (1..=m).step_by(2) {
                let term = exp_xi_coefficient(m - j)
                    .0
                    .mul_monomial(&Monomial::var(j), &q(2 * j as i64, 1));
                rhs = &rhs + &term;
            }
            assert_eq!(lhs, rhs, "m = {m}");
        }
    }

    #[test]
    fn vertex_on_constants() {
        for k in 1..5 {
            assert!(vertex_apply(k, &OddPolynomial::one()).is_zero());
        }
        assert_eq!(
            vertex_apply(0, &OddPolynomial::one()),
            OddPolynomial::new(GradedPolynomial::constant(q(-1, 2))).unwrap()
        );
        assert_eq!(vertex_apply(-1, &OddPolynomial::one()), odd("-t1"));
        assert!(vertex_apply(3, &OddPolynomial::zero()).is_zero());
    }

    #[test]
    fn vertex_shifts_degree() {
        for mono in odd_monomials_up_to(6) {
            let f = OddPolynomial::monomial(mono.clone()).unwrap();
            for k in -3..=3i64 {
                let g = vertex_apply(k, &f);
                let want = mono.degree() as i64 - k;
                assert!(g.as_poly().terms().all(|(m, _)| m.degree() as i64 == want));
            }
        }
    }

    #[test]
    fn heisenberg_pairs() {
        let fit = commutator_fit(Operator::Heisenberg(3), Operator::Heisenberg(-3), 6).unwrap();
        assert_eq!(fit.coefficient(Operator::Identity), Some(q(3, 1)));
        let fit = commutator_fit(Operator::Heisenberg(1), Operator::Heisenberg(3), 6).unwrap();
        assert_eq!(fit.combination, Some(vec![]));
    }

    #[test]
    fn heisenberg_vertex_bracket() {
        let fit = commutator_fit(Operator::Heisenberg(1), Operator::Vertex(2), 6).unwrap();
        assert_eq!(fit.coefficient(Operator::Vertex(3)), Some(q(2, 1)));
        assert_eq!(fit.coefficient(Operator::Heisenberg(3)), Some(q(0, 1)));
    }

    #[test]
    fn operator_names() {
        assert_eq!("a-3".parse::<Operator>().unwrap(), Operator::Heisenberg(-3));
        assert_eq!("X0".parse::<Operator>().unwrap(), Operator::Vertex(0));
        assert!("a2".parse::<Operator>().is_err());
        assert_eq!(Operator::Vertex(-2).to_string(), "X-2");
    }
}
