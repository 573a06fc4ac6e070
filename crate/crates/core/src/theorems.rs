//! Weight-space bases, the LR decomposition of reduced Schur functions, and
//! the multiplicity and q-series bookkeeping behind them.
//!
//! Every check returns a report instead of failing: a mismatch is data.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::characters::{count_odd_partitions, partition_counts, IntegerSeries};
use crate::linalg::{self, Solution};
use crate::littlewood_richardson::lr_coefficient;
use crate::partitions::{enumerate_partitions, staircase, Partition, Triplet};
use crate::symfunc::{reduced_schur, GradedPolynomial, Monomial};

/// Λ_r - nδ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub r: usize,
    pub n: usize,
}

impl Weight {
    pub fn new(r: usize, n: usize) -> Self {
        Weight { r, n }
    }

    /// Degree of its weight vectors: 2n + r(r+1)/2.
    pub fn degree(&self) -> usize {
        2 * self.n + self.r * (self.r + 1) / 2
    }
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Λ{} - {}δ", self.r, self.n)
    }
}

pub fn weight_of(y: &Partition) -> Weight {
    let t = y.two_quotient();
    Weight {
        r: t.core.staircase_index().expect("2-cores are staircases"),
        n: t.quotient0.size() + t.quotient1.size(),
    }
}

/// Z = τ⁻¹(K_r; ∅, Z⁽¹⁾) for Z⁽¹⁾ ⊢ n in descending lexicographic order.
pub fn basis_for_weight(w: Weight) -> Vec<Partition> {
    let core = staircase(w.r);
    enumerate_partitions(w.n)
        .into_iter()
        .map(|z1| {
            Triplet::new(core.clone(), Partition::empty(), z1)
                .to_partition()
                .expect("staircase core")
        })
        .collect()
}

/// Rows of reduced Schur coefficients over the odd monomials in `columns`.
fn coefficient_rows(polys: &[GradedPolynomial], columns: &[Monomial]) -> Vec<Vec<BigRational>> {
    polys
        .iter()
        .map(|f| columns.iter().map(|m| f.coefficient(m)).collect())
        .collect()
}

fn odd_monomials(degree: usize) -> Vec<Monomial> {
    crate::partitions::enumerate_odd_partitions(degree)
        .iter()
        .map(Monomial::from_cycles)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankReport {
    pub weight: Weight,
    pub degree: usize,
    pub basis: Vec<Partition>,
    pub monomials: usize,
    pub rank: usize,
    pub expected: usize,
    pub pass: bool,
}

/// Checks that the basis candidates for `w` are linearly independent.
pub fn verify_theorem2(w: Weight) -> RankReport {
    let basis = basis_for_weight(w);
    let polys: Vec<GradedPolynomial> = basis.iter().map(reduced_schur).collect();
    let columns = odd_monomials(w.degree());
    let rank = linalg::rank(&coefficient_rows(&polys, &columns));
    let expected = partition_counts(w.n)[w.n]
        .to_string()
        .parse::<usize>()
        .expect("p(n) fits");
    RankReport {
        weight: w,
        degree: w.degree(),
        monomials: columns.len(),
        rank,
        expected,
        pass: rank == expected && basis.len() == expected,
        basis,
    }
}

/// Both sides of the decomposition of S^red_Y in the weight-space basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub subject: Partition,
    pub basis: Vec<Partition>,
    /// From the LR formula.
    pub formula: Vec<String>,
    /// From the exact linear solve; `None` when it has no unique solution.
    pub solved: Option<Vec<String>>,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Formula-side coefficients, in `basis_for_weight` order.
///
/// (-1)^{|Y⁽⁰⁾|} δ₂(Y) · c^{Z⁽¹⁾}_{Y⁽⁰⁾′, Y⁽¹⁾} · δ₂(Z).
pub fn theorem3_coefficients(y: &Partition) -> (Vec<Partition>, Vec<BigInt>) {
    let t = y.two_quotient();
    let w = weight_of(y);
    let q0_conj = t.quotient0.conjugate();
    let outer_sign = BigInt::from(if t.quotient0.size().is_multiple_of(2) { 1 } else { -1 })
        * BigInt::from(y.two_sign().value());
    let mut basis = Vec::new();
    let mut coeffs = Vec::new();
    for z1 in enumerate_partitions(w.n) {
        let z = Triplet::new(t.core.clone(), Partition::empty(), z1.clone())
            .to_partition()
            .expect("staircase core");
        let lr = lr_coefficient(&z1, &q0_conj, &t.quotient1);
        let c = if lr == 0 {
            BigInt::zero()
        } else {
            &outer_sign * BigInt::from(lr) * BigInt::from(z.two_sign().value())
        };
        basis.push(z);
        coeffs.push(c);
    }
    (basis, coeffs)
}

/// Solver-side coefficients of S^red_Y in the basis, or the failure mode.
pub fn decompose_in_basis(y: &Partition) -> (Vec<Partition>, Solution) {
    let w = weight_of(y);
    let basis = basis_for_weight(w);
    let polys: Vec<GradedPolynomial> = basis.iter().map(reduced_schur).collect();
    let target = reduced_schur(y);
    let columns = odd_monomials(w.degree());
    // one equation per monomial, one unknown per basis element
    let a: Vec<Vec<BigRational>> = columns
        .iter()
        .map(|m| polys.iter().map(|f| f.coefficient(m)).collect())
        .collect();
    let b: Vec<BigRational> = columns.iter().map(|m| target.coefficient(m)).collect();
    let solution = if a.is_empty() {
        Solution::Unique(vec![BigRational::zero(); basis.len()])
    } else {
        linalg::solve(&a, &b)
    };
    (basis, solution)
}

pub fn verify_theorem3(y: &Partition) -> DecompositionReport {
    let (basis, formula) = theorem3_coefficients(y);
    let (solver_basis, solution) = decompose_in_basis(y);
    debug_assert_eq!(basis, solver_basis);
    let solved = match solution {
        Solution::Unique(x) => Some(x),
        _ => None,
    };
    let matches = solved.as_ref().is_some_and(|x| {
        x.len() == formula.len()
            && x.iter().zip(&formula).all(|(s, f)| *s == BigRational::from_integer(f.clone()))
    });
    DecompositionReport {
        subject: y.clone(),
        basis,
        formula: formula.iter().map(ToString::to_string).collect(),
        solved: solved.map(|x| x.iter().map(ToString::to_string).collect()),
        matches,
    }
}

/// Every partition of size at most `max_size`, smallest first.
pub fn partitions_up_to(max_size: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(enumerate_partitions).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityRow {
    pub degree: usize,
    /// (r, n, p(n)) for each weight of this degree.
    pub contributions: Vec<(usize, usize, String)>,
    pub total: String,
    pub odd_partitions: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityReport {
    pub rows: Vec<MultiplicityRow>,
    pub pass: bool,
}

/// Σ_{2n + r(r+1)/2 = d} p(n) against p^odd(d) for each d ≤ `d_max`.
pub fn multiplicity_report(d_max: usize) -> MultiplicityReport {
    let p = partition_counts(d_max / 2);
    let rows: Vec<MultiplicityRow> = (0..=d_max)
        .map(|d| {
            let mut contributions = Vec::new();
            let mut total = BigInt::zero();
            for r in 0.. {
                let core = r * (r + 1) / 2;
                if core > d {
                    break;
                }
                if (d - core) % 2 == 0 {
                    let n = (d - core) / 2;
                    total += &p[n];
                    contributions.push((r, n, p[n].to_string()));
                }
            }
            let odd = count_odd_partitions(d);
            MultiplicityRow {
                degree: d,
                contributions,
                pass: total == odd,
                total: total.to_string(),
                odd_partitions: odd.to_string(),
            }
        })
        .collect();
    MultiplicityReport { pass: rows.iter().all(|r| r.pass), rows }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaussReport {
    pub order: usize,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
    pub pass: bool,
}

/// (Σ_{m∈Z} q^{2m²+m}) · (Σ_n p(n) q^{2n}) against φ(q²)/φ(q), to q^order.
pub fn gauss_series_check(order: usize) -> GaussReport {
    let mut theta = vec![BigInt::zero(); order + 1];
    let exponents: BTreeSet<usize> = (-(order as i64)..=order as i64)
        .map(|m| 2 * m * m + m)
        .filter(|&e| e >= 0 && e as usize <= order)
        .map(|e| e as usize)
        .collect();
    for e in exponents {
        theta[e] += BigInt::one();
    }
    let p = partition_counts(order / 2);
    let mut spread = vec![BigInt::zero(); order + 1];
    for (n, c) in p.into_iter().enumerate() {
        spread[2 * n] = c;
    }
    let lhs = IntegerSeries::from_coefficients(theta, order)
        .mul(&IntegerSeries::from_coefficients(spread, order));
    let rhs = IntegerSeries::phi(2, order)
        .div(&IntegerSeries::phi(1, order))
        .expect("φ has constant term 1");
    GaussReport {
        order,
        pass: lhs == rhs,
        lhs: lhs.coefficients().iter().map(ToString::to_string).collect(),
        rhs: rhs.coefficients().iter().map(ToString::to_string).collect(),
    }
}
