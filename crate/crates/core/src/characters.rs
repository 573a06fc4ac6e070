//! Symmetric group characters, partition counts and truncated q-series.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A conjugacy class of S_N given by its cycle lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(pub Partition);

impl CycleType {
    pub fn new(cycles: Partition) -> Self {
        CycleType(cycles)
    }

    pub fn cycles(&self) -> &Partition {
        &self.0
    }

    /// N = Σ j·ν_j.
    pub fn order(&self) -> usize {
        self.0.size()
    }

    /// (j, ν_j) for each j with ν_j > 0, increasing j.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &j in self.0.parts().iter().rev() {
            match out.last_mut() {
                Some((k, m)) if *k == j => *m += 1,
                _ => out.push((j, 1)),
            }
        }
        out
    }

    /// z_ν = ∏ j^{ν_j} ν_j!.
    pub fn centralizer_order(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .fold(BigInt::one(), |acc, (j, m)| {
                acc * BigInt::from(j).pow(m as u32) * factorial(m)
            })
    }

    /// ∏ ν_j!.
    pub fn multiplicity_factorials(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .fold(BigInt::one(), |acc, (_, m)| acc * factorial(m))
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Murnaghan–Nakayama evaluator with a memo on (shape, remaining cycles).
///
/// Reuse one evaluator when computing many values of the same shape.
#[derive(Default)]
pub struct CharacterEvaluator {
    memo: HashMap<(Partition, Vec<usize>), BigInt>,
}

impl CharacterEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    /// χ_shape(ν).
    pub fn character(&mut self, shape: &Partition, cycles: &CycleType) -> Result<BigInt> {
        if shape.size() != cycles.order() {
            return Err(Error::Precondition(format!(
                "shape {shape} has size {} but cycle type {cycles} has order {}",
                shape.size(),
                cycles.order()
            )));
        }
        Ok(self.strip(shape, cycles.0.parts()))
    }

    // cycles are sorted decreasing, so the largest is stripped first
    fn strip(&mut self, shape: &Partition, cycles: &[usize]) -> BigInt {
        let Some((&k, rest)) = cycles.split_first() else {
            return BigInt::one();
        };
        let key = (shape.clone(), cycles.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for (smaller, height) in rim_hook_removals(shape, k) {
            let term = self.strip(&smaller, rest);
            if height % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// All ways to remove a rim hook of length `k`, as (remaining shape, leg length).
pub fn rim_hook_removals(shape: &Partition, k: usize) -> Vec<(Partition, usize)> {
    let len = shape.len();
    let beads: Vec<usize> = (0..len).map(|j| shape.part(j) + (len - 1 - j)).collect();
    let mut out = Vec::new();
    for (i, &x) in beads.iter().enumerate() {
        if x < k || beads.contains(&(x - k)) {
            continue;
        }
        let target = x - k;
        let leg = beads.iter().filter(|&&b| b > target && b < x).count();
        let mut moved = beads.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts = moved
            .iter()
            .enumerate()
            .map(|(j, &b)| b - (len - 1 - j))
            .collect();
        out.push((Partition::new(parts).expect("beads decrease"), leg));
    }
    out
}

/// χ_shape(ν) by the Murnaghan–Nakayama rule.
pub fn mn_character(shape: &Partition, cycles: &CycleType) -> Result<BigInt> {
    CharacterEvaluator::new().character(shape, cycles)
}

pub fn centralizer_order(cycles: &CycleType) -> BigInt {
    cycles.centralizer_order()
}

/// p(n), via Euler's pentagonal recurrence.
pub fn count_partitions(n: usize) -> BigInt {
    partition_counts(n).swap_remove(n)
}

/// p(0), ..., p(n).
pub fn partition_counts(n: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n + 1];
    p[0] = BigInt::one();
    for m in 1..=n {
        let mut acc = BigInt::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let sign_plus = k % 2 == 1;
            let g2 = k * (3 * k + 1) / 2;
            let mut term = p[m - g1].clone();
            if g2 <= m {
                term += &p[m - g2];
            }
            if sign_plus {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[m] = acc;
    }
    p
}

/// p^odd(n), the number of partitions of n into odd parts.
pub fn count_odd_partitions(n: usize) -> BigInt {
    let mut ways = vec![BigInt::zero(); n + 1];
    ways[0] = BigInt::one();
    for part in (1..=n).step_by(2) {
        for m in part..=n {
            let add = ways[m - part].clone();
            ways[m] += add;
        }
    }
    ways.swap_remove(n)
}

/// A power series in q truncated after q^order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerSeries {
    coefficients: Vec<BigInt>,
}

impl IntegerSeries {
    pub fn zero(order: usize) -> Self {
        IntegerSeries { coefficients: vec![BigInt::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coefficients[0] = BigInt::one();
        s
    }

    /// Truncates or zero-pads `coefficients` to length order + 1.
    pub fn from_coefficients(mut coefficients: Vec<BigInt>, order: usize) -> Self {
        coefficients.resize(order + 1, BigInt::zero());
        IntegerSeries { coefficients }
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn coefficient(&self, k: usize) -> &BigInt {
        &self.coefficients[k]
    }

    /// φ(q^power) = ∏_{j≥1} (1 - q^{power·j}).
    pub fn phi(power: usize, order: usize) -> Self {
        assert!(power >= 1, "phi needs a positive power of q");
        let mut s = Self::one(order);
        let mut step = power;
        while step <= order {
            for k in (step..=order).rev() {
                let sub = s.coefficients[k - step].clone();
                s.coefficients[k] -= sub;
            }
            step += power;
        }
        s
    }

    /// Multiplies, truncating at the smaller order.
    pub fn mul(&self, other: &IntegerSeries) -> IntegerSeries {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coefficients.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients.iter().enumerate().take(order + 1 - i) {
                out.coefficients[i + j] += a * b;
            }
        }
        out
    }

    /// Divides by a series whose constant term is ±1.
    pub fn div(&self, other: &IntegerSeries) -> Result<IntegerSeries> {
        let c0 = &other.coefficients[0];
        if !c0.abs().is_one() {
            return Err(Error::SeriesDivision);
        }
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for k in 0..=order {
            let mut acc = self.coefficients[k].clone();
            for j in 1..=k {
                acc -= &other.coefficients[j] * &out.coefficients[k - j];
            }
            out.coefficients[k] = acc * c0;
        }
        Ok(out)
    }
}

impl Add for &IntegerSeries {
    type Output = IntegerSeries;

    fn add(self, other: &IntegerSeries) -> IntegerSeries {
        let order = self.order().min(other.order());
        let coefficients = (0..=order)
            .map(|k| &self.coefficients[k] + &other.coefficients[k])
            .collect();
        IntegerSeries { coefficients }
    }
}

impl Mul for &IntegerSeries {
    type Output = IntegerSeries;

    fn mul(self, other: &IntegerSeries) -> IntegerSeries {
        IntegerSeries::mul(self, other)
    }
}

impl fmt::Display for IntegerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.coefficients.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", strs.join(", "))
    }
}
