//! Partitions, beta-sets and the 2-core / 2-quotient correspondence.
//!
//! A partition is stored as its weakly decreasing positive parts. Beta-sets
//! are always padded to an even length so that the even and odd halves can
//! be read off as the two quotient components.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A Young diagram, also used as a cycle type.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Validates an arbitrary integer sequence and returns its canonical form.
    ///
    /// Trailing zeros are stripped. Negative parts and increasing adjacent
    /// pairs are rejected with the offending index.
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        let mut out = Vec::with_capacity(parts.len());
        for (index, &part) in parts.iter().enumerate() {
            if part < 0 {
                return Err(Error::InvalidPartition {
                    index,
                    reason: format!("negative part {part}"),
                });
            }
            if index > 0 && parts[index - 1] < part {
                return Err(Error::InvalidPartition {
                    index,
                    reason: "not weakly decreasing".into(),
                });
            }
            out.push(part as usize);
        }
        while out.last() == Some(&0) {
            out.pop();
        }
        Ok(Partition { parts: out })
    }

    /// Same as [`Partition::from_signed`] for unsigned input.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        for index in 1..parts.len() {
            if parts[index - 1] < parts[index] {
                return Err(Error::InvalidPartition {
                    index,
                    reason: "not weakly decreasing".into(),
                });
            }
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts sorted into decreasing order.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Does the diagram of `self` contain the diagram of `other`?
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// The transposed diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|col| self.parts.iter().take_while(|&&row| row > col).count())
            .collect();
        Partition { parts }
    }

    /// Multiplicity of `j` among the parts.
    pub fn multiplicity(&self, j: usize) -> usize {
        self.parts.iter().filter(|&&p| p == j).count()
    }

    /// True when every part is odd.
    pub fn all_parts_odd(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    /// Returns the staircase index r if this partition equals K_r.
    pub fn staircase_index(&self) -> Option<usize> {
        let r = self.len();
        self.parts
            .iter()
            .enumerate()
            .all(|(i, &p)| p == r - i)
            .then_some(r)
    }

    /// Smallest even padding length that can hold this partition, at least 2.
    pub fn default_padding(&self) -> usize {
        (self.len() + self.len() % 2).max(2)
    }

    /// Beta-set of length `n`: x_j = y_j + (n - j).
    pub fn beta_set(&self, n: usize) -> Result<BetaSet> {
        if n % 2 == 1 {
            return Err(Error::Precondition(format!("beta-set length {n} is odd")));
        }
        if n < self.len() {
            return Err(Error::Precondition(format!(
                "beta-set length {n} is shorter than {} parts",
                self.len()
            )));
        }
        let entries = (0..n).map(|j| self.part(j) + (n - 1 - j)).collect();
        Ok(BetaSet { entries })
    }

    /// τ(Y): the 2-core and 2-quotient, with default padding.
    pub fn two_quotient(&self) -> Triplet {
        self.two_quotient_padded(self.default_padding())
            .expect("default padding is valid")
    }

    /// τ(Y) computed from a beta-set of the given even length.
    pub fn two_quotient_padded(&self, n: usize) -> Result<Triplet> {
        Ok(self.beta_set(n)?.triplet())
    }

    /// δ₂(Y) = (-1)^q, q the number of vertical dominoes removed on the way
    /// to the 2-core. Uses greedy removal at the largest movable bead.
    pub fn two_sign(&self) -> Sign {
        let mut beads = self.beta_set(self.default_padding()).expect("valid padding").entries;
        let mut vertical = 0usize;
        // beads stay sorted decreasing; moving x to x-2 can only swap it past x-1
        while let Some(pos) = (0..beads.len()).find(|&i| {
            let x = beads[i];
            x >= 2 && !beads.contains(&(x - 2))
        }) {
            let x = beads[pos];
            if beads.contains(&(x - 1)) {
                vertical += 1;
            }
            beads[pos] = x - 2;
            beads.sort_unstable_by(|a, b| b.cmp(a));
        }
        Sign::from_parity(vertical)
    }

    /// All removable 2-hooks as (resulting partition, is_vertical).
    pub fn domino_removals(&self) -> Vec<(Partition, bool)> {
        let mut out = Vec::new();
        let p = &self.parts;
        for i in 0..p.len() {
            let below = self.part(i + 1);
            if p[i] >= below + 2 {
                let mut q = p.clone();
                q[i] -= 2;
                out.push((Partition::new(q).expect("still a partition"), false));
            }
            if i + 1 < p.len() && p[i] == p[i + 1] && p[i + 1] > self.part(i + 2) {
                let mut q = p.clone();
                q[i] -= 1;
                q[i + 1] -= 1;
                out.push((Partition::new(q).expect("still a partition"), true));
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses "4,3,1,1"; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim().parse::<i64>().map_err(|e| Error::Parse {
                    input: s.to_string(),
                    reason: format!("{tok:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::from_signed(&parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Strictly decreasing first-column hook lengths, of even length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaSet {
    entries: Vec<usize>,
}

impl BetaSet {
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn padded_length(&self) -> usize {
        self.entries.len()
    }

    /// ξ values of the beads with x ≡ i (mod 2), decreasing.
    pub fn runner(&self, i: usize) -> Vec<usize> {
        self.entries
            .iter()
            .filter(|&&x| x % 2 == i)
            .map(|&x| (x - i) / 2)
            .collect()
    }

    pub fn triplet(&self) -> Triplet {
        let x0 = self.runner(0);
        let x1 = self.runner(1);
        let core = if x0.len() > x1.len() {
            staircase(x0.len() - x1.len() - 1)
        } else {
            staircase(x1.len() - x0.len())
        };
        Triplet {
            core,
            quotient0: runner_partition(&x0),
            quotient1: runner_partition(&x1),
        }
    }
}

/// ξ_j - (m - j) for a strictly decreasing runner ξ_1 > ... > ξ_m.
fn runner_partition(xi: &[usize]) -> Partition {
    let m = xi.len();
    let parts = xi.iter().enumerate().map(|(j, &x)| x - (m - 1 - j)).collect();
    Partition::new(parts).expect("runner beads are strictly decreasing")
}

/// K_r = (r, r-1, ..., 1).
pub fn staircase(r: usize) -> Partition {
    Partition { parts: (1..=r).rev().collect() }
}

/// (K; Y⁽⁰⁾, Y⁽¹⁾).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Triplet {
    pub core: Partition,
    pub quotient0: Partition,
    pub quotient1: Partition,
}

impl Triplet {
    pub fn new(core: Partition, quotient0: Partition, quotient1: Partition) -> Self {
        Triplet { core, quotient0, quotient1 }
    }

    /// |K| + 2(|Y⁽⁰⁾| + |Y⁽¹⁾|).
    pub fn size(&self) -> usize {
        self.core.size() + 2 * (self.quotient0.size() + self.quotient1.size())
    }

    /// The unique partition whose 2-core and 2-quotient are `self`.
    pub fn to_partition(&self) -> Result<Partition> {
        let r = self
            .core
            .staircase_index()
            .ok_or_else(|| Error::NotStaircase(self.core.to_string()))?;
        let (l0, l1) = (self.quotient0.len(), self.quotient1.len());
        // runner sizes for padding n, chosen so the core difference comes out right
        let runner_sizes = |n: usize| -> Option<(usize, usize)> {
            if r % 2 == 0 {
                (n >= r).then(|| ((n - r) / 2, (n + r) / 2))
            } else {
                (n > r).then(|| ((n + r).div_ceil(2), (n - r - 1) / 2))
            }
        };
        let mut n = 2;
        let (m0, m1) = loop {
            if let Some((m0, m1)) = runner_sizes(n) {
                if m0 >= l0 && m1 >= l1 {
                    break (m0, m1);
                }
            }
            n += 2;
        };
        let mut beads: Vec<usize> = (0..m0)
            .map(|j| 2 * (self.quotient0.part(j) + (m0 - 1 - j)))
            .chain((0..m1).map(|j| 2 * (self.quotient1.part(j) + (m1 - 1 - j)) + 1))
            .collect();
        beads.sort_unstable_by(|a, b| b.cmp(a));
        let parts = beads.iter().enumerate().map(|(j, &x)| x - (n - 1 - j)).collect();
        Partition::new(parts)
    }
}

impl fmt::Display for Triplet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}, {})", self.core, self.quotient0, self.quotient1)
    }
}

/// ±1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(count: usize) -> Self {
        if count.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` into odd parts, descending lexicographic order.
pub fn enumerate_odd_partitions(n: usize) -> Vec<Partition> {
    enumerate_partitions(n)
        .into_iter()
        .filter(Partition::all_parts_odd)
        .collect()
}
