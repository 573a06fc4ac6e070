//! Littlewood–Richardson coefficients by counting LR skew tableaux.
//!
//! Cells are filled in reverse reading order (rows top to bottom, each row
//! right to left) so the lattice condition can be checked on every prefix.

use std::collections::BTreeMap;

use crate::partitions::{enumerate_partitions, Partition};

/// A filling of the skew shape outer/inner; `rows[i]` holds the entries of
/// row i from column inner_i to outer_i - 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewTableau {
    pub outer: Partition,
    pub inner: Partition,
    pub rows: Vec<Vec<usize>>,
}

impl SkewTableau {
    fn entry(&self, row: usize, col: usize) -> Option<usize> {
        let start = self.inner.part(row);
        (col >= start && col < self.outer.part(row)).then(|| self.rows[row][col - start])
    }

    /// Counts of each value 1, 2, ...
    pub fn content(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for &v in self.rows.iter().flatten() {
            if counts.len() < v {
                counts.resize(v, 0);
            }
            counts[v - 1] += 1;
        }
        counts
    }

    /// Right-to-left, top-to-bottom.
    pub fn reverse_reading_word(&self) -> Vec<usize> {
        self.rows.iter().flat_map(|r| r.iter().rev().copied()).collect()
    }

    /// Semistandard with a lattice reverse reading word.
    pub fn is_littlewood_richardson(&self) -> bool {
        if !self.outer.contains(&self.inner) || self.rows.len() != self.outer.len() {
            return false;
        }
        for (i, row) in self.rows.iter().enumerate() {
            if row.len() != self.outer.part(i) - self.inner.part(i) {
                return false;
            }
            if row.contains(&0) || row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if i > 0 {
                for col in self.inner.part(i)..self.outer.part(i) {
                    if let Some(above) = self.entry(i - 1, col) {
                        if above >= self.entry(i, col).expect("cell in shape") {
                            return false;
                        }
                    }
                }
            }
        }
        is_lattice_word(&self.reverse_reading_word())
    }
}

/// Every prefix has at least as many i's as (i+1)'s.
pub fn is_lattice_word(word: &[usize]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &v in word {
        if v == 0 {
            return false;
        }
        if counts.len() < v {
            counts.resize(v, 0);
        }
        counts[v - 1] += 1;
        if v > 1 && counts[v - 1] > counts[v - 2] {
            return false;
        }
    }
    true
}

struct Search<'a> {
    outer: &'a Partition,
    inner: &'a Partition,
    content: &'a Partition,
    rows: Vec<Vec<usize>>,
    counts: Vec<usize>,
}

impl Search<'_> {
    fn row_len(&self, i: usize) -> usize {
        self.outer.part(i) - self.inner.part(i)
    }

    fn above(&self, row: usize, col: usize) -> Option<usize> {
        let r = row.checked_sub(1)?;
        let start = self.inner.part(r);
        (col >= start).then(|| self.rows[r][col - start])
    }

    // `pos` counts cells already placed in `row`, filled from the right
    fn fill(&mut self, row: usize, pos: usize, visit: &mut dyn FnMut(&SkewTableau)) {
        if row == self.outer.len() {
            visit(&SkewTableau {
                outer: self.outer.clone(),
                inner: self.inner.clone(),
                rows: self.rows.clone(),
            });
            return;
        }
        let len = self.row_len(row);
        if pos == len {
            self.fill(row + 1, 0, visit);
            return;
        }
        let slot = len - 1 - pos;
        let col = self.inner.part(row) + slot;
        let max = if pos == 0 { self.content.len() } else { self.rows[row][slot + 1] };
        let min = self.above(row, col).map_or(1, |a| a + 1);
        for v in min..=max {
            if self.counts[v - 1] == self.content.part(v - 1) {
                continue;
            }
            if v > 1 && self.counts[v - 1] + 1 > self.counts[v - 2] {
                continue;
            }
            self.rows[row][slot] = v;
            self.counts[v - 1] += 1;
            self.fill(row, pos + 1, visit);
            self.counts[v - 1] -= 1;
        }
        self.rows[row][slot] = 0;
    }
}

/// Calls `visit` on every LR tableau of shape outer/inner with the given content.
pub fn for_each_lr_tableau(
    outer: &Partition,
    inner: &Partition,
    content: &Partition,
    mut visit: impl FnMut(&SkewTableau),
) {
    if !outer.contains(inner) || outer.size() != inner.size() + content.size() {
        return;
    }
    let mut search = Search {
        outer,
        inner,
        content,
        rows: (0..outer.len())
            .map(|i| vec![0; outer.part(i) - inner.part(i)])
            .collect(),
        counts: vec![0; content.len()],
    };
    search.fill(0, 0, &mut visit);
}

/// c^outer_{inner, content}; zero when the sizes or shapes are incompatible.
pub fn lr_coefficient(outer: &Partition, inner: &Partition, content: &Partition) -> u64 {
    let mut count = 0;
    for_each_lr_tableau(outer, inner, content, |_| count += 1);
    count
}

/// λ ↦ c^λ_{μν} for all λ with a nonzero coefficient.
pub fn lr_expand_product(mu: &Partition, nu: &Partition) -> BTreeMap<Partition, u64> {
    enumerate_partitions(mu.size() + nu.size())
        .into_iter()
        .filter(|lambda| lambda.contains(mu) && lambda.contains(nu))
        .filter_map(|lambda| {
            let c = lr_coefficient(&lambda, mu, nu);
            (c > 0).then_some((lambda, c))
        })
        .collect()
}
