//! Independent oracles shared by the integration suites. Nothing here calls
//! the code paths it is used to check.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use corequot::Partition;
use num_bigint::BigInt;

pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// All permutations of 0..n in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
}

pub fn sign_of(perm: &[usize]) -> i64 {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Cycle lengths of a permutation, decreasing.
pub fn cycle_lengths(perm: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Tabloids of row lengths `rows` fixed by a permutation with the given
/// cycles: each cycle must sit inside one row.
fn fixed_tabloids(cycles: &[usize], rows: &[i64]) -> i64 {
    if rows.iter().any(|&r| r < 0) {
        return 0;
    }
    fn go(cycles: &[usize], room: &mut [i64]) -> i64 {
        let Some((&c, rest)) = cycles.split_first() else {
            return i64::from(room.iter().all(|&r| r == 0));
        };
        let mut total = 0;
        for i in 0..room.len() {
            if room[i] >= c as i64 {
                room[i] -= c as i64;
                total += go(rest, room);
                room[i] += c as i64;
            }
        }
        total
    }
    go(cycles, &mut rows.to_vec())
}

/// χ_λ at a permutation with the given cycles, by the determinantal
/// (Jacobi–Trudi) formula over Young permutation characters:
/// Σ_{w ∈ S_ℓ} sgn(w) ψ^{(λ_i - i + w(i))}.
pub fn determinantal_character(shape: &Partition, cycles: &[usize]) -> BigInt {
    let l = shape.len();
    let mut total = 0i64;
    for w in permutations(l) {
        let rows: Vec<i64> = (0..l)
            .map(|i| shape.part(i) as i64 - i as i64 + w[i] as i64)
            .collect();
        total += sign_of(&w) * fixed_tabloids(cycles, &rows);
    }
    BigInt::from(total)
}

/// For each complete sequence of domino removals, the parity of the number
/// of vertical dominoes, computed directly on the diagram.
pub fn domino_parities(y: &[usize]) -> BTreeSet<usize> {
    fn removals(y: &[usize]) -> Vec<(Vec<usize>, bool)> {
        let at = |i: usize| y.get(i).copied().unwrap_or(0);
        let mut out = Vec::new();
        for i in 0..y.len() {
            if y[i] >= at(i + 1) + 2 {
                let mut z = y.to_vec();
                z[i] -= 2;
                out.push((z, false));
            }
            if i + 1 < y.len() && y[i] == y[i + 1] && y[i + 1] > at(i + 2) {
                let mut z = y.to_vec();
                z[i] -= 1;
                z[i + 1] -= 1;
                out.push((z, true));
            }
        }
        for (z, _) in &mut out {
            while z.last() == Some(&0) {
                z.pop();
            }
        }
        out
    }
    fn go(y: Vec<usize>, memo: &mut HashMap<Vec<usize>, BTreeSet<usize>>) -> BTreeSet<usize> {
        if let Some(hit) = memo.get(&y) {
            return hit.clone();
        }
        let moves = removals(&y);
        let result = if moves.is_empty() {
            BTreeSet::from([0])
        } else {
            moves
                .into_iter()
                .flat_map(|(z, vertical)| {
                    go(z, memo).into_iter().map(move |q| (q + usize::from(vertical)) % 2)
                })
                .collect()
        };
        memo.insert(y, result.clone());
        result
    }
    go(y.to_vec(), &mut HashMap::new())
}

/// The 2-core reached by removing dominoes greedily from the diagram.
pub fn domino_core(y: &[usize]) -> Vec<usize> {
    let mut y = y.to_vec();
    'outer: loop {
        let at = |y: &Vec<usize>, i: usize| y.get(i).copied().unwrap_or(0);
        for i in 0..y.len() {
            if y[i] >= at(&y, i + 1) + 2 {
                y[i] -= 2;
            } else if i + 1 < y.len() && y[i] == y[i + 1] && y[i + 1] > at(&y, i + 2) {
                y[i] -= 1;
                y[i + 1] -= 1;
            } else {
                continue;
            }
            while y.last() == Some(&0) {
                y.pop();
            }
            continue 'outer;
        }
        return y;
    }
}
