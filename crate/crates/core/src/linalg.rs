//! Exact rank and linear solves by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Clears denominators row by row.
pub fn integer_rows(rows: &[Vec<BigRational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect()
}

/// Row echelon form computed in place. Returns the pivot columns in order.
///
/// Pivots are the first nonzero entry found scanning rows top-down in each
/// column; every division is exact.
pub fn echelon(m: &mut [Vec<BigInt>]) -> Vec<usize> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let (top, bottom) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..ncols {
                let num = &pivot_row[c] * &row[j] - &factor * &pivot_row[j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss step must divide exactly");
                row[j] = q;
            }
            row[c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m = integer_rows(rows);
    echelon(&mut m).len()
}

/// Outcome of an exact solve of A·x = b.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<BigRational>),
    /// No solution; `rank` is the rank of A.
    Inconsistent { rank: usize },
    /// Solutions exist but are not unique.
    Underdetermined { rank: usize },
}

/// Solves A·x = b where `a` has one row per equation.
pub fn solve(a: &[Vec<BigRational>], b: &[BigRational]) -> Solution {
    assert_eq!(a.len(), b.len(), "one right-hand side per equation");
    let unknowns = a.first().map_or(0, Vec::len);
    let augmented: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), unknowns, "ragged matrix");
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut m = integer_rows(&augmented);
    let pivots = echelon(&mut m);
    if pivots.last() == Some(&unknowns) {
        return Solution::Inconsistent { rank: pivots.len() - 1 };
    }
    if pivots.len() < unknowns {
        return Solution::Underdetermined { rank: pivots.len() };
    }
    let mut x = vec![BigRational::zero(); unknowns];
    for (r, &c) in pivots.iter().enumerate().rev() {
        let mut acc = BigRational::from_integer(m[r][unknowns].clone());
        for j in c + 1..unknowns {
            acc -= BigRational::from_integer(m[r][j].clone()) * &x[j];
        }
        x[c] = acc / BigRational::from_integer(m[r][c].clone());
    }
    Solution::Unique(x)
}
