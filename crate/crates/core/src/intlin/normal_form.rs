//! Smith and Hermite normal forms over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Unimodular `u`, `v` and diagonal `s` with `u * m * v == s`.
///
/// The nonzero diagonal entries are positive, form a divisibility chain and
/// precede all zero diagonal entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Diagonal of `s`, length `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows().min(self.s.cols()))
            .map(|i| self.s[(i, i)].clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|d| !d.is_zero()).count()
    }

    /// Nonzero diagonal entries.
    pub fn nonzero_diagonal(&self) -> Vec<BigInt> {
        self.diagonal().into_iter().take_while(|d| !d.is_zero()).collect()
    }
}

/// Position of the entry of least nonzero magnitude in the block `[t.., t..]`.
fn min_pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let e = &a[(i, j)];
            if e.is_zero() {
                continue;
            }
            let mag = e.abs();
            if best.as_ref().is_none_or(|(_, b)| mag < *b) {
                best = Some(((i, j), mag));
            }
        }
    }
    best.map(|(pos, _)| pos)
}

/// Smith normal form with the least-magnitude pivot strategy.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = min_pivot(&a, t) else {
                return SmithDecomposition { u, s: a, v };
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = a[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -a[(i, t)].div_floor(&pivot);
                a.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -a[(t, j)].div_floor(&pivot);
                a.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }

            // The pivot must divide the whole remaining block.
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&pivot))
            });
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    a.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithDecomposition { u, s: a, v }
}

/// Row-style Hermite normal form of the row lattice of `m`.
///
/// Returns only the nonzero rows: echelon form, positive pivots, entries
/// above each pivot reduced into `[0, pivot)`. Rows appear in order of
/// increasing pivot column, so they are lexicographically decreasing.
pub fn hermite_rows(m: &IntMatrix) -> IntMatrix {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut pr = 0;
    for col in 0..cols {
        if pr == rows {
            break;
        }
        loop {
            let best = (pr..rows)
                .filter(|&i| !a[(i, col)].is_zero())
                .min_by_key(|&i| a[(i, col)].abs());
            let Some(best) = best else { break };
            a.swap_rows(pr, best);
            let pivot = a[(pr, col)].clone();
            let mut done = true;
            for i in pr + 1..rows {
                if a[(i, col)].is_zero() {
                    continue;
                }
                let q = -a[(i, col)].div_floor(&pivot);
                a.add_row_multiple(i, pr, &q);
                done &= a[(i, col)].is_zero();
            }
            if done {
                break;
            }
        }
        if a[(pr, col)].is_zero() {
            continue;
        }
        if a[(pr, col)].is_negative() {
            a.negate_row(pr);
        }
        let pivot = a[(pr, col)].clone();
        for i in 0..pr {
            let q = -a[(i, col)].div_floor(&pivot);
            a.add_row_multiple(i, pr, &q);
        }
        pr += 1;
    }
    let entries = a.entries()[..pr * cols].to_vec();
    IntMatrix::new(pr, cols, entries).expect("row count is consistent")
}
