//! A dense exact-rational simplex for `max cᵀx, Ax <= b, x >= 0` with
//! `b >= 0`, and the zero-sum matrix game solver built on it.
//!
//! Pivoting follows Bland's rule, so the method terminates without any
//! perturbation.

use num_traits::{Signed, Zero};

use crate::rational::{one, zero, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub value: Rational,
    pub primal: Vec<Rational>,
    /// Optimal dual prices of the `m` inequality rows.
    pub dual: Vec<Rational>,
}

/// Solves `max cᵀx, Ax <= b, x >= 0`. Requires `b >= 0`, so the origin is
/// feasible. Returns `None` if the program is unbounded.
pub fn maximize(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> Option<LpSolution> {
    let m = a.len();
    let n = c.len();
    assert!(b.len() == m && a.iter().all(|row| row.len() == n), "inconsistent LP dimensions");
    assert!(b.iter().all(|v| !v.is_negative()), "right-hand side must be nonnegative");

    // Row i: coefficients over n structural then m slack columns, then rhs.
    let mut rows: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row = a[i].clone();
            row.extend((0..m).map(|j| if i == j { one() } else { zero() }));
            row.push(b[i].clone());
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();
    // Reduced costs; the objective value sits in the last slot.
    let mut reduced: Vec<Rational> = c.iter().cloned().chain((0..=m).map(|_| zero())).collect();
    let width = n + m;

    while let Some(enter) = (0..width).find(|&j| reduced[j].is_positive()) {
        let mut leave: Option<(usize, Rational)> = None;
        for (i, row) in rows.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[width] / &row[enter];
            let better = match &leave {
                None => true,
                Some((l, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*l]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let (pivot, _) = leave?;

        let p = rows[pivot][enter].clone();
        for v in rows[pivot].iter_mut() {
            *v /= &p;
        }
        let pivot_row = rows[pivot].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == pivot || row[enter].is_zero() {
                continue;
            }
            let f = row[enter].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v -= &f * pv;
            }
        }
        let f = reduced[enter].clone();
        for (v, pv) in reduced.iter_mut().zip(&pivot_row) {
            *v -= &f * pv;
        }
        basis[pivot] = enter;
    }

    let mut primal = vec![zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            primal[bv] = rows[i][width].clone();
        }
    }
    let dual: Vec<Rational> = (0..m).map(|i| -reduced[n + i].clone()).collect();
    let value = -reduced[width].clone();
    Some(LpSolution { value, primal, dual })
}

/// Value and optimal mixed strategies of the zero-sum game in which the row
/// player receives `matrix[i][j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroSumSolution {
    pub value: Rational,
    pub row_mix: Vec<Rational>,
    pub col_mix: Vec<Rational>,
}

impl ZeroSumSolution {
    /// Checks both mixes are distributions and that each guarantees the value.
    pub fn verify(&self, matrix: &[Vec<Rational>]) -> bool {
        let dist = |mix: &[Rational]| mix.iter().all(|p| !p.is_negative()) && mix.iter().sum::<Rational>() == one();
        if !dist(&self.row_mix) || !dist(&self.col_mix) {
            return false;
        }
        let cols = self.col_mix.len();
        let row_ok = (0..cols).all(|j| {
            matrix.iter().zip(&self.row_mix).map(|(row, p)| &row[j] * p).sum::<Rational>() >= self.value
        });
        let col_ok = matrix
            .iter()
            .all(|row| row.iter().zip(&self.col_mix).map(|(v, q)| v * q).sum::<Rational>() <= self.value);
        row_ok && col_ok
    }
}

/// Exact minimax solution. The matrix is shifted to be positive, the column
/// player's program `max 1ᵀt, Mt <= 1, t >= 0` is solved, and the row
/// player's strategy is read off the dual prices.
pub fn solve_zero_sum(matrix: &[Vec<Rational>]) -> ZeroSumSolution {
    assert!(!matrix.is_empty() && !matrix[0].is_empty(), "game matrix needs a row and a column");
    let cols = matrix[0].len();
    let lowest = matrix.iter().flatten().min().expect("nonempty").clone();
    let shift = one() - lowest;
    let shifted: Vec<Vec<Rational>> =
        matrix.iter().map(|row| row.iter().map(|v| v + &shift).collect()).collect();
    let ones_rows = vec![one(); matrix.len()];
    let ones_cols = vec![one(); cols];
    let lp = maximize(&shifted, &ones_rows, &ones_cols).expect("positive game matrices give bounded programs");
    let total = lp.value.clone();
    let col_mix = lp.primal.iter().map(|t| t / &total).collect();
    let row_mix = lp.dual.iter().map(|u| u / &total).collect();
    let solution = ZeroSumSolution { value: one() / total - shift, row_mix, col_mix };
    debug_assert!(solution.verify(matrix));
    solution
}
