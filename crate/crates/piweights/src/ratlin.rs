//! Exact linear algebra over the rationals: the solver behind partial
//! character decompositions and cyclotomic conductor rewriting.

// dense matrix kernels read better with explicit indices
#![allow(clippy::needless_range_loop)]

use num_rational::BigRational;
use num_traits::Zero;

#[derive(Debug, PartialEq)]
pub enum SolveOutcome {
    /// Columns independent and system consistent.
    Unique(Vec<BigRational>),
    Inconsistent,
    /// Columns dependent: a consistent solution would not be unique.
    Underdetermined,
}

/// Solve `A x = b` where `A` is given by columns.
pub fn solve_exact(columns: &[Vec<BigRational>], rhs: &[BigRational]) -> SolveOutcome {
    let ncols = columns.len();
    let nrows = rhs.len();
    debug_assert!(columns.iter().all(|c| c.len() == nrows));
    if ncols == 0 {
        return if rhs.iter().all(|v| v.is_zero()) {
            SolveOutcome::Unique(vec![])
        } else {
            SolveOutcome::Inconsistent
        };
    }
    // augmented row-major matrix
    let mut m: Vec<Vec<BigRational>> = (0..nrows)
        .map(|r| {
            let mut row: Vec<BigRational> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();

    let mut pivot_row = 0usize;
    let mut pivot_cols = Vec::new();
    for col in 0..ncols {
        let Some(src) = (pivot_row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, src);
        let inv = m[pivot_row][col].recip();
        for v in m[pivot_row].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..nrows {
            if r != pivot_row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=ncols {
                    let delta = &factor * &m[pivot_row][c];
                    m[r][c] = &m[r][c] - &delta;
                }
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
        if pivot_row == nrows {
            break;
        }
    }
    // consistency: a zero row with nonzero rhs
    for r in pivot_row..nrows {
        if !m[r][ncols].is_zero() {
            return SolveOutcome::Inconsistent;
        }
    }
    if pivot_cols.len() < ncols {
        return SolveOutcome::Underdetermined;
    }
    let mut x = vec![BigRational::zero(); ncols];
    for (i, &col) in pivot_cols.iter().enumerate() {
        x[col] = m[i][ncols].clone();
    }
    SolveOutcome::Unique(x)
}
