use num_traits::Zero;

use super::rational::Rational;

/// Solves `A x = b` exactly by Gaussian elimination.
///
/// `A` may have more rows than columns; the extra equations must then be
/// consistent. Returns `None` when the solution is not unique or the system is
/// inconsistent.
// elimination reads the pivot row while updating the others
#[allow(clippy::needless_range_loop)]
pub fn solve_linear(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let rows = a.len();
    if rows == 0 || rows != b.len() {
        return None;
    }
    let cols = a[0].len();
    if cols == 0 || rows < cols || a.iter().any(|r| r.len() != cols) {
        return None;
    }
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..cols {
        let pivot = (col..rows).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for entry in m[col].iter_mut() {
            *entry *= &inv;
        }
        for r in 0..rows {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=cols {
                    let delta = &factor * &m[col][c];
                    m[r][c] -= delta;
                }
            }
        }
    }
    if m[cols..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    Some(m[..cols].iter().map(|row| row[cols].clone()).collect())
}

/// Rank of a rational matrix.
#[allow(clippy::needless_range_loop)]
pub fn rank(a: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = a.to_vec();
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            if !m[r][col].is_zero() {
                let factor = &m[r][col] / &m[rank][col];
                for c in col..cols {
                    let delta = &factor * &m[rank][c];
                    m[r][c] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}
