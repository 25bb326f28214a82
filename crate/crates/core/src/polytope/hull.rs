//! Exhaustive hull conversion for small dimensions, in exact integer
//! arithmetic. Every hyperplane spanned by `dim` affinely independent input
//! points is tested (V to H), and every `dim`-subset of inequalities is solved
//! (H to V). This is only meant for desk-scale inputs.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::One;

use super::{HRep, Inequality, VRep};
use crate::error::{Error, Result};
use crate::exactmath::linalg::rank;
use crate::exactmath::{rat, Rational};

const MAX_DIM: usize = 6;

/// Determinant of a square integer matrix by fraction-free elimination.
fn det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return 0;
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Normal to the span of `dim - 1` vectors in `Z^dim` by cofactor expansion.
fn normal(vectors: &[Vec<i128>], dim: usize) -> Vec<i128> {
    (0..dim)
        .map(|j| {
            let minor: Vec<Vec<i128>> = vectors
                .iter()
                .map(|v| (0..dim).filter(|&c| c != j).map(|c| v[c]).collect())
                .collect();
            let d = det(minor);
            if j % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}

fn primitive(a: &mut [i128], b: &mut i128) {
    let g = a.iter().fold(*b, |g, v| g.gcd(v));
    if g > 1 {
        for v in a.iter_mut() {
            *v /= g;
        }
        *b /= g;
    }
}

fn combinations(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        visit(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn to_i64(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Internal("coefficient overflow in hull conversion".into()))
}

/// Facets of the convex hull of a full-dimensional point set, each as a
/// primitive integer normal oriented so the points satisfy `<a, x> <= b`;
/// sorted.
pub fn v_to_h(v: &VRep) -> Result<HRep> {
    let dim = v.dim;
    if dim == 0 || dim > MAX_DIM {
        return Err(Error::OutOfRange(format!(
            "hull conversion supports 1 <= dim <= {MAX_DIM}"
        )));
    }
    let pts: Vec<Vec<i128>> = v
        .points
        .iter()
        .map(|p| p.iter().map(|&x| i128::from(x)).collect())
        .collect();
    if pts.len() <= dim {
        return Err(Error::Degenerate(
            "too few points for a full-dimensional hull".into(),
        ));
    }
    let diffs: Vec<Vec<Rational>> = pts[1..]
        .iter()
        .map(|p| {
            p.iter()
                .zip(&pts[0])
                .map(|(a, b)| rat((a - b) as i64))
                .collect()
        })
        .collect();
    if rank(&diffs) < dim {
        return Err(Error::Degenerate("points are not full-dimensional".into()));
    }
    let mut found: BTreeSet<(Vec<i128>, i128)> = BTreeSet::new();
    combinations(pts.len(), dim, |idx| {
        let base = &pts[idx[0]];
        let vectors: Vec<Vec<i128>> = idx[1..]
            .iter()
            .map(|&i| pts[i].iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        let mut a = normal(&vectors, dim);
        if a.iter().all(|x| *x == 0) {
            return;
        }
        let mut b: i128 = a.iter().zip(base).map(|(p, q)| p * q).sum();
        let (mut above, mut below) = (false, false);
        for p in &pts {
            let val: i128 = a.iter().zip(p).map(|(x, y)| x * y).sum();
            if val > b {
                above = true;
            } else if val < b {
                below = true;
            }
            if above && below {
                return;
            }
        }
        if above {
            a.iter_mut().for_each(|x| *x = -*x);
            b = -b;
        }
        primitive(&mut a, &mut b);
        found.insert((a, b));
    });
    let rows = found
        .into_iter()
        .map(|(a, b)| {
            Ok(Inequality::new(
                a.into_iter().map(to_i64).collect::<Result<_>>()?,
                to_i64(b)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HRep { dim, rows })
}

/// Exact solution of a square integer system by Cramer's rule, or `None` when
/// singular.
fn solve_square(a: &[Vec<i128>], b: &[i128]) -> Option<Vec<Rational>> {
    let d = det(a.to_vec());
    if d == 0 {
        return None;
    }
    let n = a.len();
    Some(
        (0..n)
            .map(|j| {
                let replaced: Vec<Vec<i128>> = a
                    .iter()
                    .zip(b)
                    .map(|(row, &rhs)| {
                        let mut r = row.clone();
                        r[j] = rhs;
                        r
                    })
                    .collect();
                Rational::new(det(replaced).into(), d.into())
            })
            .collect(),
    )
}

fn check_bounded(h: &HRep) -> Result<()> {
    let dim = h.dim;
    let rows: Vec<Vec<i128>> = h
        .rows
        .iter()
        .map(|r| r.a.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let as_rat: Vec<Vec<Rational>> = h
        .rows
        .iter()
        .map(|r| r.a.iter().map(|&x| rat(x)).collect())
        .collect();
    if as_rat.is_empty() || rank(&as_rat) < dim {
        return Err(Error::Unbounded);
    }
    // A pointed recession cone {d : A d <= 0} is nontrivial exactly when one
    // of its extreme rays, cut out by dim - 1 independent rows, is feasible.
    let mut unbounded = false;
    if dim == 1 {
        let pos = rows.iter().any(|r| r[0] > 0);
        let neg = rows.iter().any(|r| r[0] < 0);
        return if pos && neg {
            Ok(())
        } else {
            Err(Error::Unbounded)
        };
    }
    combinations(rows.len(), dim - 1, |idx| {
        if unbounded {
            return;
        }
        let chosen: Vec<Vec<i128>> = idx.iter().map(|&i| rows[i].clone()).collect();
        let d = normal(&chosen, dim);
        if d.iter().all(|x| *x == 0) {
            return;
        }
        for sign in [1i128, -1] {
            if rows
                .iter()
                .all(|r| r.iter().zip(&d).map(|(a, x)| a * x * sign).sum::<i128>() <= 0)
            {
                unbounded = true;
            }
        }
    });
    if unbounded {
        Err(Error::Unbounded)
    } else {
        Ok(())
    }
}

/// Vertices of a bounded H-description with rational coordinates, sorted.
pub fn h_to_v_rational(h: &HRep) -> Result<Vec<Vec<Rational>>> {
    let dim = h.dim;
    if dim == 0 || dim > MAX_DIM {
        return Err(Error::OutOfRange(format!(
            "hull conversion supports 1 <= dim <= {MAX_DIM}"
        )));
    }
    check_bounded(h)?;
    let rows: Vec<Vec<i128>> = h
        .rows
        .iter()
        .map(|r| r.a.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let rhs: Vec<i128> = h.rows.iter().map(|r| i128::from(r.b)).collect();
    let mut found: BTreeSet<Vec<Rational>> = BTreeSet::new();
    combinations(rows.len(), dim, |idx| {
        let a: Vec<Vec<i128>> = idx.iter().map(|&i| rows[i].clone()).collect();
        let b: Vec<i128> = idx.iter().map(|&i| rhs[i]).collect();
        let Some(x) = solve_square(&a, &b) else {
            return;
        };
        let feasible = h.rows.iter().all(|r| {
            let val: Rational = r.a.iter().zip(&x).map(|(&c, v)| v * rat(c)).sum();
            val <= rat(r.b)
        });
        if feasible {
            found.insert(x);
        }
    });
    if found.is_empty() {
        return Err(Error::Degenerate(
            "the inequality system has no vertices".into(),
        ));
    }
    Ok(found.into_iter().collect())
}

/// Vertices of a bounded H-description whose vertices are all integral.
pub fn h_to_v(h: &HRep) -> Result<VRep> {
    let points = h_to_v_rational(h)?
        .into_iter()
        .map(|p| {
            p.into_iter()
                .map(|c| {
                    if c.denom().is_one() {
                        to_i64(c.numer().try_into().map_err(|_| {
                            Error::Internal("coordinate overflow in hull conversion".into())
                        })?)
                    } else {
                        Err(Error::Degenerate(format!(
                            "non-integral vertex coordinate {c}"
                        )))
                    }
                })
                .collect::<Result<Vec<i64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    VRep::new(h.dim, points)
}

/// Maximum of `<a, x>` over a bounded H-description.
pub fn maximize(h: &HRep, a: &[i64]) -> Result<Rational> {
    let verts = h_to_v_rational(h)?;
    verts
        .iter()
        .map(|v| v.iter().zip(a).map(|(x, &c)| x * rat(c)).sum::<Rational>())
        .max()
        .ok_or_else(|| Error::Degenerate("empty polytope".into()))
}

/// Canonical form of an H-description for comparison: rows made primitive
/// (keeping their orientation) and sorted.
pub fn canonical(h: &HRep) -> Vec<Inequality> {
    let mut rows: Vec<Inequality> = h
        .rows
        .iter()
        .map(|r| {
            let mut a: Vec<i128> = r.a.iter().map(|&x| i128::from(x)).collect();
            let mut b = i128::from(r.b);
            primitive(&mut a, &mut b);
            Inequality::new(a.into_iter().map(|x| x as i64).collect(), b as i64)
        })
        .collect();
    rows.sort();
    rows.dedup();
    rows
}
