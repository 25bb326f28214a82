use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{nvol_oracle, nvol_recursive, nvol_small_n};
use crate::error::{Error, Result};
use crate::exactmath::rational::pow;
use crate::exactmath::{binomial_u, rat, solve_linear, Polynomial, Rational};

/// One fitted correction term `p_{n,i}(m) C(n-i, 2)^m`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FitTerm {
    pub i: usize,
    pub base: String,
    pub poly: Polynomial,
    pub rendered: String,
    pub degree: Option<usize>,
    pub expected_degree: usize,
    pub leading_positive: bool,
}

/// Outcome of fitting
/// `v(m,n) = C(n+1,2)^m - m C(n,2)^m - sum_{i=1}^{n-2} p_{n,i}(m) C(n-i,2)^m`
/// with `deg p_{n,i} <= 2i+1` on a grid of `m` values.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FitReport {
    pub n: usize,
    pub m_values: Vec<usize>,
    pub unknowns: usize,
    /// The linear system has a unique exact solution on the grid.
    pub solved: bool,
    pub terms: Vec<FitTerm>,
    /// Solved, and every `p_{n,i}` has degree exactly `2i+1` with a positive
    /// leading coefficient.
    pub consistent: bool,
    pub status: &'static str,
    pub label: &'static str,
}

/// `v(m, n)` from whichever exact engine covers `(m, n)`.
fn known_volume(m: usize, n: usize) -> Result<BigInt> {
    if n <= 4 {
        nvol_small_n(m, n)
    } else if n + 1 >= m {
        nvol_recursive(m, n)
    } else if m <= 5 && n <= 7 {
        nvol_oracle(m, n, 1)
    } else {
        Err(Error::OutOfRange(format!(
            "no exact volume engine covers m = {m}, n = {n}"
        )))
    }
}

/// Number of unknown coefficients for a given `n`.
pub fn fit_unknowns(n: usize) -> usize {
    (1..n.saturating_sub(1)).map(|i| 2 * i + 2).sum()
}

/// Fits on `m = 1, ..., unknowns + 3` (three more equations than unknowns).
pub fn conj_vmn_fit_default(n: usize) -> Result<FitReport> {
    let grid: Vec<usize> = (1..=fit_unknowns(n) + 3).collect();
    conj_vmn_fit(n, &grid)
}

pub fn conj_vmn_fit(n: usize, m_values: &[usize]) -> Result<FitReport> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "the fit needs n >= 2, got {n}"
        )));
    }
    if m_values.is_empty() {
        return Err(Error::InvalidParameter(
            "the fit needs at least one m value".into(),
        ));
    }
    let top = Rational::from_integer(binomial_u(n as u64 + 1, 2));
    let second = Rational::from_integer(binomial_u(n as u64, 2));
    let indices: Vec<usize> = (1..n - 1).collect();
    let bases: Vec<Rational> = indices
        .iter()
        .map(|&i| Rational::from_integer(binomial_u((n - i) as u64, 2)))
        .collect();
    let unknowns = fit_unknowns(n);

    let mut rows = Vec::with_capacity(m_values.len());
    let mut rhs = Vec::with_capacity(m_values.len());
    for &m in m_values {
        let mr = rat(m as i64);
        let v = Rational::from_integer(known_volume(m, n)?);
        rhs.push(pow(&top, m) - &mr * pow(&second, m) - v);
        let mut row = Vec::with_capacity(unknowns);
        for (&i, base) in indices.iter().zip(&bases) {
            let b = pow(base, m);
            for k in 0..=2 * i + 1 {
                row.push(pow(&mr, k) * &b);
            }
        }
        rows.push(row);
    }

    let solution = if unknowns == 0 {
        rhs.iter().all(Zero::is_zero).then(Vec::new)
    } else {
        solve_linear(&rows, &rhs)
    };
    let solved = solution.is_some();
    let mut terms = Vec::new();
    if let Some(sol) = &solution {
        let mut offset = 0;
        for (&i, base) in indices.iter().zip(&bases) {
            let len = 2 * i + 2;
            let poly = Polynomial::new(sol[offset..offset + len].to_vec());
            offset += len;
            terms.push(FitTerm {
                i,
                base: base.to_string(),
                rendered: poly.render("m"),
                degree: poly.degree(),
                expected_degree: 2 * i + 1,
                leading_positive: poly.leading().is_positive(),
                poly,
            });
        }
    }
    let consistent = solved
        && terms
            .iter()
            .all(|t| t.degree == Some(t.expected_degree) && t.leading_positive);
    Ok(FitReport {
        n,
        m_values: m_values.to_vec(),
        unknowns,
        solved,
        terms,
        consistent,
        status: if consistent {
            "consistent"
        } else {
            "inconsistent"
        },
        label: "conjectural",
    })
}
