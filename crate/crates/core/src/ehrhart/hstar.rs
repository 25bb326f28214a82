use crate::error::{Error, Result};
use crate::exactmath::{binomial_poly, rat, solve_linear, Polynomial, Rational};

/// `C(t + m - i, m)` as a polynomial in `t`.
fn basis(m: usize, i: usize) -> Polynomial {
    binomial_poly(&Polynomial::linear(rat(1), rat(m as i64 - i as i64)), m)
}

/// The h*-vector `(h_0, ..., h_m)` with `ehr(t) = sum h_i C(t + m - i, m)`.
pub fn to_hstar(ehr: &Polynomial, m: usize) -> Result<Vec<Rational>> {
    let degree = ehr.degree().unwrap_or(0);
    if degree > m {
        return Err(Error::InvalidParameter(format!(
            "a polynomial of degree {degree} has no h*-vector of length {}",
            m + 1
        )));
    }
    let basis: Vec<Polynomial> = (0..=m).map(|i| basis(m, i)).collect();
    let rows: Vec<Vec<Rational>> = (0..=m as i64)
        .map(|t| basis.iter().map(|b| b.eval_int(t)).collect())
        .collect();
    let rhs: Vec<Rational> = (0..=m as i64).map(|t| ehr.eval_int(t)).collect();
    solve_linear(&rows, &rhs)
        .ok_or_else(|| Error::Internal("the binomial basis is singular".into()))
}

/// `sum h_i C(t + m - i, m)` with `m = h.len() - 1`.
pub fn from_hstar(h: &[Rational]) -> Result<Polynomial> {
    if h.is_empty() {
        return Err(Error::InvalidParameter(
            "an h*-vector has at least one entry".into(),
        ));
    }
    let m = h.len() - 1;
    Ok(h.iter()
        .enumerate()
        .fold(Polynomial::zero(), |acc, (i, c)| {
            &acc + &basis(m, i).scale(c)
        }))
}

/// h*-vector of a lattice pyramid of height one over a base: a zero appended.
pub fn pyramid(h: &[Rational]) -> Vec<Rational> {
    let mut out = h.to_vec();
    out.push(rat(0));
    out
}
