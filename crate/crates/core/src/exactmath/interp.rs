use std::collections::HashSet;

use super::poly::Polynomial;
use super::rational::Rational;
use crate::error::{Error, Result};

/// The unique polynomial of degree below the number of points passing through
/// all of them, built from Newton divided differences.
pub fn interpolate(points: &[(Rational, Rational)]) -> Result<Polynomial> {
    if points.is_empty() {
        return Err(Error::InvalidParameter(
            "interpolation needs at least one point".into(),
        ));
    }
    let mut seen = HashSet::new();
    for (x, _) in points {
        if !seen.insert(x.clone()) {
            return Err(Error::DuplicateNode(x.to_string()));
        }
    }
    let xs: Vec<Rational> = points.iter().map(|(x, _)| x.clone()).collect();
    let mut table: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    let k = xs.len();
    for level in 1..k {
        for i in (level..k).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut acc = Polynomial::zero();
    for i in (0..k).rev() {
        let factor = Polynomial::linear(Rational::from_integer(1.into()), -xs[i].clone());
        acc = &(&acc * &factor) + &Polynomial::constant(table[i].clone());
    }
    Ok(acc)
}

/// Interpolates through `(t, values[t])` for `t = 0, 1, ...`.
pub fn interpolate_from_zero<I: Into<Rational> + Clone>(values: &[I]) -> Result<Polynomial> {
    let points: Vec<(Rational, Rational)> = values
        .iter()
        .enumerate()
        .map(|(t, v)| (Rational::from_integer((t as i64).into()), v.clone().into()))
        .collect();
    interpolate(&points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{rat, ratio};

    #[test]
    fn pentagon_counts_interpolate_to_its_ehrhart_polynomial() {
        let p = interpolate(&[(rat(0), rat(1)), (rat(1), rat(8)), (rat(2), rat(22))]).unwrap();
        assert_eq!(p, Polynomial::new(vec![rat(1), ratio(7, 2), ratio(7, 2)]));
    }

    #[test]
    fn small_cases() {
        assert_eq!(
            interpolate(&[(rat(0), ratio(3, 4))]).unwrap(),
            Polynomial::constant(ratio(3, 4))
        );
        assert_eq!(
            interpolate(&[(rat(0), rat(1)), (rat(1), rat(2))]).unwrap(),
            Polynomial::from_ints(&[1, 1])
        );
        assert!(matches!(
            interpolate(&[(rat(1), rat(1)), (rat(1), rat(2))]),
            Err(Error::DuplicateNode(_))
        ));
        assert!(interpolate(&[]).is_err());
    }
}
