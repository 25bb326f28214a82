use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::numbers::{double_factorial, factorial};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Power series truncated at an explicit order `K`: only the coefficients of
/// `z^0 .. z^{K-1}` are kept and no operation reads beyond them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![Rational::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 0 {
            s.coeffs[0] = Rational::one();
        }
        s
    }

    /// Builds a series of the given order, dropping coefficients at or beyond
    /// it and padding with zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order, Rational::zero());
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, index: usize) -> Result<Rational> {
        self.coeffs.get(index).cloned().ok_or(Error::BeyondOrder {
            index,
            order: self.order(),
        })
    }

    fn check_order(&self, other: &Series) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.check_order(other)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.check_order(other)?;
        let k = self.order();
        let mut out = vec![Rational::zero(); k];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(k - i) {
                out[i + j] += a * b;
            }
        }
        Ok(Series { coeffs: out })
    }

    /// `exp(f)` for `f` with zero constant term, via `E' = f' E`.
    pub fn exp(&self) -> Result<Series> {
        let k = self.order();
        if k == 0 {
            return Ok(Series::zero(0));
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpConstantTerm);
        }
        let mut e = vec![Rational::zero(); k];
        e[0] = Rational::one();
        for i in 1..k {
            let mut acc = Rational::zero();
            for j in 1..=i {
                acc += Rational::from_integer(BigInt::from(j)) * &self.coeffs[j] * &e[i - j];
            }
            e[i] = acc / Rational::from_integer(BigInt::from(i));
        }
        Ok(Series { coeffs: e })
    }

    /// `sqrt(1 - c z)` from the closed coefficients
    /// `[z^i] sqrt(1-z) = -(2i-3)!! / (2^i i!)`.
    pub fn sqrt_one_minus(c: &Rational, order: usize) -> Series {
        let mut coeffs = Vec::with_capacity(order);
        let mut c_pow = Rational::one();
        for i in 0..order as u32 {
            let denom = BigInt::from(2u32).pow(i) * factorial(i);
            let base = Rational::new(-double_factorial(i), denom);
            coeffs.push(base * &c_pow);
            c_pow *= c;
        }
        Series { coeffs }
    }

    /// Tree function `T(z) = sum_{i>=1} i^{i-1} z^i / i!`.
    pub fn tree_function(order: usize) -> Series {
        let coeffs = (0..order as u32)
            .map(|i| {
                if i == 0 {
                    Rational::zero()
                } else {
                    Rational::new(BigInt::from(i).pow(i - 1), factorial(i))
                }
            })
            .collect();
        Series { coeffs }
    }

    /// The series `c z`.
    pub fn linear(c: Rational, order: usize) -> Series {
        let mut s = Series::zero(order);
        if order > 1 {
            s.coeffs[1] = c;
        }
        s
    }
}
