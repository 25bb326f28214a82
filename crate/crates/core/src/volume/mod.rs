//! Normalized volume `v(m, n)` of `P(m, n)` by independent engines, its
//! polynomial expansions in `n` and in `N = n - m + 1`, the small-`n` closed
//! values and a small bank of auxiliary formulas.

pub mod bank;
pub mod fit;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::combinat::draconian::{enumerate_pair_sequences, Mode};
use crate::combinat::enumerate_draconian;
use crate::combinat::perm::permutations;
use crate::error::{Error, Result};
use crate::exactmath::rational::{pow, to_integer};
use crate::exactmath::{
    binomial, binomial_u, double_factorial, factorial, multinomial, rat, ratio, Polynomial,
    Rational, Series,
};

pub use bank::{formula_bank, Aux};
pub use fit::{conj_vmn_fit, conj_vmn_fit_default, FitReport, FitTerm};

/// Volume engines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VolumeMethod {
    /// `m!` times the leading coefficient of the counted Ehrhart polynomial.
    Oracle,
    /// Recursion over `k = 1..m` with tree-function weights.
    Recursive,
    /// Double binomial sum with `(2n)^{m-j}`.
    ClosedDouble,
    /// Single binomial sum with `(2n+1)^{m-i}`.
    ClosedSingle,
    /// `(m!)^2 [z^m] sqrt(1-z) e^{(n+1/2) z}`.
    Series,
    /// Three-term recurrence in `m`.
    ThreeTerm,
    /// Sum over draconian sequences.
    Draconian,
    /// Sum over pair-only sequences, valid at `n = m - 1`.
    Parking,
    /// Sum over permutations with parameters `λ_i = i`.
    Lambda,
    /// Sum over permutations with parameters `λ_i` = the `i`-th prime.
    LambdaPrimes,
    /// Closed values for `n <= 4`.
    SmallN,
}

impl VolumeMethod {
    pub const ALL: [VolumeMethod; 11] = [
        VolumeMethod::Oracle,
        VolumeMethod::Recursive,
        VolumeMethod::ClosedDouble,
        VolumeMethod::ClosedSingle,
        VolumeMethod::Series,
        VolumeMethod::ThreeTerm,
        VolumeMethod::Draconian,
        VolumeMethod::Parking,
        VolumeMethod::Lambda,
        VolumeMethod::LambdaPrimes,
        VolumeMethod::SmallN,
    ];

    pub fn name(self) -> &'static str {
        match self {
            VolumeMethod::Oracle => "oracle",
            VolumeMethod::Recursive => "recursive",
            VolumeMethod::ClosedDouble => "closed_double",
            VolumeMethod::ClosedSingle => "closed_single",
            VolumeMethod::Series => "series",
            VolumeMethod::ThreeTerm => "three_term",
            VolumeMethod::Draconian => "draconian",
            VolumeMethod::Parking => "parking",
            VolumeMethod::Lambda => "lambda",
            VolumeMethod::LambdaPrimes => "lambda_primes",
            VolumeMethod::SmallN => "small_n",
        }
    }

    pub fn parse(s: &str) -> Result<VolumeMethod> {
        VolumeMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown volume method {s:?}")))
    }

    /// Whether the engine is defined for `(m, n)` (and within desk scale for
    /// the enumerative ones).
    pub fn applies(self, m: usize, n: usize) -> bool {
        let above = n + 1 >= m;
        match self {
            VolumeMethod::Oracle => m <= 5 && n <= 7,
            VolumeMethod::Recursive
            | VolumeMethod::ClosedDouble
            | VolumeMethod::ClosedSingle
            | VolumeMethod::Series
            | VolumeMethod::ThreeTerm => above,
            VolumeMethod::Draconian => above && m <= 6,
            VolumeMethod::Parking => n + 1 == m && m <= 6,
            VolumeMethod::Lambda | VolumeMethod::LambdaPrimes => above && m <= 5,
            VolumeMethod::SmallN => n <= 4,
        }
    }
}

fn require_above(m: usize, n: usize) -> Result<()> {
    if n + 1 < m {
        return Err(Error::OutOfRange(format!(
            "this engine needs n >= m - 1, got m = {m}, n = {n}"
        )));
    }
    Ok(())
}

fn integral(r: &Rational, what: &str) -> Result<BigInt> {
    to_integer(r).ok_or_else(|| Error::Internal(format!("{what} produced the non-integer {r}")))
}

fn frac(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

/// Volume through the counted Ehrhart polynomial.
pub fn nvol_oracle(m: usize, n: usize, workers: usize) -> Result<BigInt> {
    let ehr = crate::ehrhart::ehr_interpolate(m, n, workers)?;
    integral(&(ehr.leading() * frac(&factorial(m as u32))), "the oracle")
}

/// `v(m,n) = (m-1)! sum_{k=1}^m k^{k-2} v(m-k,n-k)/(m-k)! (kn - C(k,2)) C(m,k)`
/// with `v(0, .) = 1`; the shifted arguments may go negative in `n`.
pub fn nvol_recursive(m: usize, n: usize) -> Result<BigInt> {
    require_above(m, n)?;
    let mut memo = HashMap::new();
    integral(&recursive_value(m, n as i64, &mut memo), "the recursion")
}

fn recursive_value(m: usize, n: i64, memo: &mut HashMap<(usize, i64), Rational>) -> Rational {
    if m == 0 {
        return Rational::one();
    }
    if let Some(v) = memo.get(&(m, n)) {
        return v.clone();
    }
    let mut sum = Rational::zero();
    for k in 1..=m {
        let kk = k as i64;
        let tree = if k == 1 {
            Rational::one()
        } else {
            rat(kk).pow(k as i32 - 2)
        };
        let inner = recursive_value(m - k, n - kk, memo) / frac(&factorial((m - k) as u32));
        let linear = rat(kk * n - kk * (kk - 1) / 2);
        sum += tree * inner * linear * frac(&binomial_u(m as u64, k as u64));
    }
    let v = sum * frac(&factorial(m as u32 - 1));
    memo.insert((m, n), v.clone());
    v
}

/// `-(m!/2^m) sum_{0<=i<=j<=m} C(m,j) C(j,i) (2i-3)!! (2n)^{m-j}` as a
/// polynomial in `n`.
pub fn nvol_poly_n(m: usize) -> Polynomial {
    let mut acc = Polynomial::zero();
    let two_n = Polynomial::from_ints(&[0, 2]);
    for j in 0..=m {
        let mut inner = BigInt::zero();
        for i in 0..=j {
            inner += binomial_u(j as u64, i as u64) * double_factorial(i as u32);
        }
        let coeff = frac(&(binomial_u(m as u64, j as u64) * inner));
        acc = &acc + &two_n.pow(m - j).scale(&coeff);
    }
    let scale = -frac(&factorial(m as u32)) / frac(&BigInt::from(2u32).pow(m as u32));
    acc.scale(&scale)
}

fn closed_double(m: usize, n: usize) -> Result<BigInt> {
    integral(&nvol_poly_n(m).eval_int(n as i64), "the double sum")
}

fn closed_single(m: usize, n: usize) -> Result<BigInt> {
    let base = rat(2 * n as i64 + 1);
    let mut sum = Rational::zero();
    for i in 0..=m {
        sum += frac(&(binomial_u(m as u64, i as u64) * double_factorial(i as u32)))
            * pow(&base, m - i);
    }
    let v = -sum * frac(&factorial(m as u32)) / frac(&BigInt::from(2u32).pow(m as u32));
    integral(&v, "the single sum")
}

fn series_value(m: usize, n: usize) -> Result<BigInt> {
    let order = m + 1;
    let c = rat(n as i64) + ratio(1, 2);
    let e = Series::linear(c, order).exp()?;
    let s = Series::sqrt_one_minus(&rat(1), order).mul(&e)?;
    let f = frac(&factorial(m as u32));
    integral(&(s.coeff(m)? * &f * &f), "the series coefficient")
}

/// The three closed forms: double sum, single sum, series coefficient.
/// Errors if they disagree.
pub fn nvol_closed(m: usize, n: usize) -> Result<[BigInt; 3]> {
    require_above(m, n)?;
    let values = [
        closed_double(m, n)?,
        closed_single(m, n)?,
        series_value(m, n)?,
    ];
    if values[0] != values[1] || values[0] != values[2] {
        return Err(Error::Disagreement(format!(
            "closed forms for v({m},{n}): {} / {} / {}",
            values[0], values[1], values[2]
        )));
    }
    Ok(values)
}

/// `W(m) = (m+n-1) W(m-1) - (m-1)(n+1/2) W(m-2)`, `W(0) = 1`; the recurrence
/// produces `W(m) = v(m,n)/m!`, so the volume is `m! W(m)`.
pub fn nvol_three_term(m: usize, n: usize) -> Result<BigInt> {
    require_above(m, n)?;
    let nn = rat(n as i64);
    let half = ratio(1, 2);
    let mut prev = Rational::zero();
    let mut cur = Rational::one();
    for k in 1..=m {
        let kk = rat(k as i64);
        let next = (&kk + &nn - rat(1)) * &cur - (&kk - rat(1)) * (&nn + &half) * &prev;
        prev = cur;
        cur = next;
    }
    integral(
        &(cur * frac(&factorial(m as u32))),
        "the three-term recurrence",
    )
}

/// Which draconian volume sum to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DraconianVolume {
    /// `sum multinomial(m; a) (n-m+1)^{a_1+...+a_m}` over all sequences.
    General,
    /// Pair-only sequences; only meaningful at `n = m - 1`.
    ParkingCount,
}

/// Volume as a polynomial in `N = n - m + 1` from the draconian sum.
pub fn nvol_poly_big_n(m: usize) -> Polynomial {
    let mut coeffs = vec![BigInt::zero(); m + 1];
    for s in enumerate_draconian(m, Mode::Volume) {
        let singles: u32 = s.singletons().iter().sum();
        coeffs[singles as usize] += multinomial(&s.a);
    }
    Polynomial::new(coeffs.iter().map(frac).collect())
}

pub fn nvol_draconian(m: usize, n: usize, mode: DraconianVolume) -> Result<BigInt> {
    require_above(m, n)?;
    match mode {
        DraconianVolume::General => {
            let big_n = n as i64 - m as i64 + 1;
            integral(&nvol_poly_big_n(m).eval_int(big_n), "the draconian sum")
        }
        DraconianVolume::ParkingCount => {
            if n + 1 != m {
                return Err(Error::OutOfRange(format!(
                    "the pair-only sum applies at n = m - 1, got m = {m}, n = {n}"
                )));
            }
            Ok(enumerate_pair_sequences(m, Mode::Volume)
                .iter()
                .map(|b| multinomial(b))
                .sum())
        }
    }
}

/// `sum_σ (sum_{i<p} (n-i+1) λ_{σ(i)} + (m-p+1)(2n-m-p+2)/2 λ_{m+1})^m
///  / prod_{i=1}^m (λ_{σ(i)} - λ_{σ(i+1)})` over `σ ∈ S_{m+1}`, with
/// `p = σ^{-1}(m+1)`.
pub fn nvol_lambda(m: usize, n: usize, lambda: &[Rational]) -> Result<Rational> {
    require_above(m, n)?;
    if lambda.len() != m + 1 {
        return Err(Error::DimensionMismatch {
            expected: m + 1,
            got: lambda.len(),
        });
    }
    for i in 0..lambda.len() {
        if lambda[i + 1..].contains(&lambda[i]) {
            return Err(Error::InvalidParameter(
                "the λ parameters must be pairwise distinct".into(),
            ));
        }
    }
    let n = n as i64;
    let mi = m as i64;
    let mut total = Rational::zero();
    for sigma in permutations(m + 1) {
        let p = sigma.iter().position(|&v| v == m + 1).expect("m+1 occurs") as i64 + 1;
        let mut inner = Rational::zero();
        for i in 1..p {
            inner += rat(n - i + 1) * &lambda[sigma[(i - 1) as usize] - 1];
        }
        inner += ratio((mi - p + 1) * (2 * n - mi - p + 2), 2) * &lambda[m];
        let mut denom = Rational::one();
        for i in 0..m {
            denom *= &lambda[sigma[i] - 1] - &lambda[sigma[i + 1] - 1];
        }
        total += pow(&inner, m) / denom;
    }
    Ok(total)
}

/// `λ_i = i`.
pub fn default_lambda(m: usize) -> Vec<Rational> {
    (1..=m as i64 + 1).map(rat).collect()
}

/// `λ_i` = the `i`-th prime.
pub fn prime_lambda(m: usize) -> Vec<Rational> {
    let mut primes = Vec::new();
    let mut k = 2i64;
    while primes.len() < m + 1 {
        if (2..k).take_while(|d| d * d <= k).all(|d| k % d != 0) {
            primes.push(rat(k));
        }
        k += 1;
    }
    primes
}

/// Closed values for `n <= 4`, valid for every `m`.
pub fn nvol_small_n(m: usize, n: usize) -> Result<BigInt> {
    let mi = m as i64;
    let p = |b: u32| BigInt::from(b).pow(m as u32);
    let value = match n {
        1 => BigInt::one(),
        2 => p(3) - mi,
        3 => p(6) - mi * p(3) - (mi - 1) * binomial(mi, 2),
        4 => {
            let cubic = frac(&BigInt::from(mi * (mi - 1) * (mi - 3))) / rat(6);
            let v = frac(&(p(10) - mi * p(6)))
                - cubic * frac(&p(3))
                - frac(&(BigInt::from(3 * mi * mi - 6 * mi + 1) * binomial(mi, 3)));
            integral(&v, "the n = 4 formula")?
        }
        _ => {
            return Err(Error::OutOfRange(format!(
                "closed small-n volumes exist for n <= 4, got n = {n}"
            )))
        }
    };
    Ok(value)
}

/// Volume by one engine.
pub fn nvol(m: usize, n: usize, method: VolumeMethod, workers: usize) -> Result<BigInt> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter("m and n must be positive".into()));
    }
    match method {
        VolumeMethod::Oracle => nvol_oracle(m, n, workers),
        VolumeMethod::Recursive => nvol_recursive(m, n),
        VolumeMethod::ClosedDouble => {
            require_above(m, n)?;
            closed_double(m, n)
        }
        VolumeMethod::ClosedSingle => {
            require_above(m, n)?;
            closed_single(m, n)
        }
        VolumeMethod::Series => {
            require_above(m, n)?;
            series_value(m, n)
        }
        VolumeMethod::ThreeTerm => nvol_three_term(m, n),
        VolumeMethod::Draconian => nvol_draconian(m, n, DraconianVolume::General),
        VolumeMethod::Parking => nvol_draconian(m, n, DraconianVolume::ParkingCount),
        VolumeMethod::Lambda => integral(&nvol_lambda(m, n, &default_lambda(m))?, "the λ sum"),
        VolumeMethod::LambdaPrimes => integral(&nvol_lambda(m, n, &prime_lambda(m))?, "the λ sum"),
        VolumeMethod::SmallN => nvol_small_n(m, n),
    }
}
