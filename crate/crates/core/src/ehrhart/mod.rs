//! Ehrhart polynomials of `P(m, n)`: a counting oracle, closed formulas for
//! small `m` or small `n`, the draconian sum, the conjectured generating
//! function and recurrence, and h*-vector tools.

pub mod aux;
pub mod hstar;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::combinat::draconian::{enumerate_pair_sequences, Mode};
use crate::combinat::enumerate_draconian;
use crate::error::{Error, Result};
use crate::exactmath::interp::interpolate_from_zero;
use crate::exactmath::{
    binomial_poly, binomial_u, double_factorial, factorial, multinomial, rat, ratio, Polynomial,
    Rational, Series,
};
use crate::polytope::{count_points, count_pp, v_to_h, PPSpec, VRep};

pub use aux::{aux3_half_open_count, aux3_polytope, aux_lemma3};
pub use hstar::{from_hstar, pyramid, to_hstar};

/// Ehrhart engines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EhrMethod {
    /// Lattice-point counts at `t = 0..m`, interpolated, checked at `t = m+1`.
    Interpolate,
    /// Binomial-basis formulas for `n <= 3`.
    ClosedSmallN,
    /// Formulas in `n` for `m <= 4`.
    ClosedSmallM,
    /// Sum over draconian sequences.
    Draconian,
    /// Pair-only sum at `n = m - 1`.
    Parking,
    /// Conjectured double sum.
    ConjectureSum,
    /// Conjectured generating function.
    ConjectureSeries,
    /// Conjectured recurrence in `m`.
    Recurrence,
}

impl EhrMethod {
    pub const ALL: [EhrMethod; 8] = [
        EhrMethod::Interpolate,
        EhrMethod::ClosedSmallN,
        EhrMethod::ClosedSmallM,
        EhrMethod::Draconian,
        EhrMethod::Parking,
        EhrMethod::ConjectureSum,
        EhrMethod::ConjectureSeries,
        EhrMethod::Recurrence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EhrMethod::Interpolate => "interpolate",
            EhrMethod::ClosedSmallN => "closed_small_n",
            EhrMethod::ClosedSmallM => "closed_small_m",
            EhrMethod::Draconian => "draconian",
            EhrMethod::Parking => "parking",
            EhrMethod::ConjectureSum => "conjecture_sum",
            EhrMethod::ConjectureSeries => "conjecture_series",
            EhrMethod::Recurrence => "recurrence",
        }
    }

    pub fn parse(s: &str) -> Result<EhrMethod> {
        EhrMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown Ehrhart method {s:?}")))
    }

    /// Output of this engine is conjectural rather than proved.
    pub fn is_conjectural(self) -> bool {
        matches!(
            self,
            EhrMethod::ConjectureSum | EhrMethod::ConjectureSeries | EhrMethod::Recurrence
        )
    }

    /// Whether the engine is defined for `(m, n)` within desk scale.
    pub fn applies(self, m: usize, n: usize) -> bool {
        let above = n + 1 >= m;
        match self {
            EhrMethod::Interpolate => m <= 5 && n <= 7,
            EhrMethod::ClosedSmallN => n <= 3,
            EhrMethod::ClosedSmallM => small_m_range(m, n),
            EhrMethod::Draconian => above && m <= 5,
            EhrMethod::Parking => n + 1 == m && m <= 6,
            EhrMethod::ConjectureSum | EhrMethod::ConjectureSeries | EhrMethod::Recurrence => above,
        }
    }
}

fn small_m_range(m: usize, n: usize) -> bool {
    match m {
        1 | 2 => n >= 1,
        3 => n >= 2,
        4 => n >= 3,
        _ => false,
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

/// Interpolates counts at `t = 0..=degree` and checks one extra node.
fn interpolate_counts(degree: usize, count: impl Fn(u64) -> u64) -> Result<Polynomial> {
    let values: Vec<Rational> = (0..=degree as u64).map(|t| rat(count(t) as i64)).collect();
    let poly = interpolate_from_zero(&values)?;
    let check = degree as u64 + 1;
    let fresh = count(check);
    if poly.eval_int(check as i64) != rat(fresh as i64) {
        return Err(Error::Internal(format!(
            "interpolated polynomial {} misses the count {fresh} at t = {check}",
            poly.render("t")
        )));
    }
    Ok(poly)
}

/// Ehrhart polynomial of `P(m, n)` from lattice-point counts.
pub fn ehr_interpolate(m: usize, n: usize, workers: usize) -> Result<Polynomial> {
    let spec = PPSpec::new(m, n)?;
    interpolate_counts(m, |t| count_pp(spec, t, workers))
}

/// Ehrhart polynomial of a full-dimensional lattice polytope given by its
/// vertices.
pub fn ehr_vrep(v: &VRep, workers: usize) -> Result<Polynomial> {
    let h = v_to_h(v)?;
    interpolate_counts(v.dim, |t| {
        if t == 0 {
            return 1;
        }
        let t = t as i64;
        count_points(&h.dilate(t), &v.bounding_box(t), workers)
    })
}

/// Normalized volume of a full-dimensional lattice polytope.
pub fn nvol_vrep(v: &VRep, workers: usize) -> Result<BigInt> {
    let lead = ehr_vrep(v, workers)?.leading() * Rational::from_integer(factorial(v.dim as u32));
    crate::exactmath::rational::to_integer(&lead)
        .ok_or_else(|| Error::Internal(format!("non-integer normalized volume {lead}")))
}

fn t_plus(a: i64, c: i64) -> Polynomial {
    Polynomial::linear(rat(a), rat(c))
}

fn big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Closed formulas for `n <= 3`, valid for every `m`.
pub fn ehr_closed_small_n(m: usize, n: usize) -> Result<Polynomial> {
    let mi = m as i64;
    let b = |a: i64, c: i64| binomial_poly(&t_plus(a, c), m);
    let poly = match n {
        1 => b(1, mi),
        2 => &b(3, mi) - &b(1, mi - 1).scale(&rat(mi)),
        3 => {
            let inner = &b(1, mi - 1) + &b(1, mi - 2).scale(&rat(mi - 2));
            &(&b(6, mi) - &b(3, mi - 1).scale(&rat(mi)))
                - &inner.scale(&big(binomial_u(m as u64, 2)))
        }
        _ => {
            return Err(Error::OutOfRange(format!(
                "closed small-n Ehrhart polynomials exist for n <= 3, got n = {n}"
            )))
        }
    };
    Ok(poly)
}

/// Closed formulas for `m <= 4` on their stated ranges of `n`.
pub fn ehr_closed_small_m(m: usize, n: usize) -> Result<Polynomial> {
    if !small_m_range(m, n) {
        return Err(Error::OutOfRange(format!(
            "closed small-m formulas cover m = 1, 2 (n >= 1), m = 3 (n >= 2), m = 4 (n >= 3); got m = {m}, n = {n}"
        )));
    }
    let nn = rat(n as i64);
    let h = |a, b| ratio(a, b);
    let p = |c: &[Rational]| Polynomial::new(c.to_vec());
    let n2 = &nn * &nn;
    let n3 = &n2 * &nn;
    let n4 = &n3 * &nn;
    Ok(match m {
        1 => p(&[rat(1), nn.clone()]),
        2 => p(&[rat(1), rat(2) * &nn - h(1, 2), &n2 - h(1, 2)]),
        3 => p(&[
            rat(1),
            rat(3) * &nn - h(3, 2),
            rat(3) * &n2 - h(3, 2) * &nn - h(3, 2),
            &n3 - h(3, 2) * &nn - rat(1),
        ]),
        _ => p(&[
            rat(1),
            rat(4) * &nn - rat(3),
            rat(6) * &n2 - rat(6) * &nn - h(9, 4),
            rat(4) * &n3 - rat(3) * &n2 - rat(6) * &nn - h(5, 2),
            &n4 - rat(3) * &n2 - rat(4) * &nn - h(9, 4),
        ]),
    })
}

/// `sum prod_{i<=m} C(Nt + a_i - 1, a_i) prod_{pairs} C(t + a - 1, a)` over
/// the Ehrhart-mode draconian sequences, `N = n - m + 1`.
pub fn ehr_draconian(m: usize, n: usize) -> Result<Polynomial> {
    require_above(m, n)?;
    let big_n = n as i64 - m as i64 + 1;
    let mut acc = Polynomial::zero();
    for s in enumerate_draconian(m, Mode::Ehrhart) {
        let mut term = Polynomial::one();
        for &a in s.singletons() {
            if a > 0 {
                term = &term * &binomial_poly(&t_plus(big_n, a as i64 - 1), a as usize);
            }
        }
        for &a in s.pairs() {
            if a > 0 {
                term = &term * &binomial_poly(&t_plus(1, a as i64 - 1), a as usize);
            }
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Pair-only sum for `P(m, m-1)`, with the number of sequences, which is the
/// number of lattice points of `P(m, m-1)`. For `m = 1` the polytope
/// `P(1, 0)` is the origin.
pub fn ehr_parking(m: usize) -> Result<(Polynomial, u64)> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    let seqs = enumerate_pair_sequences(m, Mode::Ehrhart);
    let mut acc = Polynomial::zero();
    for b in &seqs {
        let mut term = Polynomial::one();
        for &a in b {
            if a > 0 {
                term = &term * &binomial_poly(&t_plus(1, a as i64 - 1), a as usize);
            }
        }
        acc = &acc + &term;
    }
    Ok((acc, seqs.len() as u64))
}

/// The conjectured double sum
/// `2^{-m} sum_i sum_{j>=2i} (-1)^{i+1} multinomial(m; m-j, j-2i, i, i) i!
///  (2(j-2i)-3)!! t^{j-i} (2nt+t+2)^{m-j}`.
pub fn ehr_conjecture_sum(m: usize, n: usize) -> Result<Polynomial> {
    require_above(m, n)?;
    let base = Polynomial::linear(rat(2 * n as i64 + 1), rat(2));
    let mut acc = Polynomial::zero();
    for i in 0..=m / 2 {
        for j in 2 * i..=m {
            let parts = [(m - j) as u32, (j - 2 * i) as u32, i as u32, i as u32];
            let mut c =
                multinomial(&parts) * factorial(i as u32) * double_factorial((j - 2 * i) as u32);
            if i % 2 == 0 {
                c = -c;
            }
            let term = &Polynomial::monomial(big(c), j - i) * &base.pow(m - j);
            acc = &acc + &term;
        }
    }
    Ok(acc.scale(&ratio(1, 1 << m)))
}

/// `m! [z^m] sqrt(1 - tz) exp((nt + t/2 + 1) z - t z^2 / 4)` at one integer `t`.
pub fn conjecture_series_value(m: usize, n: usize, t: i64) -> Result<Rational> {
    let order = m + 1;
    let tr = rat(t);
    let lin = &tr * rat(n as i64) + &tr * ratio(1, 2) + rat(1);
    let mut exponent = vec![Rational::zero(); order];
    if order > 1 {
        exponent[1] = lin;
    }
    if order > 2 {
        exponent[2] = -&tr * ratio(1, 4);
    }
    let e = Series::from_coeffs(exponent, order).exp()?;
    let s = Series::sqrt_one_minus(&tr, order).mul(&e)?;
    Ok(s.coeff(m)? * big(factorial(m as u32)))
}

/// The conjectured generating function, evaluated at `t = 0..=m+1` and
/// interpolated; errors if the result has degree above `m`.
pub fn ehr_conjecture_series(m: usize, n: usize) -> Result<Polynomial> {
    require_above(m, n)?;
    let values = (0..=m as i64 + 1)
        .map(|t| conjecture_series_value(m, n, t))
        .collect::<Result<Vec<_>>>()?;
    let poly = interpolate_from_zero(&values)?;
    if poly.degree().unwrap_or(0) > m {
        return Err(Error::Internal(format!(
            "the generating function gave degree {:?} above m = {m}",
            poly.degree()
        )));
    }
    Ok(poly)
}

/// Both conjectured forms; errors if they differ.
pub fn ehr_conjecture(m: usize, n: usize) -> Result<(Polynomial, Polynomial)> {
    let sum = ehr_conjecture_sum(m, n)?;
    let series = ehr_conjecture_series(m, n)?;
    if sum != series {
        return Err(Error::Disagreement(format!(
            "conjectured forms differ at m = {m}, n = {n}: {} vs {}",
            sum.render("t"),
            series.render("t")
        )));
    }
    Ok((sum, series))
}

/// `E(k) = (kt + nt - t + 1) E(k-1) - (k-1)(nt + t/2 + 3/2) t E(k-2)
///  + (k-1)(k-2) t^2 E(k-3) / 2` with `E(0) = 1`, at `k = m`.
pub fn ehr_recurrence(m: usize, n: usize) -> Result<Polynomial> {
    require_above(m, n)?;
    let nn = n as i64;
    let mut e: Vec<Polynomial> = vec![Polynomial::one()];
    for k in 1..=m {
        let ki = k as i64;
        let mut next = &Polynomial::linear(rat(ki + nn - 1), rat(1)) * &e[k - 1];
        if k >= 2 {
            let mid = Polynomial::new(vec![rat(0), ratio(3, 2), rat(nn) + ratio(1, 2)]);
            next = &next - &(&mid * &e[k - 2]).scale(&rat(ki - 1));
        }
        if k >= 3 {
            let t2 = Polynomial::monomial(ratio((ki - 1) * (ki - 2), 2), 2);
            next = &next + &(&t2 * &e[k - 3]);
        }
        e.push(next);
    }
    Ok(e.pop().expect("E(m) present"))
}

/// Ehrhart polynomial by one engine.
pub fn ehr(m: usize, n: usize, method: EhrMethod, workers: usize) -> Result<Polynomial> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    if n == 0 {
        if method == EhrMethod::Parking && m == 1 {
            return Ok(Polynomial::one());
        }
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    match method {
        EhrMethod::Interpolate => ehr_interpolate(m, n, workers),
        EhrMethod::ClosedSmallN => ehr_closed_small_n(m, n),
        EhrMethod::ClosedSmallM => ehr_closed_small_m(m, n),
        EhrMethod::Draconian => ehr_draconian(m, n),
        EhrMethod::Parking => {
            if n + 1 != m {
                return Err(Error::OutOfRange(format!(
                    "the pair-only sum applies at n = m - 1, got m = {m}, n = {n}"
                )));
            }
            Ok(ehr_parking(m)?.0)
        }
        EhrMethod::ConjectureSum => ehr_conjecture_sum(m, n),
        EhrMethod::ConjectureSeries => ehr_conjecture_series(m, n),
        EhrMethod::Recurrence => ehr_recurrence(m, n),
    }
}
