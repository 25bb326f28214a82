use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::Polynomial;
use super::rational::Rational;

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient for nonnegative `n`; zero when `k` is out of range.
pub fn binomial_u(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// Binomial coefficient `n (n-1) ... (n-k+1) / k!` for any integer `n`,
/// zero for negative `k`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 {
        return binomial_u(n as u64, k as u64);
    }
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= BigInt::from(n - j);
    }
    acc / factorial(k as u32)
}

/// The signed double factorial `(2i-3)!! = -prod_{j=1}^{i} (2j-3)`.
///
/// The overall minus sign is deliberate: with it, `i = 0` gives `-1`, `i = 1`
/// gives `1`, `i = 2` gives `1`, `i = 3` gives `3`, and the Taylor coefficients
/// of `sqrt(1-z)` are exactly `-(2i-3)!! / (2^i i!)`. Standard references
/// define `(-1)!! = 1`, which differs by this sign.
pub fn double_factorial(i: u32) -> BigInt {
    let prod = (1..=i as i64).fold(BigInt::one(), |acc, j| acc * (2 * j - 3));
    -prod
}

/// Multinomial coefficient `(sum k)! / prod k_i!`.
pub fn multinomial(parts: &[u32]) -> BigInt {
    let total: u32 = parts.iter().sum();
    parts
        .iter()
        .fold(factorial(total), |acc, &p| acc / factorial(p))
}

/// Eulerian number: permutations of `[m]` with exactly `i` descents.
pub fn eulerian_number(m: u32, i: u32) -> BigInt {
    if m == 0 {
        return if i == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    if i >= m {
        return BigInt::zero();
    }
    let mut row = vec![BigInt::one()];
    for k in 2..=m {
        let mut next = vec![BigInt::zero(); k as usize];
        for (j, slot) in next.iter_mut().enumerate() {
            let j64 = j as u64;
            let stay = row.get(j).cloned().unwrap_or_else(BigInt::zero) * (j64 + 1);
            let rise = if j > 0 {
                row.get(j - 1).cloned().unwrap_or_else(BigInt::zero) * (k as u64 - j64)
            } else {
                BigInt::zero()
            };
            *slot = stay + rise;
        }
        row = next;
    }
    row[i as usize].clone()
}

/// Eulerian polynomial `A_m(t) = sum_i A(m,i) t^i`, with `A_0 = 1`.
pub fn eulerian(m: u32) -> Polynomial {
    let top = m.max(1);
    Polynomial::new(
        (0..top)
            .map(|i| Rational::from_integer(eulerian_number(m, i)))
            .collect(),
    )
}

/// Stirling number of the second kind.
pub fn stirling2(m: u32, k: u32) -> BigInt {
    let mut row = vec![BigInt::one()];
    for i in 1..=m as usize {
        let mut next = vec![BigInt::zero(); i + 1];
        for (j, slot) in next.iter_mut().enumerate().skip(1) {
            let same = row.get(j).cloned().unwrap_or_else(BigInt::zero) * j;
            *slot = same + &row[j - 1];
        }
        row = next;
    }
    row.get(k as usize).cloned().unwrap_or_else(BigInt::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::perm::{descents, permutations};

    fn descent_census(m: usize) -> Vec<u64> {
        let mut counts = vec![0u64; m.max(1)];
        for p in permutations(m) {
            counts[descents(&p)] += 1;
        }
        counts
    }

    fn set_partitions_into(m: usize, k: usize) -> u64 {
        // restricted growth strings with exactly k blocks
        fn go(pos: usize, m: usize, used: usize, k: usize) -> u64 {
            if pos == m {
                return u64::from(used == k);
            }
            let mut total = 0;
            for b in 0..=used.min(k.saturating_sub(1)) {
                let next_used = if b == used { used + 1 } else { used };
                if next_used <= k {
                    total += go(pos + 1, m, next_used, k);
                }
            }
            total
        }
        go(0, m, 0, k)
    }

    #[test]
    fn double_factorial_sign_convention() {
        assert_eq!(double_factorial(0), BigInt::from(-1));
        assert_eq!(double_factorial(1), BigInt::from(1));
        assert_eq!(double_factorial(2), BigInt::from(1));
        assert_eq!(double_factorial(3), BigInt::from(3));
        assert_eq!(double_factorial(4), BigInt::from(15));
    }

    #[test]
    fn eulerian_matches_descent_census() {
        assert_eq!(eulerian(0), Polynomial::from_ints(&[1]));
        assert_eq!(eulerian(2), Polynomial::from_ints(&[1, 1]));
        assert_eq!(eulerian(3), Polynomial::from_ints(&[1, 4, 1]));
        for m in 1..=7usize {
            let census = descent_census(m);
            for (i, c) in census.iter().enumerate() {
                assert_eq!(
                    eulerian_number(m as u32, i as u32),
                    BigInt::from(*c),
                    "A({m},{i})"
                );
            }
        }
    }

    #[test]
    fn eulerian_sums_to_factorial_and_is_symmetric() {
        for m in 1..=8u32 {
            let a = eulerian(m);
            let sum: Rational = a.coeffs().iter().cloned().sum();
            assert_eq!(sum, Rational::from_integer(factorial(m)));
            for i in 0..m {
                assert_eq!(eulerian_number(m, i), eulerian_number(m, m - 1 - i));
            }
        }
    }

    #[test]
    fn stirling_matches_set_partition_count() {
        assert_eq!(stirling2(3, 2), BigInt::from(3));
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2(0, 0), BigInt::from(1));
        for m in 0..=7 {
            assert_eq!(stirling2(m as u32, m as u32), BigInt::from(1));
            for k in 1..=m {
                assert_eq!(
                    stirling2(m as u32, k as u32),
                    BigInt::from(set_partitions_into(m, k))
                );
            }
        }
    }

    #[test]
    fn binomials_and_multinomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 3), BigInt::from(0));
        assert_eq!(binomial(-1, 2), BigInt::from(1));
        assert_eq!(binomial(-2, 3), BigInt::from(-4));
        assert_eq!(binomial(4, -1), BigInt::from(0));
        assert_eq!(multinomial(&[1, 1, 0]), BigInt::from(2));
        assert_eq!(multinomial(&[2, 1, 1]), BigInt::from(12));
        assert_eq!(factorial(0), BigInt::from(1));
    }
}
