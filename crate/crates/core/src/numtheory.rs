//! Arithmetic kernel shared by the conversion engine and the quiver module.
//!
//! Inputs are tiny (divisors of curve classes, tangency weights), so
//! factorization is plain trial division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational number, always stored reduced with a positive denominator.
pub type Rat = BigRational;

/// `n / d` as a [`Rat`].
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// An integer as a [`Rat`].
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Prints `p/q`, or just `p` when the denominator is one.
pub fn format_rat(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p`, `-p`, or `p/q` into a reduced rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::parse(s, "numerator is not an integer"))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::parse(s, "denominator is not an integer"))?;
    if den.is_zero() {
        return Err(Error::parse(s, "zero denominator"));
    }
    Ok(Rat::new(num, den))
}

/// `(-1)^e` as an `i64`.
pub fn sign_pow(e: u64) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            primes.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    primes
}

/// Positive divisors of `n`, ascending. Empty for `n = 0`.
pub fn divisors(n: u64) -> Vec<u64> {
    if n == 0 {
        return Vec::new();
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = 1;
    while k * k <= n {
        if n % k == 0 {
            small.push(k);
            if k * k != n {
                large.push(n / k);
            }
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The Moebius function.
pub fn moebius(n: u64) -> Result<i64> {
    if n == 0 {
        return Err(Error::domain("moebius is undefined at 0"));
    }
    let mut m = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return Ok(0);
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    Ok(sign)
}

/// Generalized binomial coefficient `n (n-1) ... (n-k+1) / k!` for any
/// integer `n`; in particular `binomial(-1, k) = (-1)^k`.
pub fn binomial(n: i64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n) - BigInt::from(i);
        // Exact: a product of i+1 consecutive integers is divisible by (i+1)!.
        acc /= BigInt::from(i + 1);
    }
    acc
}

/// Jordan's totient `J_2(n) = n^2 prod_{p | n} (1 - 1/p^2)`: the number of
/// elements of exact order `n` in `(Z/n)^2`.
pub fn jordan_totient_2(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("jordan totient is undefined at 0"));
    }
    let mut acc = n * n;
    for p in prime_factors(n) {
        acc = acc / (p * p) * (p * p - 1);
    }
    Ok(acc)
}

/// Greatest common divisor of the absolute values; zero for an all-zero input.
pub fn gcd_all<'a>(values: impl IntoIterator<Item = &'a i64>) -> u64 {
    values
        .into_iter()
        .fold(0u64, |g, &v| g.gcd(&v.unsigned_abs()))
}

/// Whether a rational is an integer.
pub fn is_integer(q: &Rat) -> bool {
    q.is_integer()
}

/// Whether a rational is a nonnegative integer.
pub fn is_natural(q: &Rat) -> bool {
    q.is_integer() && !q.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moebius_examples() {
        assert_eq!(moebius(1).unwrap(), 1);
        assert_eq!(moebius(6).unwrap(), 1);
        assert_eq!(moebius(12).unwrap(), 0);
        assert_eq!(moebius(30).unwrap(), -1);
        assert!(moebius(0).is_err());
    }

    #[test]
    fn moebius_sums_vanish() {
        for n in 2..=10_000u64 {
            let s: i64 = divisors(n).iter().map(|&d| moebius(d).unwrap()).sum();
            assert_eq!(s, 0, "n = {n}");
        }
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(-1, 3), BigInt::from(-1));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(7, 3), BigInt::from(35));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(-2, 3), BigInt::from(-4));
        for k in 0..20 {
            assert_eq!(binomial(-1, k), BigInt::from(sign_pow(k)));
        }
    }

    #[test]
    fn binomial_pascal() {
        for n in -20i64..=60 {
            for k in 1u64..=60 {
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k) + binomial(n - 1, k - 1),
                    "({n}, {k})"
                );
            }
            assert_eq!(binomial(n, 0), BigInt::one());
        }
    }

    fn order_count_brute_force(n: u64) -> u64 {
        let order = |x: u64, y: u64| n / n.gcd(&x).gcd(&y);
        let mut count = 0;
        for x in 0..n {
            for y in 0..n {
                if order(x, y) == n {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn jordan_totient_examples() {
        assert_eq!(jordan_totient_2(1).unwrap(), 1);
        assert_eq!(jordan_totient_2(2).unwrap(), 3);
        assert_eq!(jordan_totient_2(6).unwrap(), 24);
        for n in 1..=30 {
            assert_eq!(jordan_totient_2(n).unwrap(), order_count_brute_force(n));
        }
    }

    #[test]
    fn jordan_totient_partitions_the_square() {
        for n in 1..=1000u64 {
            let s: u64 = divisors(n).iter().map(|&d| jordan_totient_2(d).unwrap()).sum();
            assert_eq!(s, n * n);
        }
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
        assert!(divisors(0).is_empty());
    }

    #[test]
    fn rat_text_round_trip() {
        let q = parse_rat("6/-8").unwrap();
        assert_eq!(format_rat(&q), "-3/4");
        assert_eq!(format_rat(&parse_rat("12").unwrap()), "12");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }
}
