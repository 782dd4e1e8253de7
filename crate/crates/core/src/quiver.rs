//! DT invariants of the `m`-loop quiver.
//!
//! `dt(m, n)` is given by Reineke's closed formula
//!
//! ```text
//! dt(m, n) = 1/n^2 sum_{d | n} mu(n/d) (-1)^{(m-1)(n-d)} binom(dm - 1, d - 1)
//! ```
//!
//! and is characterized by the product expansion of the generating series
//! `F(t) = sum_n chi(Hilb_n) t^n` of the noncommutative Hilbert schemes:
//!
//! ```text
//! F((-1)^{m-1} t) = prod_{n >= 1} (1 - t^n)^{-(-1)^{(m-1) n} n dt(m, n)}
//! ```

use num_bigint::BigInt;
use num_traits::Zero;

use crate::numtheory::{binomial, divisors, int, moebius, sign_pow, Rat};
use crate::series::RatSeries;
use crate::{Error, Result};

/// `(-1)^{(m-1) e}` for `m >= 0`.
fn twist(m: u64, e: u64) -> i64 {
    if m == 0 {
        sign_pow(e)
    } else {
        sign_pow((m - 1) * e)
    }
}

/// The closed formula for `dt(m, n)`, `n >= 1`.
pub fn dt(m: u64, n: u64) -> Result<Rat> {
    if n == 0 {
        return Err(Error::domain("dt(m, n) needs n >= 1"));
    }
    let mut acc = BigInt::zero();
    for d in divisors(n) {
        let mu = moebius(n / d)?;
        if mu == 0 {
            continue;
        }
        let b = binomial((d * m) as i64 - 1, d - 1);
        acc += b * (mu * twist(m, n - d));
    }
    let n = BigInt::from(n);
    Ok(Rat::new(acc, &n * &n))
}

/// Exponent of `(1 - t^n)` in the product expansion:
/// `-(-1)^{(m-1) n} n dt(m, n)`.
fn product_exponent(m: u64, n: u64, dt_n: &Rat) -> Rat {
    int(-twist(m, n) * n as i64) * dt_n
}

/// Expands the product formula to order `order` and undoes the sign
/// substitution, returning `sum_{n <= order} chi(Hilb_n^{(m)}) t^n`.
pub fn dt_product_expansion(m: u64, order: usize) -> Result<RatSeries> {
    if order == 0 {
        return Err(Error::domain("expansion order must be positive"));
    }
    let mut log = RatSeries::zero(order);
    for n in 1..=order {
        let dt_n = dt(m, n as u64)?;
        if dt_n.is_zero() {
            continue;
        }
        let e = product_exponent(m, n as u64, &dt_n);
        log = &log + &RatSeries::log_one_minus_power(n, order).scale(&e);
    }
    let twisted = log.exp()?;
    // t -> (-1)^{m-1} t is an involution.
    Ok(if twist(m, 1) == 1 {
        twisted
    } else {
        twisted.negate_variable()
    })
}

/// Recovers `dt(m, 1..=order)` from a generating series by logarithmic
/// differentiation and Moebius inversion; independent of the closed formula.
pub fn dt_from_series(m: u64, series: &RatSeries) -> Result<Vec<Rat>> {
    let order = series.truncation_order();
    let twisted = if twist(m, 1) == 1 {
        series.clone()
    } else {
        series.negate_variable()
    };
    // t d/dt log G = sum_N (-sum_{n | N} n c_n) t^N, c_n the product exponents.
    let log_derivative = twisted.log()?;
    let b: Vec<Rat> = (0..=order)
        .map(|i| -log_derivative.coeff(i) * int(i as i64))
        .collect();
    let mut out = Vec::with_capacity(order);
    for n in 1..=order {
        let mut n_c = Rat::zero();
        for d in divisors(n as u64) {
            let mu = moebius(n as u64 / d)?;
            if mu != 0 {
                n_c += int(mu) * &b[d as usize];
            }
        }
        // n c_n = -(-1)^{(m-1) n} n^2 dt_n
        let dt_n = -n_c * int(twist(m, n as u64)) / int((n * n) as i64);
        out.push(dt_n);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::is_natural;

    fn dt_int(m: u64, n: u64) -> Rat {
        dt(m, n).unwrap()
    }

    #[test]
    fn closed_formula_examples() {
        for l in 2..=12 {
            assert_eq!(dt_int(0, l), int(0));
            assert_eq!(dt_int(1, l), int(0));
        }
        assert_eq!(dt_int(0, 1), int(1));
        assert_eq!(dt_int(2, 2), int(1));
        assert_eq!(dt_int(2, 3), int(1));
        assert_eq!(dt_int(2, 4), int(2));
        assert_eq!(dt_int(5, 2), int(2));
        assert_eq!(dt_int(8, 1), int(1));
        assert!(dt(3, 0).is_err());
    }

    #[test]
    fn integrality() {
        for m in 0..=8 {
            for n in 1..=12 {
                assert!(is_natural(&dt_int(m, n)), "dt({m},{n}) = {}", dt_int(m, n));
            }
        }
    }

    #[test]
    fn one_loop_series_is_geometric() {
        let f = dt_product_expansion(1, 5).unwrap();
        assert!(f.coeffs().iter().all(|c| *c == int(1)));
    }

    #[test]
    fn zero_loop_series() {
        let f = dt_product_expansion(0, 4).unwrap();
        assert_eq!(f.coeffs(), &[int(1), int(1), int(0), int(0), int(0)]);
    }

    #[test]
    fn series_are_natural() {
        for m in 0..=5 {
            let f = dt_product_expansion(m, 10).unwrap();
            assert_eq!(f.coeff(0), &int(1));
            for c in f.coeffs() {
                assert!(is_natural(c), "m={m}: {c}");
            }
        }
    }

    #[test]
    fn round_trip_recovers_dt() {
        for m in 0..=6 {
            let order = 12;
            let f = dt_product_expansion(m, order).unwrap();
            let back = dt_from_series(m, &f).unwrap();
            for n in 1..=order {
                assert_eq!(back[n - 1], dt_int(m, n as u64), "m={m} n={n}");
            }
        }
    }
}
