//! Truncated power series with exact rational coefficients.
//!
//! A [`RatSeries`] of order `n` holds the coefficients of `t^0 .. t^n`. Binary
//! operations require equal orders; nothing silently extends or shrinks the
//! truncation.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::numtheory::{int, Rat};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatSeries {
    coeffs: Vec<Rat>,
}

impl RatSeries {
    pub fn zero(order: usize) -> Self {
        RatSeries {
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rat::one();
        s
    }

    /// Builds a series from coefficients `c_0 .. c_order`; missing trailing
    /// coefficients are zero, extra ones are an error.
    pub fn from_coeffs(coeffs: Vec<Rat>, order: usize) -> Result<Self> {
        if coeffs.len() > order + 1 {
            return Err(Error::domain(format!(
                "{} coefficients do not fit a series of order {order}",
                coeffs.len()
            )));
        }
        let mut s = Self::zero(order);
        for (i, c) in coeffs.into_iter().enumerate() {
            s.coeffs[i] = c;
        }
        Ok(s)
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rat {
        &self.coeffs[i]
    }

    fn same_order(&self, other: &Self) {
        assert_eq!(
            self.truncation_order(),
            other.truncation_order(),
            "series orders differ"
        );
    }

    pub fn scale(&self, c: &Rat) -> Self {
        RatSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// `f(t) -> f(-t)`.
    pub fn negate_variable(&self) -> Self {
        RatSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, x)| if i % 2 == 1 { -x } else { x.clone() })
                .collect(),
        }
    }

    /// Formal derivative, keeping the order (top coefficient becomes zero).
    pub fn derivative(&self) -> Self {
        let n = self.truncation_order();
        let mut out = Self::zero(n);
        for i in 1..=n {
            out.coeffs[i - 1] = &self.coeffs[i] * int(i as i64);
        }
        out
    }

    /// `exp(f)` for `f(0) = 0`, via `n h_n = sum_{k=1}^n k f_k h_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::domain("exp needs a series without constant term"));
        }
        let n = self.truncation_order();
        let mut h = Self::zero(n);
        h.coeffs[0] = Rat::one();
        for i in 1..=n {
            let mut acc = Rat::zero();
            for k in 1..=i {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * int(k as i64) * &h.coeffs[i - k];
                }
            }
            h.coeffs[i] = acc / int(i as i64);
        }
        Ok(h)
    }

    /// `log(f)` for `f(0) = 1`, via `n l_n = n f_n - sum_{k=1}^{n-1} k l_k f_{n-k}`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::domain("log needs a series with constant term 1"));
        }
        let n = self.truncation_order();
        let mut l = Self::zero(n);
        for i in 1..=n {
            let mut acc = &self.coeffs[i] * int(i as i64);
            for k in 1..i {
                if !l.coeffs[k].is_zero() {
                    acc -= &l.coeffs[k] * int(k as i64) * &self.coeffs[i - k];
                }
            }
            l.coeffs[i] = acc / int(i as i64);
        }
        Ok(l)
    }

    /// `log(1 - t^step)` truncated: `-sum_j t^{j step} / j`.
    pub fn log_one_minus_power(step: usize, order: usize) -> Self {
        assert!(step >= 1);
        let mut s = Self::zero(order);
        let mut j = 1;
        while j * step <= order {
            s.coeffs[j * step] = -Rat::new(1.into(), (j as i64).into());
            j += 1;
        }
        s
    }
}

impl Add for &RatSeries {
    type Output = RatSeries;

    fn add(self, rhs: &RatSeries) -> RatSeries {
        self.same_order(rhs);
        RatSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &RatSeries {
    type Output = RatSeries;

    fn sub(self, rhs: &RatSeries) -> RatSeries {
        self.same_order(rhs);
        RatSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &RatSeries {
    type Output = RatSeries;

    fn neg(self) -> RatSeries {
        RatSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &RatSeries {
    type Output = RatSeries;

    fn mul(self, rhs: &RatSeries) -> RatSeries {
        self.same_order(rhs);
        let n = self.truncation_order();
        let mut out = RatSeries::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}
