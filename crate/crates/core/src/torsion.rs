//! The contact-point set `E(beta)` as a torsor under `(Z/w)^2`.
//!
//! For the plane and `beta = dh`, choosing a flex point as origin identifies
//! `E(dh)` with the `3d`-torsion `(Z/3d)^2`. A point `P` then lies in `E(kh)`
//! for `k | d` iff its order divides `3k`, and it is `kh`-primitive iff its
//! order is `3k` (when `3 | k`) or one of `k`, `3k` (when `3` does not divide
//! `k`). The primitive strata `E(kh)_prim`, `k | d`, partition `E(dh)`.

use num_integer::Integer;
use serde::Serialize;

use crate::numtheory::{divisors, jordan_totient_2};
use crate::{Error, Result};

/// A point of `(Z/N)^2`, both coordinates reduced mod `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TorsionPoint {
    modulus: u64,
    x: u64,
    y: u64,
}

impl TorsionPoint {
    pub fn new(modulus: u64, x: i64, y: i64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::domain("torsion modulus must be positive"));
        }
        let n = modulus as i64;
        Ok(TorsionPoint {
            modulus,
            x: x.rem_euclid(n) as u64,
            y: y.rem_euclid(n) as u64,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coords(&self) -> (u64, u64) {
        (self.x, self.y)
    }

    /// Order in the group with the current origin.
    pub fn order(&self) -> u64 {
        self.modulus / self.modulus.gcd(&self.x).gcd(&self.y)
    }

    /// The same point seen from a different origin: `P - origin`.
    pub fn translate(&self, origin: &TorsionPoint) -> Result<Self> {
        if origin.modulus != self.modulus {
            return Err(Error::domain("translation between different moduli"));
        }
        TorsionPoint::new(
            self.modulus,
            self.x as i64 - origin.x as i64,
            self.y as i64 - origin.y as i64,
        )
    }

    /// Every point of `(Z/N)^2`.
    pub fn all(modulus: u64) -> impl Iterator<Item = TorsionPoint> {
        (0..modulus).flat_map(move |x| (0..modulus).map(move |y| TorsionPoint { modulus, x, y }))
    }
}

/// Orders of the points in `E(kh)_prim` relative to a flex origin.
pub fn admissible_orders(k: u64) -> Vec<u64> {
    if k % 3 == 0 {
        vec![3 * k]
    } else {
        vec![k, 3 * k]
    }
}

/// Whether `p`, a point of `E(dh)` with a flex as origin, is `dh`-primitive.
pub fn is_dh_primitive_p2(d: u64, p: &TorsionPoint) -> Result<bool> {
    if d == 0 || p.modulus() != 3 * d {
        return Err(Error::domain(format!(
            "a point of E({d}h) lives in (Z/{})^2, got modulus {}",
            3 * d,
            p.modulus()
        )));
    }
    Ok(admissible_orders(d).contains(&p.order()))
}

/// `|E(kh)_prim|` for `k | d`.
pub fn count_primitive_stratum_p2(d: u64, k: u64) -> Result<u64> {
    if d == 0 || k == 0 || d % k != 0 {
        return Err(Error::domain(format!("{k} is not a divisor of {d}")));
    }
    admissible_orders(k)
        .into_iter()
        .map(jordan_totient_2)
        .sum()
}

/// One row of the stratum table of `E(dh)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StratumCount {
    pub k: u64,
    pub orders: Vec<u64>,
    pub count: u64,
}

/// The partition of `E(dh)` into primitive strata, `k | d` ascending.
pub fn strata_p2(d: u64) -> Result<Vec<StratumCount>> {
    if d == 0 {
        return Err(Error::domain("degree must be positive"));
    }
    divisors(d)
        .into_iter()
        .map(|k| {
            Ok(StratumCount {
                k,
                orders: admissible_orders(k),
                count: count_primitive_stratum_p2(d, k)?,
            })
        })
        .collect()
}
