//! Conversions between Gromov-Witten numbers and BPS numbers.
//!
//! All maps are keyed by a divisor `k` of the class `beta`: an entry `k -> x`
//! stands for the value attached to `beta / k`. The dependence of log
//! invariants on the contact point `P` enters only through
//! [`PointClassProfile`], the set of `k` with `P` in `E(beta / k)`.
//!
//! Log side, with `w = beta.E`:
//!
//! ```text
//! N_beta = sum_{k in profile} (-1)^{(k-1) w/k} / k^2          m_{beta/k}
//! m_beta = sum_{k in profile} (-1)^{(k-1) w/k} / k^2 * mu(k) * N_{beta/k}
//! ```
//!
//! Local side (Aspinwall-Morrison):
//!
//! ```text
//! GW_beta = sum_{k | beta} n_{beta/k} / k^3
//! n_beta  = sum_{k | beta} mu(k) / k^3 * GW_{beta/k}
//! ```

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::numtheory::{binomial, divisors, int, moebius, sign_pow, Rat};
use crate::{Error, Result};

/// Values keyed by the divisor `k`, meaning "the value for `beta / k`".
pub type DivisorMap = BTreeMap<u64, Rat>;

/// The divisors `k` of `beta` for which the contact point lies in `E(beta/k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointClassProfile {
    divisors: BTreeSet<u64>,
}

impl PointClassProfile {
    /// Validates that `1` is present, every `k` divides `content` (the gcd
    /// of the class coordinates), and the set is closed under divisors:
    /// `E(beta/k)` is contained in `E(beta/k')` whenever `k' | k`.
    pub fn new(divisors_present: impl IntoIterator<Item = u64>, content: u64) -> Result<Self> {
        let set: BTreeSet<u64> = divisors_present.into_iter().collect();
        if !set.contains(&1) {
            return Err(Error::domain("a point profile must contain 1"));
        }
        for &k in &set {
            if k == 0 || content % k != 0 {
                return Err(Error::domain(format!("{k} does not divide the class content {content}")));
            }
            for d in divisors(k) {
                if !set.contains(&d) {
                    return Err(Error::domain(format!(
                        "profile contains {k} but not its divisor {d}"
                    )));
                }
            }
        }
        Ok(PointClassProfile { divisors: set })
    }

    /// Every divisor of `content`: the point lies in every `E(beta/k)`.
    pub fn full(content: u64) -> Self {
        PointClassProfile {
            divisors: divisors(content).into_iter().collect(),
        }
    }

    /// Only `k = 1`: a `beta`-primitive point.
    pub fn primitive() -> Self {
        PointClassProfile {
            divisors: [1].into_iter().collect(),
        }
    }

    pub fn contains(&self, k: u64) -> bool {
        self.divisors.contains(&k)
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.divisors.iter().copied()
    }

    /// The profile of the sub-class `beta / k`: all `j` with `k j` in self.
    pub fn quotient(&self, k: u64) -> Option<Self> {
        if !self.contains(k) {
            return None;
        }
        Some(PointClassProfile {
            divisors: self
                .divisors
                .iter()
                .filter(|&&j| j % k == 0)
                .map(|&j| j / k)
                .collect(),
        })
    }
}

/// `(-1)^{(k-1) w / k}` for `k | w`.
pub fn log_sign(w: u64, k: u64) -> Result<i64> {
    if k == 0 || w % k != 0 {
        return Err(Error::Inconsistent(format!("{k} does not divide the weight {w}")));
    }
    Ok(sign_pow((k - 1) * (w / k)))
}

fn lookup(map: &DivisorMap, k: u64) -> Result<&Rat> {
    map.get(&k)
        .ok_or_else(|| Error::domain(format!("no value supplied for k = {k}")))
}

fn over_k_squared(k: u64) -> Rat {
    let k = BigInt::from(k);
    Rat::new(BigInt::from(1), &k * &k)
}

fn over_k_cubed(k: u64) -> Rat {
    let k = BigInt::from(k);
    Rat::new(BigInt::from(1), &k * &k * &k)
}

/// The log invariant `N^P_beta` from the log BPS numbers `m^P_{beta/k}`.
pub fn log_gw_from_bps(w: u64, m: &DivisorMap, profile: &PointClassProfile) -> Result<Rat> {
    let mut acc = Rat::zero();
    for k in profile.iter() {
        let sign = log_sign(w, k)?;
        acc += int(sign) * over_k_squared(k) * lookup(m, k)?;
    }
    Ok(acc)
}

/// The log BPS number `m^P_beta` from the log invariants `N^P_{beta/k}`.
pub fn log_bps_from_gw(w: u64, n: &DivisorMap, profile: &PointClassProfile) -> Result<Rat> {
    let mut acc = Rat::zero();
    for k in profile.iter() {
        let sign = log_sign(w, k)?;
        let mu = moebius(k)?;
        if mu == 0 {
            continue;
        }
        acc += int(sign * mu) * over_k_squared(k) * lookup(n, k)?;
    }
    Ok(acc)
}

/// Applies [`log_gw_from_bps`] at every sub-class `beta / k` in the profile.
pub fn log_gw_map(w: u64, m: &DivisorMap, profile: &PointClassProfile) -> Result<DivisorMap> {
    profile
        .iter()
        .map(|k| {
            let sub = shifted(m, k);
            let v = log_gw_from_bps(w / k, &sub, &profile.quotient(k).expect("k in profile"))?;
            Ok((k, v))
        })
        .collect()
}

/// Applies [`log_bps_from_gw`] at every sub-class `beta / k` in the profile.
pub fn log_bps_map(w: u64, n: &DivisorMap, profile: &PointClassProfile) -> Result<DivisorMap> {
    profile
        .iter()
        .map(|k| {
            let sub = shifted(n, k);
            let v = log_bps_from_gw(w / k, &sub, &profile.quotient(k).expect("k in profile"))?;
            Ok((k, v))
        })
        .collect()
}

/// Re-keys a map for the sub-class `beta / k`: entry `j` becomes `k j`.
fn shifted(map: &DivisorMap, k: u64) -> DivisorMap {
    map.iter()
        .filter(|(&j, _)| j % k == 0)
        .map(|(&j, v)| (j / k, v.clone()))
        .collect()
}

/// Aspinwall-Morrison: `GW_beta = sum_k n_{beta/k} / k^3` over the keys.
pub fn local_gw_from_bps(n: &DivisorMap) -> Rat {
    n.iter()
        .map(|(&k, v)| over_k_cubed(k) * v)
        .fold(Rat::zero(), |a, b| a + b)
}

/// Inverse of [`local_gw_from_bps`]: `n_beta = sum_k mu(k) / k^3 GW_{beta/k}`.
pub fn local_bps_from_gw(gw: &DivisorMap) -> Rat {
    gw.iter()
        .filter_map(|(&k, v)| {
            let mu = moebius(k).ok()?;
            (mu != 0).then(|| int(mu) * over_k_cubed(k) * v)
        })
        .fold(Rat::zero(), |a, b| a + b)
}

/// Applies [`local_gw_from_bps`] at every key. Keys must be divisor-closed.
pub fn local_gw_map(n: &DivisorMap) -> Result<DivisorMap> {
    check_divisor_closed(n)?;
    Ok(n.keys()
        .map(|&k| (k, local_gw_from_bps(&shifted(n, k))))
        .collect())
}

/// Applies [`local_bps_from_gw`] at every key. Keys must be divisor-closed.
pub fn local_bps_map(gw: &DivisorMap) -> Result<DivisorMap> {
    check_divisor_closed(gw)?;
    Ok(gw
        .keys()
        .map(|&k| (k, local_bps_from_gw(&shifted(gw, k))))
        .collect())
}

fn check_divisor_closed(map: &DivisorMap) -> Result<()> {
    let lcm = map.keys().fold(1u64, |acc, &k| num_integer::lcm(acc, k));
    PointClassProfile::new(map.keys().copied(), lcm).map(|_| ())
}

/// The log-local correspondence `N_beta(S, E) = (-1)^{w-1} w GW_beta(K_S)`.
pub fn log_local_bridge(w: u64, gw: &Rat) -> Result<Rat> {
    if w == 0 {
        return Err(Error::domain("the tangency weight must be positive"));
    }
    Ok(int(sign_pow(w - 1) * w as i64) * gw)
}

/// Contribution of `l:1` covers of a rigid curve `C` with `C.E = ce`,
/// totally ramified at the contact point, to the log invariant:
/// `binom(l (ce - 1) - 1, l - 1) / l^2`.
pub fn contr_multiple_cover(l: u64, ce: u64) -> Result<Rat> {
    if l == 0 || ce == 0 {
        return Err(Error::domain("multiple cover degree and C.E must be positive"));
    }
    let top = l as i64 * (ce as i64 - 1) - 1;
    let b = binomial(top, l - 1);
    let l = BigInt::from(l);
    Ok(Rat::new(b, &l * &l))
}

/// Contribution of the same covers to the log BPS number:
/// `sum_{k | l} (-1)^{(k-1) l ce / k} / k^2 * mu(k) * contr(l / k, ce)`.
pub fn contr_bps(l: u64, ce: u64) -> Result<Rat> {
    if l == 0 || ce == 0 {
        return Err(Error::domain("multiple cover degree and C.E must be positive"));
    }
    let mut acc = Rat::zero();
    for k in divisors(l) {
        let mu = moebius(k)?;
        if mu == 0 {
            continue;
        }
        let sign = log_sign(l * ce, k)?;
        acc += int(sign * mu) * over_k_squared(k) * contr_multiple_cover(l / k, ce)?;
    }
    Ok(acc)
}
