//! Log invariants of `(P2, E)` in classes `dh`, `1 <= d <= 4`, evaluated
//! component by component.
//!
//! For a contact point `P` in the primitive stratum `E(kh)_prim`, the image
//! cycles of maximally tangent maps of class `dh` through `P` are listed in
//! [`stratum_data`]. Each kind of cycle contributes to the log invariant
//! `N^k_{dh}` and the log BPS number `m^k_{dh}`:
//!
//! * an `l`-fold cover of an integral curve `C` contributes `contr(l, C)` and
//!   `contr_bps(l, C)` respectively;
//! * a reducible cycle `C_1 + C_2` with tangency orders `e_1, e_2` (in units
//!   of `C.E`) contributes `min(e_1, e_2)` to both;
//! * an immersed integral curve contributes 1 to both (a cuspidal cubic
//!   contributes 2).
//!
//! The curve counts themselves (2 nodal cubics, 8, 14, 16 quartics) are
//! fixed data, not derived here.

use num_traits::Zero;
use serde::Serialize;

use crate::bps::{contr_bps, contr_multiple_cover, log_bps_from_gw, DivisorMap, PointClassProfile};
use crate::numtheory::{divisors, int, Rat};
use crate::{Error, Result};

/// One family of image cycles in the moduli space at `P`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CycleComponent {
    /// `l` times an integral curve of degree `base_degree`, counted `weight` times.
    MultipleCover { l: u64, base_degree: u64, weight: u64 },
    /// `count` cycles `C_1 + C_2` with tangency orders `d1`, `d2` at `P`,
    /// measured in units of `C.E` (line 3, conic 6, cubic 9).
    TwoComponent { d1: u64, d2: u64, count: u64 },
    /// `count` integral curves of the full degree, each of multiplicity `weight`.
    IntegralImmersed { count: u64, weight: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StratumTable {
    pub d: u64,
    pub k: u64,
    pub components: Vec<CycleComponent>,
    pub generic_j: bool,
}

impl StratumTable {
    /// Every cycle must have total degree `d`.
    pub fn validate(&self) -> Result<()> {
        for c in &self.components {
            let ok = match *c {
                CycleComponent::MultipleCover { l, base_degree, weight } => {
                    l * base_degree == self.d && weight >= 1 && l >= 1
                }
                CycleComponent::TwoComponent { d1, d2, count } => {
                    d1 + d2 == 3 * self.d && d1 > 0 && d2 > 0 && count >= 1
                }
                CycleComponent::IntegralImmersed { count, weight } => count >= 1 && weight >= 1,
            };
            if !ok {
                return Err(Error::Inconsistent(format!(
                    "component {c:?} does not have degree {}",
                    self.d
                )));
            }
        }
        Ok(())
    }
}

/// All `(d, k)` with `k | d <= 4`, in table order.
pub fn strata() -> Vec<(u64, u64)> {
    (1..=4)
        .flat_map(|d| divisors(d).into_iter().map(move |k| (d, k)))
        .collect()
}

/// Image cycles at a point of `E(kh)_prim` in class `dh`.
///
/// `generic_j = false` models `j(E) = 0`, where the two nodal cubics through
/// a flex degenerate to a single cuspidal cubic. The degree-4 data is only
/// known for general `E` and is returned unchanged.
pub fn stratum_data(d: u64, k: u64, generic_j: bool) -> Result<StratumTable> {
    use CycleComponent::*;
    let cover = |l, base_degree| MultipleCover { l, base_degree, weight: 1 };
    let curves = |count| IntegralImmersed { count, weight: 1 };
    let components = match (d, k) {
        (1, 1) => vec![cover(1, 1)],
        (2, 1) => vec![cover(2, 1)],
        (2, 2) => vec![curves(1)],
        (3, 1) if generic_j => vec![cover(3, 1), curves(2)],
        (3, 1) => vec![cover(3, 1), IntegralImmersed { count: 1, weight: 2 }],
        (3, 3) => vec![curves(3)],
        (4, 1) => vec![cover(4, 1), TwoComponent { d1: 3, d2: 9, count: 2 }, curves(8)],
        (4, 2) => vec![cover(2, 2), curves(14)],
        (4, 4) => vec![curves(16)],
        _ => {
            return Err(Error::domain(format!(
                "no cycle data for d = {d}, k = {k} (need k | d <= 4)"
            )))
        }
    };
    let table = StratumTable {
        d,
        k,
        components,
        generic_j,
    };
    table.validate()?;
    Ok(table)
}

/// `(N^k_{dh}, m^k_{dh})` summed over the components.
pub fn evaluate_stratum(table: &StratumTable) -> Result<(Rat, Rat)> {
    let mut n = Rat::zero();
    let mut m = Rat::zero();
    for c in &table.components {
        match *c {
            CycleComponent::MultipleCover { l, base_degree, weight } => {
                let ce = 3 * base_degree;
                n += int(weight as i64) * contr_multiple_cover(l, ce)?;
                m += int(weight as i64) * contr_bps(l, ce)?;
            }
            CycleComponent::TwoComponent { d1, d2, count } => {
                let v = int((count * d1.min(d2)) as i64);
                n += &v;
                m += v;
            }
            CycleComponent::IntegralImmersed { count, weight } => {
                let v = int((count * weight) as i64);
                n += &v;
                m += v;
            }
        }
    }
    Ok((n, m))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumValues {
    pub d: u64,
    pub k: u64,
    pub n: Rat,
    pub m: Rat,
    /// `m` recomputed by Moebius inversion of the `N` values of the sub-classes.
    pub m_inverted: Rat,
}

impl StratumValues {
    pub fn consistent(&self) -> bool {
        self.m == self.m_inverted
    }
}

/// `m^k_{dh}` from the log invariants `N^k_{(d/j)h}` of the sub-classes that
/// pass through the same point, i.e. those `j | d` with `k | d/j`.
pub fn inverted_bps(d: u64, k: u64, generic_j: bool) -> Result<Rat> {
    let mut values = DivisorMap::new();
    for j in divisors(d) {
        if (d / j) % k == 0 {
            let (n, _) = evaluate_stratum(&stratum_data(d / j, k, generic_j)?)?;
            values.insert(j, n);
        }
    }
    let profile = PointClassProfile::new(values.keys().copied(), d)?;
    log_bps_from_gw(3 * d, &values, &profile)
}

/// Every `(d, k)` stratum with exact values; fails if the cycle-by-cycle `m`
/// disagrees with the inverted one or if `m` depends on `k` for some `d`.
pub fn reproduce_p2_table(generic_j: bool) -> Result<Vec<StratumValues>> {
    let mut rows = Vec::new();
    for (d, k) in strata() {
        let (n, m) = evaluate_stratum(&stratum_data(d, k, generic_j)?)?;
        let m_inverted = inverted_bps(d, k, generic_j)?;
        rows.push(StratumValues { d, k, n, m, m_inverted });
    }
    for row in &rows {
        if !row.consistent() {
            return Err(Error::Inconsistent(format!(
                "(d, k) = ({}, {}): components give m = {}, inversion gives {}",
                row.d, row.k, row.m, row.m_inverted
            )));
        }
        let first = rows.iter().find(|r| r.d == row.d).expect("row exists");
        if first.m != row.m {
            return Err(Error::Inconsistent(format!(
                "m^k_{{{}h}} depends on k: {} vs {}",
                row.d, first.m, row.m
            )));
        }
    }
    Ok(rows)
}
