//! Picard lattices of del Pezzo surfaces.
//!
//! # Coordinates
//!
//! On the blowup `S_r` a class is written `(d; a_1, .., a_r)` and means
//! `d h - sum a_i e_i`. The exceptional curve `e_i` is therefore stored with
//! `a_i = -1`, e.g. `e_2` on `S_3` is `(0; 0, -1, 0)`, and the anticanonical
//! class is `(3; 1, .., 1)`. On `P1 x P1` a class `(a, b)` means
//! `a h_1 + b h_2`.
//!
//! The text form used by the command line is `d;a1,a2,...,ar` for blowups
//! (just `d` on the plane) and `a,b` for `P1 x P1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::numtheory::{divisors, gcd_all};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SurfaceKind {
    /// The plane blown up in `r` general points, `0 <= r <= 8`.
    BlowupP2 { r: u8 },
    P1xP1,
}

/// A del Pezzo surface, identified with its numerical Picard lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SurfaceKind", into = "SurfaceKind")]
pub struct Surface {
    kind: SurfaceKind,
}

impl TryFrom<SurfaceKind> for Surface {
    type Error = Error;

    fn try_from(kind: SurfaceKind) -> Result<Self> {
        match kind {
            SurfaceKind::BlowupP2 { r } => Surface::blowup(r as usize),
            SurfaceKind::P1xP1 => Ok(Surface::p1xp1()),
        }
    }
}

impl From<Surface> for SurfaceKind {
    fn from(s: Surface) -> Self {
        s.kind
    }
}

impl Surface {
    pub fn p2() -> Self {
        Surface {
            kind: SurfaceKind::BlowupP2 { r: 0 },
        }
    }

    /// `S_r`; anything outside `0..=8` is not del Pezzo and is rejected.
    pub fn blowup(r: usize) -> Result<Self> {
        if r > 8 {
            return Err(Error::domain(format!(
                "S_{r} is not del Pezzo: at most 8 points may be blown up"
            )));
        }
        Ok(Surface {
            kind: SurfaceKind::BlowupP2 { r: r as u8 },
        })
    }

    pub fn p1xp1() -> Self {
        Surface {
            kind: SurfaceKind::P1xP1,
        }
    }

    pub fn kind(&self) -> SurfaceKind {
        self.kind
    }

    /// Number of blown-up points, or `None` for `P1 x P1`.
    pub fn blowup_points(&self) -> Option<usize> {
        match self.kind {
            SurfaceKind::BlowupP2 { r } => Some(r as usize),
            SurfaceKind::P1xP1 => None,
        }
    }

    pub fn rank(&self) -> usize {
        match self.kind {
            SurfaceKind::BlowupP2 { r } => r as usize + 1,
            SurfaceKind::P1xP1 => 2,
        }
    }

    /// Short name: `P2`, `S1`..`S8`, or `P1xP1`.
    pub fn name(&self) -> String {
        match self.kind {
            SurfaceKind::BlowupP2 { r: 0 } => "P2".to_string(),
            SurfaceKind::BlowupP2 { r } => format!("S{r}"),
            SurfaceKind::P1xP1 => "P1xP1".to_string(),
        }
    }

    /// The class `h` on a blowup.
    pub fn hyperplane(&self) -> Result<CurveClass> {
        match self.kind {
            SurfaceKind::BlowupP2 { r } => {
                let mut coords = vec![0; r as usize + 1];
                coords[0] = 1;
                Ok(CurveClass::new(coords))
            }
            SurfaceKind::P1xP1 => Err(Error::domain("P1xP1 has no hyperplane class h")),
        }
    }

    /// The exceptional class `e_i`, `1 <= i <= r`, stored with `a_i = -1`.
    pub fn exceptional(&self, i: usize) -> Result<CurveClass> {
        match self.kind {
            SurfaceKind::BlowupP2 { r } if (1..=r as usize).contains(&i) => {
                let mut coords = vec![0; r as usize + 1];
                coords[i] = -1;
                Ok(CurveClass::new(coords))
            }
            _ => Err(Error::domain(format!(
                "{} has no exceptional class e_{i}",
                self.name()
            ))),
        }
    }

    fn check(&self, c: &CurveClass) -> Result<()> {
        if c.len() != self.rank() {
            return Err(Error::Shape {
                expected: self.rank(),
                got: c.len(),
            });
        }
        Ok(())
    }

    /// The intersection product.
    pub fn pairing(&self, a: &CurveClass, b: &CurveClass) -> Result<i64> {
        self.check(a)?;
        self.check(b)?;
        let (x, y) = (a.coords(), b.coords());
        Ok(match self.kind {
            SurfaceKind::BlowupP2 { .. } => {
                x[0] * y[0] - x[1..].iter().zip(&y[1..]).map(|(p, q)| p * q).sum::<i64>()
            }
            SurfaceKind::P1xP1 => x[0] * y[1] + x[1] * y[0],
        })
    }

    pub fn self_intersection(&self, c: &CurveClass) -> Result<i64> {
        self.pairing(c, c)
    }

    /// `K_S`: `(-3; -1, .., -1)` on a blowup, `(-2, -2)` on `P1 x P1`.
    pub fn canonical_class(&self) -> CurveClass {
        match self.kind {
            SurfaceKind::BlowupP2 { r } => {
                let mut coords = vec![-1; r as usize + 1];
                coords[0] = -3;
                CurveClass::new(coords)
            }
            SurfaceKind::P1xP1 => CurveClass::new(vec![-2, -2]),
        }
    }

    pub fn anticanonical_class(&self) -> CurveClass {
        self.canonical_class().scaled(-1)
    }

    /// The tangency weight `w = -K_S . beta` with a smooth anticanonical curve.
    pub fn tangency_weight(&self, beta: &CurveClass) -> Result<i64> {
        self.pairing(&self.anticanonical_class(), beta)
    }

    /// `p_a(beta) = beta (beta + K_S) / 2 + 1`.
    pub fn arithmetic_genus(&self, beta: &CurveClass) -> Result<i64> {
        let twice = self.self_intersection(beta)? + self.pairing(beta, &self.canonical_class())?;
        // beta^2 and K.beta always have the same parity on these lattices.
        assert!(twice % 2 == 0, "beta(beta+K) is odd for {beta}");
        Ok(twice / 2 + 1)
    }

    /// All `k >= 1` with `beta / k` integral, ascending.
    pub fn divisors_of_class(&self, beta: &CurveClass) -> Result<Vec<u64>> {
        self.check(beta)?;
        if beta.is_zero() {
            return Err(Error::domain("the zero class has no divisor list"));
        }
        Ok(divisors(beta.content()))
    }

    /// Topological Euler characteristic: `3 + r` for `S_r`, 4 for `P1 x P1`.
    pub fn euler_characteristic(&self) -> i64 {
        match self.kind {
            SurfaceKind::BlowupP2 { r } => 3 + r as i64,
            SurfaceKind::P1xP1 => 4,
        }
    }

    /// Parses a class in this surface's text syntax, checking its length.
    pub fn parse_class(&self, text: &str) -> Result<CurveClass> {
        let text = text.trim();
        let parse_int = |tok: &str| -> Result<i64> {
            let tok = tok.trim();
            tok.parse::<i64>()
                .map_err(|_| Error::parse(tok, "expected an integer coordinate"))
        };
        let coords = match self.kind {
            SurfaceKind::BlowupP2 { r } => {
                let (head, tail) = match text.split_once(';') {
                    Some((h, t)) => (h, Some(t)),
                    None => (text, None),
                };
                let mut coords = vec![parse_int(head)?];
                if let Some(tail) = tail {
                    if !tail.trim().is_empty() {
                        for tok in tail.split(',') {
                            coords.push(parse_int(tok)?);
                        }
                    }
                }
                if coords.len() != r as usize + 1 {
                    return Err(Error::parse(
                        text,
                        format!(
                            "{} expects {} coordinates `d;a1,..,a{r}`, found {}",
                            self.name(),
                            r + 1,
                            coords.len()
                        ),
                    ));
                }
                coords
            }
            SurfaceKind::P1xP1 => {
                if text.contains(';') {
                    return Err(Error::parse(text, "P1xP1 classes are written `a,b`"));
                }
                let coords = text.split(',').map(parse_int).collect::<Result<Vec<_>>>()?;
                if coords.len() != 2 {
                    return Err(Error::parse(
                        text,
                        format!("P1xP1 expects 2 coordinates `a,b`, found {}", coords.len()),
                    ));
                }
                coords
            }
        };
        Ok(CurveClass::new(coords))
    }

    /// Renders a class in this surface's text syntax.
    pub fn format_class(&self, c: &CurveClass) -> String {
        let join = |xs: &[i64]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self.kind {
            SurfaceKind::BlowupP2 { r: 0 } => c.coords()[0].to_string(),
            SurfaceKind::BlowupP2 { .. } => format!("{};{}", c.coords()[0], join(&c.coords()[1..])),
            SurfaceKind::P1xP1 => join(c.coords()),
        }
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Surface {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t {
            "P2" => return Ok(Surface::p2()),
            "P1xP1" => return Ok(Surface::p1xp1()),
            _ => {}
        }
        if let Some(digits) = t.strip_prefix('S') {
            if let Ok(r) = digits.parse::<usize>() {
                if (1..=8).contains(&r) {
                    return Surface::blowup(r);
                }
            }
        }
        Err(Error::parse(t, "expected one of P2, S1..S8, P1xP1"))
    }
}

/// Integer coordinates of a curve class; see the module docs for the basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CurveClass {
    coords: Vec<i64>,
}

impl CurveClass {
    pub fn new(coords: Vec<i64>) -> Self {
        CurveClass { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// gcd of the coordinates; zero for the zero class.
    pub fn content(&self) -> u64 {
        gcd_all(&self.coords)
    }

    pub fn scaled(&self, k: i64) -> CurveClass {
        CurveClass::new(self.coords.iter().map(|c| c * k).collect())
    }

    /// `self / k`, if every coordinate is divisible by `k`.
    pub fn divided(&self, k: u64) -> Option<CurveClass> {
        let k = i64::try_from(k).ok().filter(|&k| k != 0)?;
        if self.coords.iter().all(|c| c % k == 0) {
            Some(CurveClass::new(self.coords.iter().map(|c| c / k).collect()))
        } else {
            None
        }
    }

    pub fn add(&self, other: &CurveClass) -> CurveClass {
        CurveClass::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "; {c}")?,
                _ => write!(f, ", {c}")?,
            }
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn all_surfaces() -> Vec<Surface> {
        let mut v: Vec<_> = (0..=8).map(|r| Surface::blowup(r).unwrap()).collect();
        v.push(Surface::p1xp1());
        v
    }

    #[test]
    fn pairing_examples() {
        let s2 = Surface::blowup(2).unwrap();
        let h = s2.hyperplane().unwrap();
        let e1 = s2.exceptional(1).unwrap();
        assert_eq!(s2.pairing(&h, &h).unwrap(), 1);
        assert_eq!(s2.pairing(&e1, &e1).unwrap(), -1);
        assert_eq!(s2.pairing(&h, &e1).unwrap(), 0);
        let q = Surface::p1xp1();
        let (h1, h2) = (CurveClass::new(vec![1, 0]), CurveClass::new(vec![0, 1]));
        assert_eq!(q.pairing(&h1, &h2).unwrap(), 1);
        assert_eq!(q.pairing(&h1, &h1).unwrap(), 0);
    }

    #[test]
    fn pairing_shape_error() {
        let s2 = Surface::blowup(2).unwrap();
        let bad = CurveClass::new(vec![1, 0]);
        assert_eq!(
            s2.pairing(&bad, &bad),
            Err(Error::Shape {
                expected: 3,
                got: 2
            })
        );
    }

    #[test]
    fn canonical_classes() {
        assert_eq!(Surface::p2().canonical_class().coords(), &[-3]);
        let s8 = Surface::blowup(8).unwrap();
        let mut k8 = [-1; 9];
        k8[0] = -3;
        assert_eq!(s8.canonical_class().coords(), &k8[..]);
        assert_eq!(Surface::p1xp1().canonical_class().coords(), &[-2, -2]);
        assert_eq!(s8.self_intersection(&s8.canonical_class()).unwrap(), 1);
    }

    #[test]
    fn tangency_weights() {
        let p2 = Surface::p2();
        for d in 0..10 {
            assert_eq!(p2.tangency_weight(&CurveClass::new(vec![d])).unwrap(), 3 * d);
        }
        let s8 = Surface::blowup(8).unwrap();
        assert_eq!(s8.tangency_weight(&s8.anticanonical_class()).unwrap(), 1);
        let q = Surface::p1xp1();
        assert_eq!(q.tangency_weight(&CurveClass::new(vec![2, 3])).unwrap(), 10);
    }

    #[test]
    fn arithmetic_genera() {
        let p2 = Surface::p2();
        for d in 1..12i64 {
            assert_eq!(
                p2.arithmetic_genus(&CurveClass::new(vec![d])).unwrap(),
                (d - 1) * (d - 2) / 2
            );
        }
        let s8 = Surface::blowup(8).unwrap();
        assert_eq!(s8.arithmetic_genus(&s8.anticanonical_class().scaled(2)).unwrap(), 2);
        assert_eq!(
            Surface::p1xp1().arithmetic_genus(&CurveClass::new(vec![2, 3])).unwrap(),
            2
        );
        for s in all_surfaces() {
            assert_eq!(s.arithmetic_genus(&s.anticanonical_class()).unwrap(), 1, "{s}");
        }
    }

    #[test]
    fn divisor_lists() {
        let p2 = Surface::p2();
        assert_eq!(p2.divisors_of_class(&CurveClass::new(vec![4])).unwrap(), vec![1, 2, 4]);
        let s2 = Surface::blowup(2).unwrap();
        assert_eq!(s2.divisors_of_class(&CurveClass::new(vec![3, 1, 1])).unwrap(), vec![1]);
        let s8 = Surface::blowup(8).unwrap();
        assert_eq!(
            s8.divisors_of_class(&s8.canonical_class().scaled(2)).unwrap(),
            vec![1, 2]
        );
        assert!(matches!(
            p2.divisors_of_class(&CurveClass::new(vec![0])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(Surface::p2().euler_characteristic(), 3);
        assert_eq!(Surface::blowup(8).unwrap().euler_characteristic(), 11);
        assert_eq!(Surface::p1xp1().euler_characteristic(), 4);
    }

    #[test]
    fn rejects_non_del_pezzo() {
        assert!(Surface::blowup(9).is_err());
        assert!("S9".parse::<Surface>().is_err());
        assert!("S0".parse::<Surface>().is_err());
        assert!(Surface::try_from(SurfaceKind::BlowupP2 { r: 9 }).is_err());
    }

    #[test]
    fn surface_names_parse_back() {
        for s in all_surfaces() {
            assert_eq!(s.name().parse::<Surface>().unwrap(), s);
        }
    }

    #[test]
    fn class_parsing() {
        let s8: Surface = "S8".parse().unwrap();
        let k = s8.parse_class("3;1,1,1,1,1,1,1,1").unwrap();
        assert_eq!(k, s8.anticanonical_class());
        assert_eq!(s8.format_class(&k), "3;1,1,1,1,1,1,1,1");
        let p2 = Surface::p2();
        assert_eq!(p2.parse_class("4").unwrap().coords(), &[4]);
        assert_eq!(p2.parse_class("4;").unwrap().coords(), &[4]);
        assert_eq!(Surface::p1xp1().parse_class(" 2, 3").unwrap().coords(), &[2, 3]);

        match s8.parse_class("3;1,x,1,1,1,1,1,1") {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "x"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(s8.parse_class("3;1,1"), Err(Error::Parse { .. })));
        assert!(matches!(Surface::p1xp1().parse_class("1;1"), Err(Error::Parse { .. })));
    }

    fn blowup_class(r: usize) -> impl Strategy<Value = (Surface, CurveClass, CurveClass)> {
        (
            prop::collection::vec(-20i64..20, r + 1),
            prop::collection::vec(-20i64..20, r + 1),
        )
            .prop_map(move |(a, b)| {
                (Surface::blowup(r).unwrap(), CurveClass::new(a), CurveClass::new(b))
            })
    }

    proptest! {
        #[test]
        fn pairing_is_symmetric_bilinear((s, a, b) in (0usize..=8).prop_flat_map(blowup_class), k in -5i64..5) {
            prop_assert_eq!(s.pairing(&a, &b).unwrap(), s.pairing(&b, &a).unwrap());
            prop_assert_eq!(s.pairing(&a.scaled(k), &b).unwrap(), k * s.pairing(&a, &b).unwrap());
            let c = a.add(&b);
            prop_assert_eq!(
                s.pairing(&c, &c).unwrap(),
                s.pairing(&a, &a).unwrap() + 2 * s.pairing(&a, &b).unwrap() + s.pairing(&b, &b).unwrap()
            );
        }

        #[test]
        fn weight_is_linear_in_multiples((s, a, _b) in (0usize..=8).prop_flat_map(blowup_class), k in 1i64..10) {
            prop_assert_eq!(s.tangency_weight(&a.scaled(k)).unwrap(), k * s.tangency_weight(&a).unwrap());
        }

        #[test]
        fn divisors_divide((s, a, _b) in (0usize..=8).prop_flat_map(blowup_class)) {
            prop_assume!(!a.is_zero());
            for k in s.divisors_of_class(&a).unwrap() {
                let q = a.divided(k).unwrap();
                prop_assert_eq!(q.scaled(k as i64), a.clone());
            }
        }

        #[test]
        fn p1xp1_form(a in prop::collection::vec(-30i64..30, 2), b in prop::collection::vec(-30i64..30, 2)) {
            let s = Surface::p1xp1();
            let (a, b) = (CurveClass::new(a), CurveClass::new(b));
            prop_assert_eq!(s.pairing(&a, &b).unwrap(), s.pairing(&b, &a).unwrap());
            prop_assert_eq!(s.self_intersection(&a).unwrap() % 2, 0);
        }
    }

    #[test]
    fn signature_is_hyperbolic() {
        // Diagonal form (+1, -1, .., -1): exactly one positive direction.
        for r in 0..=8 {
            let s = Surface::blowup(r).unwrap();
            let pos = (0..=r)
                .filter(|&i| {
                    let mut v = vec![0; r + 1];
                    v[i] = 1;
                    let c = CurveClass::new(v);
                    s.pairing(&c, &c).unwrap() > 0
                })
                .count();
            assert_eq!(pos, 1);
        }
        // h1 + h2 and h1 - h2 diagonalize the P1xP1 form with (+2, -2).
        let q = Surface::p1xp1();
        assert_eq!(q.self_intersection(&CurveClass::new(vec![1, 1])).unwrap(), 2);
        assert_eq!(q.self_intersection(&CurveClass::new(vec![1, -1])).unwrap(), -2);
        assert_eq!(
            q.pairing(&CurveClass::new(vec![1, 1]), &CurveClass::new(vec![1, -1])).unwrap(),
            0
        );
    }
}
