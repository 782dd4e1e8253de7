//! Line and conic classes by exhaustive lattice search.
//!
//! A line class satisfies `l^2 = -1`, `-K.l = 1`; a conic class satisfies
//! `D^2 = 0`, `-K.D = 2` (equivalently `p_a(D) = 0`). On `S_r` both reduce to
//! finding integer vectors `a` with prescribed `sum a_i` and `sum a_i^2` for
//! each degree `d`, which is solved by enumerating non-increasing multisets
//! with a Cauchy-Schwarz cut and then expanding distinct permutations.

use std::collections::BTreeSet;

use crate::lattice::{CurveClass, Surface, SurfaceKind};
use crate::{Error, Result};

/// Degree window scanned for line classes. Every line has degree at most 6;
/// scanning twice as far shows the list is complete.
pub const LINE_DEGREE_BOUND: i64 = 12;

/// Degree window scanned for conic classes (largest conic degree is 7).
pub const CONIC_DEGREE_BOUND: i64 = 14;

/// All line classes, sorted lexicographically by coordinates.
pub fn line_classes(s: &Surface) -> Vec<CurveClass> {
    line_classes_within(s, LINE_DEGREE_BOUND)
}

/// All conic classes, sorted lexicographically by coordinates.
pub fn conic_classes(s: &Surface) -> Vec<CurveClass> {
    conic_classes_within(s, CONIC_DEGREE_BOUND)
}

/// Line classes with leading coordinate in `-bound..=bound`.
pub fn line_classes_within(s: &Surface, bound: i64) -> Vec<CurveClass> {
    let found = solve(s, -1, 1, bound);
    for l in &found {
        assert_eq!(s.self_intersection(l).unwrap(), -1);
        assert_eq!(s.tangency_weight(l).unwrap(), 1);
    }
    found
}

/// Conic classes with leading coordinate in `-bound..=bound`.
pub fn conic_classes_within(s: &Surface, bound: i64) -> Vec<CurveClass> {
    let found = solve(s, 0, 2, bound);
    for c in &found {
        assert_eq!(s.self_intersection(c).unwrap(), 0);
        assert_eq!(s.tangency_weight(c).unwrap(), 2);
        assert_eq!(s.arithmetic_genus(c).unwrap(), 0);
    }
    found
}

/// Classes with `beta^2 = square` and `-K.beta = weight`.
fn solve(s: &Surface, square: i64, weight: i64, bound: i64) -> Vec<CurveClass> {
    let mut out = BTreeSet::new();
    match s.kind() {
        SurfaceKind::P1xP1 => {
            // (a, b): square = 2ab, weight = 2a + 2b
            for a in -bound..=bound {
                for b in -bound..=bound {
                    if 2 * a * b == square && 2 * (a + b) == weight {
                        out.insert(CurveClass::new(vec![a, b]));
                    }
                }
            }
        }
        SurfaceKind::BlowupP2 { r } => {
            let r = r as usize;
            for d in -bound..=bound {
                // d^2 - sum a^2 = square, 3d - sum a = weight
                let sq = d * d - square;
                let sum = 3 * d - weight;
                if sq < 0 {
                    continue;
                }
                if r == 0 {
                    if sq == 0 && sum == 0 {
                        out.insert(CurveClass::new(vec![d]));
                    }
                    continue;
                }
                let max = isqrt(sq);
                let mut prefix = Vec::with_capacity(r);
                let mut multisets = Vec::new();
                multisets_with(r, sum, sq, max, &mut prefix, &mut multisets);
                for m in multisets {
                    for perm in distinct_permutations(&m) {
                        let mut coords = Vec::with_capacity(r + 1);
                        coords.push(d);
                        coords.extend(perm);
                        out.insert(CurveClass::new(coords));
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

fn isqrt(n: i64) -> i64 {
    let mut x = (n as f64).sqrt() as i64;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// Non-increasing sequences of `len` integers, each at most `cap`, with the
/// given sum and sum of squares.
fn multisets_with(
    len: usize,
    sum: i64,
    sq: i64,
    cap: i64,
    prefix: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    if len == 0 {
        if sum == 0 && sq == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    // Cauchy-Schwarz: sum^2 <= len * sq for the remaining entries.
    if sq < 0 || sum * sum > len as i64 * sq {
        return;
    }
    let lo = -isqrt(sq);
    let hi = cap.min(isqrt(sq));
    for v in (lo..=hi).rev() {
        // Remaining entries are all <= v.
        if sum > v * len as i64 {
            break;
        }
        prefix.push(v);
        multisets_with(len - 1, sum - v, sq - v * v, v, prefix, out);
        prefix.pop();
    }
}

fn distinct_permutations(sorted_desc: &[i64]) -> Vec<Vec<i64>> {
    let mut items = sorted_desc.to_vec();
    items.sort_unstable();
    let mut out = vec![items.clone()];
    // Lexicographic next-permutation visits each distinct arrangement once.
    loop {
        let n = items.len();
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| items[i] < items[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| items[j] > items[i]).unwrap();
        items.swap(i, j);
        items[i + 1..].reverse();
        out.push(items.clone());
    }
    out
}

/// The number of line classes orthogonal to `beta`.
pub fn eta(s: &Surface, beta: &CurveClass) -> Result<usize> {
    let lines = line_classes(s);
    let mut count = 0;
    for l in &lines {
        if s.pairing(beta, l)? == 0 {
            count += 1;
        }
    }
    Ok(count)
}

/// Index `i` if `c` is the exceptional class `e_i` of a blowup.
pub fn exceptional_index(s: &Surface, c: &CurveClass) -> Option<usize> {
    s.blowup_points()?;
    let coords = c.coords();
    if coords.len() != s.rank() || coords[0] != 0 {
        return None;
    }
    let nonzero: Vec<usize> = (1..coords.len()).filter(|&i| coords[i] != 0).collect();
    match nonzero[..] {
        [i] if coords[i] == -1 => Some(i),
        _ => None,
    }
}

/// Contracts every line orthogonal to `beta`.
///
/// Only contractions of basis exceptional curves `e_i` are supported: the
/// corresponding coordinates are deleted from both the surface and the class.
pub fn blow_down_orthogonal(s: &Surface, beta: &CurveClass) -> Result<(Surface, CurveClass)> {
    let mut slots = Vec::new();
    for l in line_classes(s) {
        if s.pairing(beta, &l)? != 0 {
            continue;
        }
        match exceptional_index(s, &l) {
            Some(i) => slots.push(i),
            None => {
                return Err(Error::UnsupportedContraction(format!(
                    "line {} on {} is orthogonal to {} but is not an exceptional basis curve",
                    s.format_class(&l),
                    s,
                    s.format_class(beta)
                )))
            }
        }
    }
    if slots.is_empty() {
        return Ok((*s, beta.clone()));
    }
    let r = s.blowup_points().expect("only blowups carry exceptional curves");
    let target = Surface::blowup(r - slots.len())?;
    let coords = beta
        .coords()
        .iter()
        .enumerate()
        .filter(|(i, _)| !slots.contains(i))
        .map(|(_, &c)| c)
        .collect();
    Ok((target, CurveClass::new(coords)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sr(r: usize) -> Surface {
        Surface::blowup(r).unwrap()
    }

    fn cls(v: &[i64]) -> CurveClass {
        CurveClass::new(v.to_vec())
    }

    /// Independent oracle: scan every coordinate vector in a box.
    fn brute_force(s: &Surface, square: i64, weight: i64, bound: i64) -> Vec<CurveClass> {
        let rank = s.rank();
        let mut out = Vec::new();
        let mut v = vec![-bound; rank];
        loop {
            let c = CurveClass::new(v.clone());
            if s.self_intersection(&c).unwrap() == square && s.tangency_weight(&c).unwrap() == weight {
                out.push(c);
            }
            let mut i = rank;
            loop {
                if i == 0 {
                    out.sort();
                    return out;
                }
                i -= 1;
                if v[i] < bound {
                    v[i] += 1;
                    break;
                }
                v[i] = -bound;
            }
        }
    }

    #[test]
    fn lines_on_small_surfaces() {
        assert!(line_classes(&Surface::p2()).is_empty());
        assert!(line_classes(&Surface::p1xp1()).is_empty());
        let s3 = line_classes(&sr(3));
        assert_eq!(s3.len(), 6);
        for expected in [
            cls(&[0, -1, 0, 0]),
            cls(&[0, 0, -1, 0]),
            cls(&[0, 0, 0, -1]),
            cls(&[1, 1, 1, 0]),
            cls(&[1, 1, 0, 1]),
            cls(&[1, 0, 1, 1]),
        ] {
            assert!(s3.contains(&expected), "{expected}");
        }
        assert_eq!(line_classes(&sr(6)).len(), 27);
    }

    #[test]
    fn lines_agree_with_box_scan() {
        for r in 0..=4 {
            let s = sr(r);
            assert_eq!(line_classes(&s), brute_force(&s, -1, 1, 4), "S_{r}");
            assert_eq!(conic_classes(&s), brute_force(&s, 0, 2, 4), "S_{r}");
        }
        let q = Surface::p1xp1();
        assert_eq!(conic_classes(&q), brute_force(&q, 0, 2, 6));
        assert_eq!(line_classes(&q), brute_force(&q, -1, 1, 6));
    }

    #[test]
    fn census_of_lines() {
        let counts: Vec<usize> = (0..=8).map(|r| line_classes(&sr(r)).len()).collect();
        assert_eq!(counts, vec![0, 1, 3, 6, 10, 16, 27, 56, 240]);
    }

    #[test]
    fn line_shapes_match_known_list() {
        // Up to permuting the a_i, every line on S_8 is one of seven shapes.
        let shapes: BTreeSet<Vec<i64>> = line_classes(&sr(8))
            .iter()
            .map(|l| {
                let mut tail = l.coords()[1..].to_vec();
                tail.sort_unstable_by(|a, b| b.cmp(a));
                let mut v = vec![l.coords()[0]];
                v.extend(tail);
                v
            })
            .collect();
        let expected: BTreeSet<Vec<i64>> = [
            vec![0, 0, 0, 0, 0, 0, 0, 0, -1],
            vec![1, 1, 1, 0, 0, 0, 0, 0, 0],
            vec![2, 1, 1, 1, 1, 1, 0, 0, 0],
            vec![3, 2, 1, 1, 1, 1, 1, 1, 0],
            vec![4, 2, 2, 2, 1, 1, 1, 1, 1],
            vec![5, 2, 2, 2, 2, 2, 2, 1, 1],
            vec![6, 3, 2, 2, 2, 2, 2, 2, 2],
        ]
        .into_iter()
        .collect();
        assert_eq!(shapes, expected);
    }

    #[test]
    fn conic_census_is_stable_under_doubling() {
        let census = [0usize, 1, 2, 3, 5, 10, 27, 126, 2160];
        for (r, &want) in census.iter().enumerate() {
            let conics = conic_classes(&sr(r));
            assert_eq!(conics.len(), want, "S{r}");
            assert_eq!(conic_classes_within(&sr(r), 2 * CONIC_DEGREE_BOUND), conics);
        }
    }

    #[test]
    fn conics_examples() {
        assert_eq!(
            conic_classes(&Surface::p1xp1()),
            vec![cls(&[0, 1]), cls(&[1, 0])]
        );
        assert_eq!(conic_classes(&sr(2)), vec![cls(&[1, 0, 1]), cls(&[1, 1, 0])]);
        let s4 = conic_classes(&sr(4));
        assert_eq!(s4.len(), 5);
        assert!(s4.contains(&cls(&[2, 1, 1, 1, 1])));
        assert!(conic_classes(&Surface::p2()).is_empty());
        assert!(conic_classes(&sr(1)).contains(&cls(&[1, 1])));
    }

    #[test]
    fn eta_examples() {
        assert_eq!(eta(&Surface::p2(), &cls(&[3])).unwrap(), 0);
        assert_eq!(eta(&sr(1), &cls(&[3, 1])).unwrap(), 0);
        // 2h1 + 3h2 pulled back to the blowup of P1xP1 at one point, written on
        // S_2 via h1 = h - e1, h2 = h - e2 (the exceptional curve becomes h - e1 - e2).
        let beta = cls(&[5, 2, 3]);
        assert_eq!(sr(2).arithmetic_genus(&beta).unwrap(), 2);
        assert_eq!(sr(2).tangency_weight(&beta).unwrap(), 10);
        assert_eq!(eta(&sr(2), &beta).unwrap(), 1);
        assert_eq!(sr(2).pairing(&beta, &cls(&[1, 1, 1])).unwrap(), 0);
    }

    #[test]
    fn blow_down_examples() {
        let (t, b) = blow_down_orthogonal(&sr(1), &cls(&[2, 0])).unwrap();
        assert_eq!((t, b), (Surface::p2(), cls(&[2])));
        let (t, b) = blow_down_orthogonal(&sr(2), &cls(&[3, 1, 0])).unwrap();
        assert_eq!((t, b), (sr(1), cls(&[3, 1])));
        let (t, b) = blow_down_orthogonal(&Surface::p2(), &cls(&[3])).unwrap();
        assert_eq!((t, b), (Surface::p2(), cls(&[3])));
    }

    #[test]
    fn blow_down_rejects_non_basis_lines() {
        // h - e1 - e2 is orthogonal to (5;2,3) but is not some e_i.
        assert!(matches!(
            blow_down_orthogonal(&sr(2), &cls(&[5, 2, 3])),
            Err(Error::UnsupportedContraction(_))
        ));
    }

    #[test]
    fn blow_down_preserves_numerics() {
        for r in 1..=6 {
            let s = sr(r);
            for d in 1..=4i64 {
                for mask in 0u32..(1 << r) {
                    let mut coords = vec![d];
                    coords.extend((0..r).map(|i| if mask & (1 << i) != 0 { 1 } else { 0 }));
                    let beta = CurveClass::new(coords);
                    let Ok((t, b)) = blow_down_orthogonal(&s, &beta) else {
                        continue;
                    };
                    assert_eq!(s.tangency_weight(&beta).unwrap(), t.tangency_weight(&b).unwrap());
                    assert_eq!(s.arithmetic_genus(&beta).unwrap(), t.arithmetic_genus(&b).unwrap());
                    if t != s {
                        assert_eq!(eta(&t, &b).unwrap(), 0, "{beta} on {s}");
                    }
                }
            }
        }
    }

    #[test]
    fn permutations_are_distinct() {
        assert_eq!(distinct_permutations(&[2, 1, 1]).len(), 3);
        assert_eq!(distinct_permutations(&[1, 1, 1]).len(), 1);
        assert_eq!(distinct_permutations(&[3, 2, 1, 0]).len(), 24);
    }
}
