//! Brute-force oracles.
//!
//! Everything here works on plain `BigRational` coordinates with its own
//! formulas: circle centers from Cramer's rule, enclosure by squared
//! distance, separability by segment and triangle tests. None of it calls the
//! predicates or the sweep of `circdepth`.

use std::collections::BTreeSet;

use circdepth::{Color, PointSet};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Q = BigRational;
pub type Pt = (Q, Q);

pub fn coords(s: &PointSet) -> Vec<Pt> {
    s.points()
        .iter()
        .map(|p| (p.point.x.clone(), p.point.y.clone()))
        .collect()
}

fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

fn cross(a: &Pt, b: &Pt, c: &Pt) -> Q {
    (b.0.clone() - a.0.clone()) * (c.1.clone() - a.1.clone())
        - (b.1.clone() - a.1.clone()) * (c.0.clone() - a.0.clone())
}

fn dist2(a: &Pt, b: &Pt) -> Q {
    let dx = a.0.clone() - b.0.clone();
    let dy = a.1.clone() - b.1.clone();
    dx.clone() * dx + dy.clone() * dy
}

/// Center of the circle through three points, `None` when collinear.
///
/// Solves `2(b - a).c = |b|^2 - |a|^2`, `2(c - a).c = |c|^2 - |a|^2`.
pub fn center(a: &Pt, b: &Pt, c: &Pt) -> Option<Pt> {
    let two = q(2);
    let (a11, a12) = (two.clone() * (b.0.clone() - a.0.clone()), two.clone() * (b.1.clone() - a.1.clone()));
    let (a21, a22) = (two.clone() * (c.0.clone() - a.0.clone()), two * (c.1.clone() - a.1.clone()));
    let n2 = |p: &Pt| p.0.clone() * p.0.clone() + p.1.clone() * p.1.clone();
    let r1 = n2(b) - n2(a);
    let r2 = n2(c) - n2(a);
    let det = a11.clone() * a22.clone() - a12.clone() * a21.clone();
    if det.is_zero() {
        return None;
    }
    let x = (r1.clone() * a22 - a12 * r2.clone()) / det.clone();
    let y = (a11 * r2 - r1 * a21) / det;
    Some((x, y))
}

/// Points strictly inside the circle centered at `c` through `on`.
fn enclosed(pts: &[Pt], c: &Pt, on: &Pt, skip: &[usize]) -> usize {
    let r2 = dist2(c, on);
    (0..pts.len())
        .filter(|i| !skip.contains(i))
        .filter(|&i| dist2(c, &pts[i]) < r2)
        .count()
}

/// Segment weights along the bisector of `(a, b)` in the direction
/// `rot90(b - a)`, by testing one sample center per segment.
pub fn weights(pts: &[Pt], a: usize, b: usize) -> Vec<usize> {
    let (p, r) = (&pts[a], &pts[b]);
    let half = Q::new(1.into(), 2.into());
    let m = ((p.0.clone() + r.0.clone()) * half.clone(), (p.1.clone() + r.1.clone()) * half.clone());
    let d = (-(r.1.clone() - p.1.clone()), r.0.clone() - p.0.clone());
    let dd = d.0.clone() * d.0.clone() + d.1.clone() * d.1.clone();
    let mut ts: Vec<Q> = (0..pts.len())
        .filter(|&i| i != a && i != b)
        .map(|i| {
            let c = center(p, r, &pts[i]).expect("no collinear triples");
            ((c.0 - m.0.clone()) * d.0.clone() + (c.1 - m.1.clone()) * d.1.clone()) / dd.clone()
        })
        .collect();
    ts.sort();
    let mut samples = Vec::new();
    match (ts.first(), ts.last()) {
        (Some(lo), Some(hi)) => {
            samples.push(lo.clone() - q(1));
            for w in ts.windows(2) {
                samples.push((w[0].clone() + w[1].clone()) * half.clone());
            }
            samples.push(hi.clone() + q(1));
        }
        _ => samples.push(Q::zero()),
    }
    samples
        .iter()
        .map(|t| {
            let c = (m.0.clone() + t.clone() * d.0.clone(), m.1.clone() + t.clone() * d.1.clone());
            enclosed(pts, &c, p, &[a, b])
        })
        .collect()
}

/// `c[k]`: triples whose circumcircle strictly encloses `k` points.
pub fn triple_counts(pts: &[Pt]) -> Vec<usize> {
    let n = pts.len();
    let mut c = vec![0; n.saturating_sub(2)];
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let z = center(&pts[i], &pts[j], &pts[k]).expect("no collinear triples");
                c[enclosed(pts, &z, &pts[i], &[i, j, k])] += 1;
            }
        }
    }
    c
}

/// Ordered pairs by the number of points strictly left of `a -> b`.
pub fn directed_left_counts(pts: &[Pt]) -> Vec<usize> {
    let n = pts.len();
    let mut t = vec![0; n.saturating_sub(1)];
    for a in 0..n {
        for b in 0..n {
            if a != b {
                let left = (0..n)
                    .filter(|&x| x != a && x != b && cross(&pts[a], &pts[b], &pts[x]).is_positive())
                    .count();
                t[left] += 1;
            }
        }
    }
    t
}

/// Histogram of segment weights over the bisectors of `pairs`.
pub fn census(pts: &[Pt], pairs: &[(usize, usize)]) -> Vec<usize> {
    let mut h = vec![0; pts.len().saturating_sub(1)];
    for &(a, b) in pairs {
        for w in weights(pts, a, b) {
            h[w] += 1;
        }
    }
    h
}

pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

pub fn bichromatic_pairs(s: &PointSet) -> Vec<(usize, usize)> {
    all_pairs(s.len())
        .into_iter()
        .filter(|&(i, j)| {
            let (a, b) = (s.color(i), s.color(j));
            a != Color::Uncolored && b != Color::Uncolored && a != b
        })
        .collect()
}

/// Largest over `pairs` of the smallest segment weight, first pair on ties.
pub fn maximin(pts: &[Pt], pairs: &[(usize, usize)]) -> Option<((usize, usize), usize)> {
    let mut best: Option<((usize, usize), usize)> = None;
    for &(a, b) in pairs {
        let k = *weights(pts, a, b).iter().min()?;
        if best.is_none_or(|(_, v)| k > v) {
            best = Some(((a, b), k));
        }
    }
    best
}

fn in_triangle(t: [&Pt; 3], x: &Pt) -> bool {
    let s = [cross(t[0], t[1], x), cross(t[1], t[2], x), cross(t[2], t[0], x)];
    s.iter().all(|v| v.is_positive()) || s.iter().all(|v| v.is_negative())
}

fn segments_cross(a: &Pt, b: &Pt, c: &Pt, d: &Pt) -> bool {
    let s1 = cross(a, b, c).signum() * cross(a, b, d).signum();
    let s2 = cross(c, d, a).signum() * cross(c, d, b).signum();
    s1.is_negative() && s2.is_negative()
}

/// Disjoint convex hulls, for point sets without collinear triples.
pub fn separable(pts: &[Pt], inside: &[usize], outside: &[usize]) -> bool {
    for (u, v) in [(inside, outside), (outside, inside)] {
        for x in u {
            for i in 0..v.len() {
                for j in i + 1..v.len() {
                    for k in j + 1..v.len() {
                        if in_triangle([&pts[v[i]], &pts[v[j]], &pts[v[k]]], &pts[*x]) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    for i in 0..inside.len() {
        for j in i + 1..inside.len() {
            for k in 0..outside.len() {
                for l in k + 1..outside.len() {
                    let (a, b) = (&pts[inside[i]], &pts[inside[j]]);
                    if segments_cross(a, b, &pts[outside[k]], &pts[outside[l]]) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `ksets[k]`: subsets of size `k` cut off by a line, by enumeration.
pub fn kset_counts(pts: &[Pt]) -> Vec<usize> {
    let n = pts.len();
    assert!(n <= 16, "subset enumeration");
    let mut ks = vec![0; n];
    for mask in 1u32..(1 << n) - 1 {
        let inside: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let outside: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 0).collect();
        if inside.len() < n && separable(pts, &inside, &outside) {
            ks[inside.len()] += 1;
        }
    }
    ks
}

/// Coincident pairs, collinear triples (coincident points included) and
/// cocircular quadruples without a collinear triple, by exhaustive enumeration.
pub fn degeneracies(pts: &[Pt]) -> BTreeSet<Vec<usize>> {
    let n = pts.len();
    let mut out = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            if pts[i] == pts[j] {
                out.insert(vec![i, j]);
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if cross(&pts[i], &pts[j], &pts[k]).is_zero() {
                    out.insert(vec![i, j, k]);
                }
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let Some(c) = center(&pts[i], &pts[j], &pts[k]) else {
                    continue;
                };
                let r2 = dist2(&c, &pts[i]);
                for l in k + 1..n {
                    let coll = [[i, j, l], [i, k, l], [j, k, l]]
                        .iter()
                        .any(|t| cross(&pts[t[0]], &pts[t[1]], &pts[t[2]]).is_zero());
                    if !coll && dist2(&c, &pts[l]) == r2 {
                        out.insert(vec![i, j, k, l]);
                    }
                }
            }
        }
    }
    out
}
