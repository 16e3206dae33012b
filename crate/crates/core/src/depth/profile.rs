use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::DepthError;
use crate::geom::{circumcenter, orientation, Point2, PointSet};
use crate::lattice::{with_lattice, LatticeInt};
use crate::{Point, Rational};

/// Circumcenter event of a third point on the bisector of a pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Event {
    pub index: usize,
    /// Center `m + s * d` of the circle through the pair and `index`.
    pub s: Rational,
    /// `index` lies strictly left of the directed line `p -> q`, so circles
    /// centered at parameters above `s` enclose it.
    pub covers_positive: bool,
}

/// Bisector frame: midpoint `m` and direction `d = rot90(q - p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    pub midpoint: Point,
    pub direction: Point,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BisectorProfile {
    pub pair: (usize, usize),
    pub frame: Frame,
    /// Strictly increasing in `s`.
    pub events: Vec<Event>,
    /// The `n - 1` segment weights in increasing parameter order.
    pub weights: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DepthSummary {
    pub pair: (usize, usize),
    pub min_weight: usize,
    pub max_weight: usize,
}

pub(crate) struct RawEvent<I> {
    pub index: usize,
    pub num: I,
    /// Positive.
    pub den: I,
    pub pos: bool,
}

/// Events of pair `(p, q)` on lattice coordinates, sorted by parameter,
/// together with the weight of the segment at `s -> -inf`.
///
/// With `P, Q, X` the lattice images, the circumcenter of `p, q, x` sits at
/// `s = (|Q - P|^2 - |P + Q - 2X|^2) / (4 d.(P + Q - 2X))`. The scale factor
/// cancels, so this equals the parameter in rational coordinates.
pub(crate) fn raw_events<I: LatticeInt>(
    pts: &[Point2<I>],
    p: usize,
    q: usize,
) -> (usize, Vec<RawEvent<I>>) {
    let (a, b) = (&pts[p], &pts[q]);
    let dx = b.x.clone() - a.x.clone();
    let dy = b.y.clone() - a.y.clone();
    let chord2 = dx.clone() * dx.clone() + dy.clone() * dy.clone();
    let sx = a.x.clone() + b.x.clone();
    let sy = a.y.clone() + b.y.clone();
    let four = I::one() + I::one() + I::one() + I::one();
    let mut initial = 0;
    let mut ev = Vec::with_capacity(pts.len().saturating_sub(2));
    for (i, x) in pts.iter().enumerate() {
        if i == p || i == q {
            continue;
        }
        let ux = sx.clone() - x.x.clone() - x.x.clone();
        let uy = sy.clone() - x.y.clone() - x.y.clone();
        let mut num = chord2.clone() - (ux.clone() * ux.clone() + uy.clone() * uy.clone());
        let mut den = four.clone() * (dx.clone() * uy - dy.clone() * ux);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let pos = orientation(a, b, x) > 0;
        if !pos {
            initial += 1;
        }
        ev.push(RawEvent {
            index: i,
            num,
            den,
            pos,
        });
    }
    ev.sort_by(|e, f| {
        (e.num.clone() * f.den.clone())
            .cmp(&(f.num.clone() * e.den.clone()))
            .then(e.index.cmp(&f.index))
    });
    (initial, ev)
}

fn sweep<I>(initial: usize, ev: &[RawEvent<I>]) -> Vec<usize> {
    let mut w = Vec::with_capacity(ev.len() + 1);
    let mut cur = initial;
    w.push(cur);
    for e in ev {
        if e.pos {
            cur += 1;
        } else {
            cur -= 1;
        }
        w.push(cur);
    }
    w
}

pub(crate) fn weights_in<I: LatticeInt>(pts: &[Point2<I>], p: usize, q: usize) -> Vec<usize> {
    let (initial, ev) = raw_events(pts, p, q);
    sweep(initial, &ev)
}

pub(crate) fn check_pair(s: &PointSet, p: usize, q: usize) -> Result<(), DepthError> {
    if !s.is_certified() {
        return Err(DepthError::NotCertified);
    }
    for i in [p, q] {
        if i >= s.len() {
            return Err(DepthError::BadIndex {
                index: i,
                len: s.len(),
            });
        }
    }
    if p == q {
        return Err(DepthError::SamePoint(p));
    }
    Ok(())
}

pub(crate) fn frame(s: &PointSet, p: usize, q: usize) -> Frame {
    let (a, b) = (s.point(p), s.point(q));
    let half = BigRational::new(1.into(), 2.into());
    Frame {
        midpoint: Point2::new(
            (a.x.clone() + b.x.clone()) * half.clone(),
            (a.y.clone() + b.y.clone()) * half,
        ),
        direction: Point2::new(-(b.y.clone() - a.y.clone()), b.x.clone() - a.x.clone()),
    }
}

/// Events and segment weights along the bisector of `(p, q)`.
pub fn weight_sequence(s: &PointSet, p: usize, q: usize) -> Result<BisectorProfile, DepthError> {
    check_pair(s, p, q)?;
    let (weights, events) = with_lattice!(s, |pts| {
        let (initial, ev) = raw_events(pts, p, q);
        let w = sweep(initial, &ev);
        let events: Vec<Event> = ev
            .iter()
            .map(|e| Event {
                index: e.index,
                s: BigRational::new(
                    num_bigint::ToBigInt::to_bigint(&e.num).expect("integer"),
                    num_bigint::ToBigInt::to_bigint(&e.den).expect("integer"),
                ),
                covers_positive: e.pos,
            })
            .collect();
        (w, events)
    });
    Ok(BisectorProfile {
        pair: (p, q),
        frame: frame(s, p, q),
        events,
        weights,
    })
}

/// Segment weights of `(p, q)` only, skipping the rational event parameters.
pub fn weights(s: &PointSet, p: usize, q: usize) -> Result<Vec<usize>, DepthError> {
    check_pair(s, p, q)?;
    Ok(with_lattice!(s, |pts| weights_in(pts, p, q)))
}

/// Independent weight computation by sampling one center per segment.
///
/// Event parameters come from rational circumcenters projected on the frame;
/// each sample circle is tested against every point by comparing squared
/// distances.
pub fn oracle_weights(s: &PointSet, p: usize, q: usize) -> Result<Vec<usize>, DepthError> {
    check_pair(s, p, q)?;
    let Frame {
        midpoint: m,
        direction: d,
    } = frame(s, p, q);
    let dd = d.x.clone() * d.x.clone() + d.y.clone() * d.y.clone();
    let mut params: Vec<Rational> = (0..s.len())
        .filter(|&i| i != p && i != q)
        .map(|i| {
            let c = circumcenter(s.point(p), s.point(q), s.point(i))
                .expect("certified sets have no collinear triple");
            ((c.x - m.x.clone()) * d.x.clone() + (c.y - m.y.clone()) * d.y.clone()) / dd.clone()
        })
        .collect();
    params.sort();
    let samples: Vec<Rational> = if params.is_empty() {
        vec![BigRational::zero()]
    } else {
        let one = BigRational::one();
        let two = BigRational::from_integer(2.into());
        let mut v = vec![params[0].clone() - one.clone()];
        v.extend(
            params
                .windows(2)
                .map(|w| (w[0].clone() + w[1].clone()) / two.clone()),
        );
        v.push(params[params.len() - 1].clone() + one);
        v
    };
    let dist2 = |c: &Point, x: &Point| {
        let ex = c.x.clone() - x.x.clone();
        let ey = c.y.clone() - x.y.clone();
        ex.clone() * ex + ey.clone() * ey
    };
    Ok(samples
        .iter()
        .map(|t| {
            let c = Point2::new(
                m.x.clone() + t.clone() * d.x.clone(),
                m.y.clone() + t.clone() * d.y.clone(),
            );
            let r2 = dist2(&c, s.point(p));
            (0..s.len())
                .filter(|&i| i != p && i != q)
                .filter(|&i| dist2(&c, s.point(i)).cmp(&r2) == Ordering::Less)
                .count()
        })
        .collect())
}

pub fn pair_depth(s: &PointSet, p: usize, q: usize) -> Result<DepthSummary, DepthError> {
    let w = weights(s, p, q)?;
    Ok(summary((p, q), &w))
}

fn summary(pair: (usize, usize), w: &[usize]) -> DepthSummary {
    DepthSummary {
        pair,
        min_weight: *w.iter().min().expect("at least one segment"),
        max_weight: *w.iter().max().expect("at least one segment"),
    }
}

/// All unordered pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

/// Weight sequences of the given pairs, in the given order. Runs on the
/// current rayon pool.
pub fn pair_weights(
    s: &PointSet,
    pairs: &[(usize, usize)],
) -> Result<Vec<Vec<usize>>, DepthError> {
    for &(p, q) in pairs {
        check_pair(s, p, q)?;
    }
    Ok(with_lattice!(s, |pts| pairs
        .par_iter()
        .map(|&(p, q)| weights_in(pts, p, q))
        .collect()))
}

/// Depth summaries of every unordered pair, lexicographic order.
pub fn all_depths(s: &PointSet) -> Result<Vec<DepthSummary>, DepthError> {
    let pairs = all_pairs(s.len());
    let ws = pair_weights(s, &pairs)?;
    Ok(pairs.iter().zip(&ws).map(|(&p, w)| summary(p, w)).collect())
}

pub(crate) fn need(s: &PointSet, n: usize) -> Result<(), DepthError> {
    if !s.is_certified() {
        return Err(DepthError::NotCertified);
    }
    if s.len() < n {
        return Err(DepthError::TooFewPoints {
            need: n,
            got: s.len(),
        });
    }
    Ok(())
}

/// First pair (lexicographically) whose minimum weight is largest.
pub(crate) fn best_min(depths: &[DepthSummary]) -> ((usize, usize), usize) {
    let mut best = &depths[0];
    for d in depths {
        if d.min_weight > best.min_weight {
            best = d;
        }
    }
    (best.pair, best.min_weight)
}

/// Pair maximizing the minimum weight, ties to the lexicographically smallest pair.
pub fn maximin_pair(s: &PointSet) -> Result<((usize, usize), usize), DepthError> {
    need(s, 2)?;
    Ok(best_min(&all_depths(s)?))
}

/// Pair minimizing the maximum weight, ties to the lexicographically smallest pair.
pub fn minimax_pair(s: &PointSet) -> Result<((usize, usize), usize), DepthError> {
    need(s, 2)?;
    let depths = all_depths(s)?;
    let mut best = &depths[0];
    for d in &depths {
        if d.max_weight < best.max_weight {
            best = d;
        }
    }
    Ok((best.pair, best.max_weight))
}
