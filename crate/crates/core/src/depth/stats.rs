use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::profile::{all_pairs, need, pair_weights};
use crate::error::DepthError;
use crate::geom::{in_circle_det, orientation, Point2, PointSet};
use crate::lattice::{with_lattice, LatticeInt};

/// Circumcircle enclosure counts: `c[k]` triples enclose exactly `k` points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleStats {
    pub c: Vec<usize>,
}

impl TripleStats {
    /// `c[k]`, zero outside `0..=n-3`.
    pub fn get(&self, k: i64) -> usize {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.c.get(k))
            .copied()
            .unwrap_or(0)
    }
}

/// Segment weight histogram over the bisectors of a set of pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightCensus {
    pub hist: Vec<usize>,
}

impl WeightCensus {
    pub fn get(&self, w: i64) -> usize {
        usize::try_from(w)
            .ok()
            .and_then(|w| self.hist.get(w))
            .copied()
            .unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeStats {
    /// Ordered pairs with exactly `j` points strictly left of `p -> q`.
    pub directed_j: Vec<usize>,
    /// Unordered pairs with `j = min(left, right)`.
    pub undirected_j: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KSetStats {
    /// `ksets[k]` for `k = 0..n`; index 0 is always 0.
    pub ksets: Vec<usize>,
}

impl KSetStats {
    /// Unbounded region counts with `f_inf[0] = 0` and `f_inf[k] = ksets[k]`.
    pub fn f_inf(&self) -> &[usize] {
        &self.ksets
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepeatStats {
    /// `b[k]`: bisectors whose sequence holds the value `k - 1` at least four times.
    pub b: BTreeMap<usize, usize>,
    /// Largest multiplicity of `k - 1` on a single bisector.
    pub max_collinear: BTreeMap<usize, usize>,
}

impl RepeatStats {
    pub fn nonzero_b(&self) -> usize {
        self.b.values().filter(|&&v| v > 0).count()
    }
}

/// Brute force over all triples.
pub fn triple_counts(s: &PointSet) -> Result<TripleStats, DepthError> {
    need(s, 3)?;
    let n = s.len();
    let per_first: Vec<Vec<usize>> = with_lattice!(s, |p| (0..n)
        .into_par_iter()
        .map(|i| triples_from(p, i))
        .collect());
    let mut c = vec![0; n - 2];
    for row in per_first {
        for (k, v) in row.into_iter().enumerate() {
            c[k] += v;
        }
    }
    Ok(TripleStats { c })
}

/// Enclosure histogram of triples whose smallest index is `i`.
fn triples_from<I: LatticeInt>(p: &[Point2<I>], i: usize) -> Vec<usize> {
    let n = p.len();
    let mut c = vec![0; n - 2];
    for j in i + 1..n {
        for k in j + 1..n {
            let o = orientation(&p[i], &p[j], &p[k]);
            let inside = (0..n)
                .filter(|&l| l != i && l != j && l != k)
                .filter(|&l| in_circle_det(&p[i], &p[j], &p[k], &p[l]) * o > 0)
                .count();
            c[inside] += 1;
        }
    }
    c
}

/// Enclosure histogram of triples, each weighted by how many of its three
/// pairs satisfy `pair_ok`.
pub(crate) fn weighted_triple_counts(
    s: &PointSet,
    pair_ok: impl Fn(usize, usize) -> bool + Sync,
) -> Vec<usize> {
    let n = s.len();
    let rows: Vec<Vec<usize>> = with_lattice!(s, |p| (0..n)
        .into_par_iter()
        .map(|i| {
            let mut c = vec![0; n.saturating_sub(2)];
            for j in i + 1..n {
                for k in j + 1..n {
                    let wgt = [(i, j), (i, k), (j, k)]
                        .iter()
                        .filter(|&&(a, b)| pair_ok(a, b))
                        .count();
                    if wgt == 0 {
                        continue;
                    }
                    let o = orientation(&p[i], &p[j], &p[k]);
                    let inside = (0..n)
                        .filter(|&l| l != i && l != j && l != k)
                        .filter(|&l| in_circle_det(&p[i], &p[j], &p[k], &p[l]) * o > 0)
                        .count();
                    c[inside] += wgt;
                }
            }
            c
        })
        .collect());
    let mut c = vec![0; n.saturating_sub(2)];
    for row in rows {
        for (k, v) in row.into_iter().enumerate() {
            c[k] += v;
        }
    }
    c
}

/// Histogram of segment weights over the bisectors of `pairs`.
pub fn census_of_pairs(
    s: &PointSet,
    pairs: &[(usize, usize)],
) -> Result<WeightCensus, DepthError> {
    need(s, 2)?;
    let mut hist = vec![0; s.len() - 1];
    for w in pair_weights(s, pairs)? {
        for v in w {
            hist[v] += 1;
        }
    }
    Ok(WeightCensus { hist })
}

/// Histogram of segment weights over all `C(n, 2)` bisectors.
pub fn segment_weight_census(s: &PointSet) -> Result<WeightCensus, DepthError> {
    census_of_pairs(s, &all_pairs(s.len()))
}

/// Directed left counts of the given ordered pairs.
pub(crate) fn directed_counts(s: &PointSet, ordered: &[(usize, usize)]) -> Vec<usize> {
    let n = s.len();
    let mut t = vec![0; n.saturating_sub(1)];
    with_lattice!(s, |p| {
        for &(a, b) in ordered {
            let left = (0..n)
                .filter(|&x| x != a && x != b && orientation(&p[a], &p[b], &p[x]) > 0)
                .count();
            t[left] += 1;
        }
    });
    t
}

pub fn j_edge_counts(s: &PointSet) -> Result<EdgeStats, DepthError> {
    need(s, 2)?;
    let n = s.len();
    let ordered: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    let directed_j = directed_counts(s, &ordered);
    let mut undirected_j = vec![0; (n - 2) / 2 + 1];
    with_lattice!(s, |p| {
        for (a, b) in all_pairs(n) {
            let left = (0..n)
                .filter(|&x| x != a && x != b && orientation(&p[a], &p[b], &p[x]) > 0)
                .count();
            undirected_j[left.min(n - 2 - left)] += 1;
        }
    });
    Ok(EdgeStats {
        directed_j,
        undirected_j,
    })
}

/// k-set counts from directed j-edges: `ksets[k + 1] = directed_j[k]`.
pub fn kset_counts(s: &PointSet) -> Result<KSetStats, DepthError> {
    let e = j_edge_counts(s)?;
    let mut ksets = vec![0];
    ksets.extend(e.directed_j.iter().copied());
    Ok(KSetStats { ksets })
}

pub fn repeat_stats_of_pairs(
    s: &PointSet,
    pairs: &[(usize, usize)],
) -> Result<RepeatStats, DepthError> {
    need(s, 2)?;
    let n = s.len();
    let mut b: BTreeMap<usize, usize> = (1..n).map(|k| (k, 0)).collect();
    let mut max_collinear: BTreeMap<usize, usize> = (1..n).map(|k| (k, 0)).collect();
    for w in pair_weights(s, pairs)? {
        let mut mult = vec![0usize; n - 1];
        for v in w {
            mult[v] += 1;
        }
        for (v, &m) in mult.iter().enumerate() {
            let k = v + 1;
            if m >= 4 {
                *b.get_mut(&k).expect("k in range") += 1;
            }
            let e = max_collinear.get_mut(&k).expect("k in range");
            *e = (*e).max(m);
        }
    }
    Ok(RepeatStats { b, max_collinear })
}

/// Repeated-weight statistics over all `C(n, 2)` bisectors.
pub fn repeated_weight_stats(s: &PointSet) -> Result<RepeatStats, DepthError> {
    repeat_stats_of_pairs(s, &all_pairs(s.len()))
}
