use super::checks::{CheckReport, Relation};
use super::profile::{best_min, need, pair_weights, DepthSummary};
use super::stats::{directed_counts, weighted_triple_counts, WeightCensus};
use crate::error::DepthError;
use crate::geom::{Color, PointSet};

pub const BICHROMATIC_BOUND: &str = "hist_rb[k] + hist_rb[N-k-3] <= 4(k+1)(N-k-2)";
pub const BICHROMATIC_RELATION: &str =
    "2 hist_rb[w] = c_rb[w-1] + c_rb[w] + directed_rb[w], c_rb counting red-blue pairs per triple";

fn is_bichromatic(s: &PointSet, a: usize, b: usize) -> bool {
    matches!(
        (s.color(a), s.color(b)),
        (Color::Red, Color::Blue) | (Color::Blue, Color::Red)
    )
}

/// Red-blue pairs `(i, j)`, `i < j`, lexicographic.
pub fn bichromatic_pairs(s: &PointSet) -> Vec<(usize, usize)> {
    let n = s.len();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| is_bichromatic(s, i, j))
        .collect()
}

fn need_colors(s: &PointSet) -> Result<(), DepthError> {
    need(s, 2)?;
    if s.count_color(Color::Red) == 0 {
        return Err(DepthError::MissingColor("red"));
    }
    if s.count_color(Color::Blue) == 0 {
        return Err(DepthError::MissingColor("blue"));
    }
    Ok(())
}

pub fn bichromatic_depths(s: &PointSet) -> Result<Vec<DepthSummary>, DepthError> {
    need_colors(s)?;
    let pairs = bichromatic_pairs(s);
    let ws = pair_weights(s, &pairs)?;
    Ok(pairs
        .iter()
        .zip(ws)
        .map(|(&pair, w)| DepthSummary {
            pair,
            min_weight: *w.iter().min().expect("nonempty"),
            max_weight: *w.iter().max().expect("nonempty"),
        })
        .collect())
}

/// Maximin over red-blue pairs, ties to the lexicographically smallest pair.
pub fn bichromatic_maximin(s: &PointSet) -> Result<((usize, usize), usize), DepthError> {
    Ok(best_min(&bichromatic_depths(s)?))
}

pub fn bichromatic_census(s: &PointSet) -> Result<WeightCensus, DepthError> {
    need_colors(s)?;
    super::stats::census_of_pairs(s, &bichromatic_pairs(s))
}

pub fn bichromatic_census_from(h: &WeightCensus, n: usize) -> CheckReport {
    let mut r = CheckReport::new(BICHROMATIC_BOUND);
    if n < 3 {
        return r;
    }
    for k in 0..=n - 3 {
        let lhs = h.hist[k] + h.hist[n - k - 3];
        r.checks.push(super::checks::Check::new(
            format!("k={k}"),
            BICHROMATIC_BOUND,
            lhs as i64,
            Relation::Le,
            (4 * (k + 1) * (n - k - 2)) as i64,
        ));
    }
    r
}

/// Census bound over red-blue bisectors, `N` the total point count.
pub fn bichromatic_census_check(s: &PointSet) -> Result<CheckReport, DepthError> {
    Ok(bichromatic_census_from(&bichromatic_census(s)?, s.len()))
}

/// Exact segment-end count restricted to red-blue bisectors.
pub fn bichromatic_census_relation_check(s: &PointSet) -> Result<CheckReport, DepthError> {
    need_colors(s)?;
    let h = bichromatic_census(s)?;
    let cb = weighted_triple_counts(s, |a, b| is_bichromatic(s, a, b));
    let n = s.len();
    let ordered: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| a != b && is_bichromatic(s, a, b))
        .collect();
    let e = directed_counts(s, &ordered);
    let get = |v: &[usize], k: i64| usize::try_from(k).ok().and_then(|k| v.get(k)).copied().unwrap_or(0);
    let mut r = CheckReport::new(BICHROMATIC_RELATION);
    for w in 0..h.hist.len() {
        let wi = w as i64;
        let rhs = get(&cb, wi - 1) + get(&cb, wi) + get(&e, wi);
        r.checks.push(super::checks::Check::new(
            format!("w={w}"),
            BICHROMATIC_RELATION,
            2 * h.hist[w] as i64,
            Relation::Eq,
            rhs as i64,
        ));
    }
    Ok(r)
}
