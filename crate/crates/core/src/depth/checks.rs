use serde::Serialize;

use super::profile::{minimax_pair, need};
use super::stats::{
    j_edge_counts, kset_counts, segment_weight_census, triple_counts, EdgeStats, KSetStats,
    TripleStats, WeightCensus,
};
use crate::error::DepthError;
use crate::geom::PointSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "==")]
    Eq,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
}

impl Relation {
    pub fn holds(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Relation::Eq => lhs == rhs,
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
        }
    }
}

/// One evaluated instance of a claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    /// Statement of the claim being instantiated.
    pub anchor: String,
    pub lhs: i64,
    pub rhs: i64,
    pub relation: Relation,
    pub pass: bool,
}

impl Check {
    pub fn new(name: String, anchor: &str, lhs: i64, relation: Relation, rhs: i64) -> Self {
        Self {
            name,
            anchor: anchor.to_string(),
            lhs,
            rhs,
            relation,
            pass: relation.holds(lhs, rhs),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub claim: String,
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new(claim: &str) -> Self {
        Self {
            claim: claim.to_string(),
            checks: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    fn push(&mut self, name: String, lhs: i64, relation: Relation, rhs: i64) {
        let c = Check::new(name, &self.claim, lhs, relation, rhs);
        self.checks.push(c);
    }
}

fn i(v: usize) -> i64 {
    i64::try_from(v).expect("count fits in i64")
}

pub const TRIPLE_SYMMETRY: &str = "c[k] + c[n-k-3] = 2(k+1)(n-k-2)";
pub const CENSUS_BOUND: &str = "hist[k] + hist[n-k-3] <= 6(k+1)(n-k-2)";
pub const CENSUS_EQUALITY: &str = "hist[k] + hist[n-k-3] = 6(k+1)(n-k-2)";
pub const CENSUS_RELATION: &str = "2 hist[w] = 3(c[w-1] + c[w]) + directed_j[w]";
pub const MINIMAX_BOUND: &str = "min over pairs of max weight <= floor((2n-3)/3)";
pub const TRIPLE_BOUNDS: &str = "c[k] >= (k+1)(n-k-2) and c[n-k-3] <= (k+1)(n-k-2) for k < (n-3)/2";
pub const UNBOUNDED_IDENTITY: &str = "sum_{i=1..k} f_inf[i-1] = (k-1)(2n-k) - c[k-2]";
pub const LEQ_KSET: &str = "sum_{i=1..k} ksets[i] <= k n for k < n/2";

pub fn triple_symmetry_from(t: &TripleStats, n: usize) -> CheckReport {
    let mut r = CheckReport::new(TRIPLE_SYMMETRY);
    if n < 3 {
        return r;
    }
    for k in 0..=n - 3 {
        let lhs = t.c[k] + t.c[n - k - 3];
        r.push(
            format!("k={k}"),
            i(lhs),
            Relation::Eq,
            i(2 * (k + 1) * (n - k - 2)),
        );
    }
    r
}

pub fn triple_symmetry_check(s: &PointSet) -> Result<CheckReport, DepthError> {
    Ok(triple_symmetry_from(&triple_counts(s)?, s.len()))
}

fn census_pairs(h: &WeightCensus, n: usize, claim: &str, rel: Relation) -> CheckReport {
    let mut r = CheckReport::new(claim);
    if n < 3 {
        return r;
    }
    for k in 0..=n - 3 {
        let lhs = h.hist[k] + h.hist[n - k - 3];
        r.push(format!("k={k}"), i(lhs), rel, i(6 * (k + 1) * (n - k - 2)));
    }
    r
}

/// Segment census against `6(k+1)(n-k-2)`, inequality form.
pub fn census_bound_from(h: &WeightCensus, n: usize) -> CheckReport {
    census_pairs(h, n, CENSUS_BOUND, Relation::Le)
}

/// Segment census against `6(k+1)(n-k-2)`, equality form.
pub fn census_equality_from(h: &WeightCensus, n: usize) -> CheckReport {
    census_pairs(h, n, CENSUS_EQUALITY, Relation::Eq)
}

/// Every segment has two ends. A bounded end is the event of some triple
/// containing the pair; an event of a triple enclosing `k` points separates
/// segments of weight `k` and `k + 1`. Each pair also has two unbounded ends,
/// of weights equal to its two directed left counts.
pub fn census_relation_from(
    h: &WeightCensus,
    t: &TripleStats,
    e: &EdgeStats,
) -> CheckReport {
    let mut r = CheckReport::new(CENSUS_RELATION);
    for w in 0..h.hist.len() {
        let wi = i(w);
        let rhs = 3 * (t.get(wi - 1) + t.get(wi)) + e.directed_j.get(w).copied().unwrap_or(0);
        r.push(format!("w={w}"), i(2 * h.hist[w]), Relation::Eq, i(rhs));
    }
    r
}

pub fn census_check(s: &PointSet) -> Result<CheckReport, DepthError> {
    Ok(census_bound_from(&segment_weight_census(s)?, s.len()))
}

pub fn census_relation_check(s: &PointSet) -> Result<CheckReport, DepthError> {
    need(s, 3)?;
    Ok(census_relation_from(
        &segment_weight_census(s)?,
        &triple_counts(s)?,
        &j_edge_counts(s)?,
    ))
}

pub fn minimax_bound_from(k: usize, n: usize) -> CheckReport {
    let mut r = CheckReport::new(MINIMAX_BOUND);
    r.push(format!("n={n}"), i(k), Relation::Le, i((2 * n - 3) / 3));
    r
}

pub fn minimax_bound_check(s: &PointSet) -> Result<CheckReport, DepthError> {
    let (_, k) = minimax_pair(s)?;
    Ok(minimax_bound_from(k, s.len()))
}

pub fn triple_bounds_from(t: &TripleStats, n: usize) -> CheckReport {
    let mut r = CheckReport::new(TRIPLE_BOUNDS);
    let mut k = 0;
    while n >= 3 && 2 * k + 3 < n {
        let bound = i((k + 1) * (n - k - 2));
        r.push(format!("c[{k}]"), i(t.c[k]), Relation::Ge, bound);
        r.push(format!("c[{}]", n - k - 3), i(t.c[n - k - 3]), Relation::Le, bound);
        k += 1;
    }
    r
}

pub fn triple_bounds_check(s: &PointSet) -> Result<CheckReport, DepthError> {
    need(s, 4)?;
    Ok(triple_bounds_from(&triple_counts(s)?, s.len()))
}

pub fn unbounded_identity_from(
    ks: &KSetStats,
    t: &TripleStats,
    n: usize,
    k: usize,
) -> Result<CheckReport, DepthError> {
    if k < 1 || k + 1 > n {
        return Err(DepthError::OutOfRange {
            what: "k",
            value: i(k),
            lo: 1,
            hi: i(n) - 1,
        });
    }
    let f = ks.f_inf();
    let lhs: usize = (1..=k).map(|j| f[j - 1]).sum();
    let rhs = i(k - 1) * (2 * i(n) - i(k)) - i(t.get(i(k) - 2));
    let mut r = CheckReport::new(UNBOUNDED_IDENTITY);
    r.push(format!("k={k}"), i(lhs), Relation::Eq, rhs);
    Ok(r)
}

pub fn unbounded_region_identity_check(s: &PointSet, k: usize) -> Result<CheckReport, DepthError> {
    need(s, 3)?;
    unbounded_identity_from(&kset_counts(s)?, &triple_counts(s)?, s.len(), k)
}

pub fn leq_kset_from(ks: &KSetStats, n: usize, k: usize) -> Result<CheckReport, DepthError> {
    if k < 1 || 2 * k >= n {
        return Err(DepthError::OutOfRange {
            what: "k",
            value: i(k),
            lo: 1,
            hi: (i(n) - 1) / 2,
        });
    }
    let lhs: usize = ks.ksets[1..=k].iter().sum();
    let mut r = CheckReport::new(LEQ_KSET);
    r.push(format!("k={k}"), i(lhs), Relation::Le, i(k * n));
    Ok(r)
}

pub fn leq_kset_bound_check(s: &PointSet, k: usize) -> Result<CheckReport, DepthError> {
    need(s, 2)?;
    leq_kset_from(&kset_counts(s)?, s.len(), k)
}
