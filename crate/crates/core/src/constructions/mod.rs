//! Random instances and the extremal constructions.
//!
//! Every construction is realized in floating point, snapped to rationals
//! with denominator [`SNAP_DENOMINATOR`], certified, and then checked
//! exactly. Claims that a generator guarantees are verified before it
//! returns; claims it only reports carry their evaluated outcome.

mod halving;
mod random;
mod seven;
mod two_colored;

use serde::Serialize;

pub use halving::halving_line_construction;
pub use random::{random_colored, random_convex, random_general_position};
pub use seven::{recursive_seven_region, seven_region_size};
pub use two_colored::{two_colored_convex, TWO_COLORED_MAX_N};

use crate::depth;
use crate::error::ConstructionError;
use crate::geom::{validate_general_position, ColoredPoint, Point2, PointSet, Violation};
use crate::rng::Rng;
use crate::Rational;

pub const SNAP_DENOMINATOR: u64 = 1_000_000_000_000;

/// Attempts allowed for perturbation and claim repair.
pub const RETRY_BUDGET: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClaimKind {
    /// Every red-blue pair has a segment of weight at most `bound`.
    BichromaticDepthAtMost { bound: usize },
    /// Every designated pair splits the others evenly and all its weights lie in `lo..=hi`.
    HalvingWeights { lo: usize, hi: usize },
    /// The weight sequence of `pair`, read in either direction, has exactly these turning values.
    TurningValues { pair: (usize, usize), values: Vec<usize> },
    /// The circumcircle of `triangle` strictly encloses exactly `inside` points.
    CircumcircleCount { triangle: [usize; 3], inside: usize },
    /// Each value in `lo..=hi` occurs at least `times` times on the bisector of `pair`.
    RepeatedValues {
        pair: (usize, usize),
        lo: usize,
        hi: usize,
        times: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    #[serde(flatten)]
    pub kind: ClaimKind,
    /// Generators fail unless required claims hold.
    pub required: bool,
    pub holds: bool,
    /// First counterexample, empty when the claim holds.
    pub detail: String,
}

impl Claim {
    pub fn describe(&self) -> String {
        let status = if self.holds { "holds" } else { "FAILS" };
        let body = match &self.kind {
            ClaimKind::BichromaticDepthAtMost { bound } => {
                format!("every red-blue pair has a circle enclosing at most {bound} points")
            }
            ClaimKind::HalvingWeights { lo, hi } => {
                format!("every designated pair is halving with weights in [{lo}, {hi}]")
            }
            ClaimKind::TurningValues { pair, values } => format!(
                "bisector of ({}, {}) turns at {:?}",
                pair.0, pair.1, values
            ),
            ClaimKind::CircumcircleCount { triangle, inside } => format!(
                "circumcircle of {:?} encloses exactly {inside} points",
                triangle
            ),
            ClaimKind::RepeatedValues { pair, lo, hi, times } => format!(
                "every weight in [{lo}, {hi}] occurs at least {times} times on the bisector of ({}, {})",
                pair.0, pair.1
            ),
        };
        if self.detail.is_empty() {
            format!("{body}: {status}")
        } else {
            format!("{body}: {status} ({})", self.detail)
        }
    }
}

#[derive(Clone, Debug)]
pub struct ConstructionOutput {
    pub points: PointSet,
    pub designated_pairs: Vec<(usize, usize)>,
    pub claims: Vec<Claim>,
}

/// Evaluates a claim on a certified set. Returns the first counterexample.
pub fn evaluate_claim(
    kind: &ClaimKind,
    s: &PointSet,
    designated: &[(usize, usize)],
) -> Result<(), String> {
    match kind {
        ClaimKind::BichromaticDepthAtMost { bound } => {
            let depths = depth::bichromatic_depths(s).map_err(|e| e.to_string())?;
            match depths.iter().find(|d| d.min_weight > *bound) {
                Some(d) => Err(format!(
                    "pair ({}, {}) has minimum weight {}",
                    d.pair.0, d.pair.1, d.min_weight
                )),
                None => Ok(()),
            }
        }
        ClaimKind::HalvingWeights { lo, hi } => {
            let n = s.len();
            for &(p, q) in designated {
                let left = (0..n)
                    .filter(|&x| x != p && x != q)
                    .filter(|&x| crate::orientation(s.point(p), s.point(q), s.point(x)) > 0)
                    .count();
                if 2 * left != n - 2 {
                    return Err(format!("pair ({p}, {q}) has {left} of {} points on its left", n - 2));
                }
                let w = depth::weights(s, p, q).map_err(|e| e.to_string())?;
                if let Some(v) = w.iter().find(|v| **v < *lo || **v > *hi) {
                    return Err(format!("pair ({p}, {q}) has a segment of weight {v}"));
                }
            }
            Ok(())
        }
        ClaimKind::TurningValues { pair, values } => {
            let w = depth::weights(s, pair.0, pair.1).map_err(|e| e.to_string())?;
            let got = turning_values(&w);
            let rev: Vec<usize> = got.iter().rev().copied().collect();
            if &got == values || &rev == values {
                Ok(())
            } else {
                Err(format!("turning values are {got:?}"))
            }
        }
        ClaimKind::CircumcircleCount { triangle, inside } => {
            let [a, b, c] = *triangle;
            let got = (0..s.len())
                .filter(|&x| x != a && x != b && x != c)
                .filter(|&x| {
                    crate::in_circle(s.point(a), s.point(b), s.point(c), s.point(x)) == Ok(1)
                })
                .count();
            if got == *inside {
                Ok(())
            } else {
                Err(format!("encloses {got}"))
            }
        }
        ClaimKind::RepeatedValues { pair, lo, hi, times } => {
            let w = depth::weights(s, pair.0, pair.1).map_err(|e| e.to_string())?;
            let short: Vec<String> = (*lo..=*hi)
                .filter_map(|v| {
                    let m = w.iter().filter(|&&x| x == v).count();
                    (m < *times).then(|| format!("{v} occurs {m} times"))
                })
                .collect();
            if short.is_empty() {
                Ok(())
            } else {
                Err(short.join(", "))
            }
        }
    }
}

/// Endpoints and local extrema of a sequence, consecutive repeats merged.
pub fn turning_values(w: &[usize]) -> Vec<usize> {
    let mut d: Vec<usize> = Vec::new();
    for &v in w {
        if d.last() != Some(&v) {
            d.push(v);
        }
    }
    if d.len() <= 2 {
        return d;
    }
    let mut out = vec![d[0]];
    for i in 1..d.len() - 1 {
        if (d[i] > d[i - 1]) != (d[i + 1] > d[i]) {
            out.push(d[i]);
        }
    }
    out.push(d[d.len() - 1]);
    out
}

/// Evaluates every claim, failing on the first required one that does not hold.
pub(crate) fn attach_claims(
    s: &PointSet,
    designated: &[(usize, usize)],
    kinds: Vec<(ClaimKind, bool)>,
) -> Result<Vec<Claim>, (ClaimKind, String)> {
    let mut out = Vec::new();
    for (kind, required) in kinds {
        let res = evaluate_claim(&kind, s, designated);
        if required {
            if let Err(e) = &res {
                return Err((kind, e.clone()));
            }
        }
        out.push(Claim {
            kind,
            required,
            holds: res.is_ok(),
            detail: res.err().unwrap_or_default(),
        });
    }
    Ok(out)
}

/// Moves every point named in a violation by up to `amp` lattice units.
pub(crate) fn jitter(s: &PointSet, v: &[Violation], amp: u64, rng: &mut Rng, den: u64) -> PointSet {
    let mut bad: Vec<usize> = v
        .iter()
        .flat_map(|x| match x {
            Violation::Coincident(a) => a.to_vec(),
            Violation::Collinear(a) => a.to_vec(),
            Violation::Cocircular(a) => a.to_vec(),
        })
        .collect();
    bad.sort_unstable();
    bad.dedup();
    let step = Rational::new(1.into(), den.into());
    let mut pts: Vec<ColoredPoint> = s.points().to_vec();
    for i in bad {
        let mut off = || {
            let k = rng.below_inclusive(2 * amp) as i64 - amp as i64;
            step.clone() * Rational::from_integer(k.into())
        };
        let (dx, dy) = (off(), off());
        let p = &pts[i];
        pts[i] = ColoredPoint::new(
            Point2::new(p.point.x.clone() + dx, p.point.y.clone() + dy),
            p.color(),
        );
    }
    PointSet::new(pts)
}

/// Certifies `s`, jittering offending points with geometrically shrinking
/// amplitude. Counts attempts against `budget`.
pub(crate) fn certify_with_jitter(
    mut s: PointSet,
    rng: &mut Rng,
    attempts: &mut usize,
    budget: usize,
) -> Result<PointSet, ConstructionError> {
    let mut amp: u64 = 1 << 8;
    loop {
        let v = validate_general_position(&mut s);
        if v.is_empty() {
            return Ok(s);
        }
        *attempts += 1;
        if *attempts >= budget {
            return Err(ConstructionError::Certification {
                attempts: *attempts,
                violations: v,
            });
        }
        s = jitter(&s, &v, amp.max(1), rng, SNAP_DENOMINATOR);
        amp /= 2;
    }
}
