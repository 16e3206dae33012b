use std::f64::consts::{FRAC_PI_2, TAU};

use super::{
    attach_claims, certify_with_jitter, ClaimKind, ConstructionOutput, RETRY_BUDGET,
    SNAP_DENOMINATOR,
};
use crate::error::ConstructionError;
use crate::geom::snap_to_rational;
use crate::rng::Rng;

/// Distances and radii in units of the level's circumradius.
const VERTEX_CLUSTER_DIST: f64 = 4.0;
/// Between the circumcircle (1) and its mirror image across the side (2).
const EDGE_CLUSTER_DIST: f64 = 1.5;
const CLUSTER_RADIUS: f64 = 0.05;
const CORE_RADIUS: f64 = 0.02;
const LEVEL_SHRINK: f64 = 1e-3;
const MAX_LEVELS: usize = 3;
const SEED: u64 = 0x5EED_0007;

/// Number of points produced by `recursive_seven_region(g, levels)`.
pub fn seven_region_size(g: usize, levels: usize) -> usize {
    if levels <= 1 {
        7 * g
    } else {
        6 * g + 3 + seven_region_size(g, levels - 1)
    }
}

fn disk(rng: &mut Rng, c: (f64, f64), r: f64, k: usize, out: &mut Vec<(f64, f64)>) {
    for _ in 0..k {
        let (u, v) = loop {
            let u = rng.range_f64(-1.0, 1.0);
            let v = rng.range_f64(-1.0, 1.0);
            if u * u + v * v <= 1.0 {
                break (u, v);
            }
        };
        out.push((c.0 + r * u, c.1 + r * v));
    }
}

/// Appends one level and returns the index of its first vertex.
fn level(
    g: usize,
    scale: f64,
    left: usize,
    rng: &mut Rng,
    out: &mut Vec<(f64, f64)>,
    firsts: &mut Vec<usize>,
) {
    let angles = [FRAC_PI_2, FRAC_PI_2 + TAU / 3.0, FRAC_PI_2 + 2.0 * TAU / 3.0];
    firsts.push(out.len());
    for a in angles {
        out.push((scale * a.cos(), scale * a.sin()));
    }
    for a in angles {
        let (c, s) = (a.cos(), a.sin());
        let far = VERTEX_CLUSTER_DIST * scale;
        disk(rng, (far * c, far * s), CLUSTER_RADIUS * scale, g, out);
        let near = EDGE_CLUSTER_DIST * scale;
        disk(rng, (-near * c, -near * s), CLUSTER_RADIUS * scale, g, out);
    }
    if left == 1 {
        disk(rng, (0.0, 0.0), CORE_RADIUS * scale, g - 3, out);
    } else {
        level(g, scale * LEVEL_SHRINK, left - 1, rng, out, firsts);
    }
}

/// Nested seven-region configuration around a near-equilateral triangle.
///
/// Per level: the triangle `p, q, r` (circumradius 1 at the outer level),
/// a cluster of `g` points beyond each vertex, inside the vertex's wedge, and a
/// cluster of `g` points beyond each side. The central region holds the next
/// level, scaled by `1e-3`, or `g - 3` points at the innermost level.
///
/// Points of a level start with `p, q, r`. Designated pairs are the triangle
/// sides of every level and the pairs joining corresponding vertices of
/// consecutive levels.
pub fn recursive_seven_region(
    g: usize,
    levels: usize,
) -> Result<ConstructionOutput, ConstructionError> {
    if g < 3 {
        return Err(ConstructionError::InvalidParameter("group size must be at least 3".into()));
    }
    if levels == 0 || levels > MAX_LEVELS {
        return Err(ConstructionError::InvalidParameter(format!(
            "levels must be in 1..={MAX_LEVELS}"
        )));
    }
    let mut rng = Rng::new(SEED);
    let mut raw = Vec::new();
    let mut firsts = Vec::new();
    level(g, 1.0, levels, &mut rng, &mut raw, &mut firsts);
    let n = raw.len();
    debug_assert_eq!(n, seven_region_size(g, levels));

    let mut attempts = 0;
    let s = certify_with_jitter(
        snap_to_rational(&raw, SNAP_DENOMINATOR),
        &mut rng,
        &mut attempts,
        RETRY_BUDGET,
    )?;

    let mut designated = Vec::new();
    for (li, &f) in firsts.iter().enumerate() {
        designated.extend([(f, f + 1), (f, f + 2), (f + 1, f + 2)]);
        if let Some(&next) = firsts.get(li + 1) {
            designated.extend((0..3).map(|t| (f + t, next + t)));
        }
    }

    let central = n - 6 * g - 3;
    let expected = super::turning_values(&[3 * g, g, g + central, central, n - 3 * g - 2]);
    let mut kinds: Vec<(ClaimKind, bool)> = vec![(
        ClaimKind::CircumcircleCount {
            triangle: [0, 1, 2],
            inside: central,
        },
        true,
    )];
    for pair in [(0, 1), (1, 2), (0, 2)] {
        kinds.push((
            ClaimKind::TurningValues {
                pair,
                values: expected.clone(),
            },
            true,
        ));
    }
    kinds.push((
        ClaimKind::RepeatedValues {
            pair: (0, 1),
            lo: g,
            hi: 2 * g - 3,
            times: 4,
        },
        false,
    ));
    let claims = attach_claims(&s, &designated, kinds).map_err(|(k, detail)| {
        ConstructionError::ClaimFailed {
            attempts: attempts + 1,
            detail: format!("{k:?}: {detail}"),
        }
    })?;
    Ok(ConstructionOutput {
        points: s,
        designated_pairs: designated,
        claims,
    })
}
