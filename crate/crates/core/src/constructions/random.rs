use num_bigint::BigInt;

use super::RETRY_BUDGET;
use crate::error::ConstructionError;
use crate::geom::{
    in_circle_det, is_convex_position, orientation, validate_general_position, Color,
    ColoredPoint, Point2, PointSet,
};
use crate::lattice::LatticeInt;
use crate::rng::Rng;
use crate::Point;

/// Draws allowed per requested point before giving up.
const DRAWS_PER_POINT: usize = 200;

/// True if `c` keeps `pts + [c]` in general position, given `pts` already is.
fn fits<I: LatticeInt>(pts: &[Point2<I>], c: &Point2<I>) -> bool {
    let n = pts.len();
    if pts.contains(c) {
        return false;
    }
    for i in 0..n {
        for j in i + 1..n {
            if orientation(&pts[i], &pts[j], c) == 0 {
                return false;
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if in_circle_det(&pts[i], &pts[j], &pts[k], c) == 0 {
                    return false;
                }
            }
        }
    }
    true
}

fn sample<I: LatticeInt>(
    n: usize,
    rng: &mut Rng,
    range: u64,
    conv: impl Fn(u64) -> I,
) -> Result<Vec<Point2<I>>, ConstructionError> {
    let budget = DRAWS_PER_POINT * n + 1000;
    let mut pts: Vec<Point2<I>> = Vec::with_capacity(n);
    let mut draws = 0;
    while pts.len() < n {
        draws += 1;
        if draws > budget {
            return Err(ConstructionError::BudgetExhausted { attempts: budget });
        }
        let c = Point2::new(
            conv(rng.below_inclusive(range)),
            conv(rng.below_inclusive(range)),
        );
        if fits(&pts, &c) {
            pts.push(c);
        }
    }
    Ok(pts)
}

/// `n` integer points in `[0, range]^2`, resampling any draw that breaks general position.
pub fn random_general_position(
    n: usize,
    seed: u64,
    range: u64,
) -> Result<PointSet, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::InvalidParameter("n must be at least 1".into()));
    }
    let need = 4 * (n as u128) * (n as u128);
    if (range as u128) < need {
        return Err(ConstructionError::InvalidParameter(format!(
            "range {range} below 4n^2 = {need}"
        )));
    }
    let mut rng = Rng::new(seed);
    let coords: Vec<(BigInt, BigInt)> = if range < (1 << 27) {
        sample(n, &mut rng, range, |v| v as i128)?
            .into_iter()
            .map(|p| (p.x.into(), p.y.into()))
            .collect()
    } else {
        sample(n, &mut rng, range, BigInt::from)?
            .into_iter()
            .map(|p| (p.x, p.y))
            .collect()
    };
    let pts: Vec<Point> = coords
        .into_iter()
        .map(|(x, y)| Point2::new(x.into(), y.into()))
        .collect();
    let mut s = PointSet::from_points(pts);
    let v = validate_general_position(&mut s);
    debug_assert!(v.is_empty());
    Ok(s)
}

/// Random general-position set with `red` red points followed by `blue` blue points.
pub fn random_colored(
    red: usize,
    blue: usize,
    seed: u64,
    range: u64,
) -> Result<PointSet, ConstructionError> {
    let s = random_general_position(red + blue, seed, range)?;
    let pts = s
        .points()
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let c = if i < red { Color::Red } else { Color::Blue };
            ColoredPoint::new(p.point.clone(), c)
        })
        .collect();
    PointSet::new(pts)
        .certified()
        .map_err(|v| ConstructionError::Certification {
            attempts: 1,
            violations: v,
        })
}

/// `n` points in convex position near a circle of radius `10^6`, integer coordinates.
///
/// Angles are equally spaced with a random shift inside each slot; radii get a
/// small random relative perturbation.
pub fn random_convex(n: usize, seed: u64) -> Result<PointSet, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::InvalidParameter("n must be at least 3".into()));
    }
    let mut rng = Rng::new(seed);
    let radius = 1.0e6;
    let slot = std::f64::consts::TAU / n as f64;
    for _ in 0..RETRY_BUDGET {
        let pts: Vec<Point> = (0..n)
            .map(|i| {
                let a = slot * (i as f64 + 0.8 * rng.unit_f64());
                let r = radius * (1.0 + rng.range_f64(-1e-5, 1e-5));
                Point2::from_ints((r * a.cos()).round() as i64, (r * a.sin()).round() as i64)
            })
            .collect();
        let mut s = PointSet::from_points(pts);
        if validate_general_position(&mut s).is_empty() && is_convex_position(&s) {
            return Ok(s);
        }
    }
    Err(ConstructionError::BudgetExhausted {
        attempts: RETRY_BUDGET,
    })
}
