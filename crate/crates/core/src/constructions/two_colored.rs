use std::f64::consts::{FRAC_PI_4, PI};

use super::{attach_claims, ClaimKind, ConstructionOutput, RETRY_BUDGET, SNAP_DENOMINATOR};
use crate::error::ConstructionError;
use crate::geom::{is_convex_position, snap_to_rational, validate_general_position, Color, ColoredPoint, PointSet};
use crate::rng::Rng;

/// Largest supported `n`; the layout search cost grows like `n^3` per step.
pub const TWO_COLORED_MAX_N: usize = 14;

const SEED: u64 = 0x2C01_0AED;
const ARC_WIDTH: f64 = 0.9;
const STEPS: usize = 150_000;
const ANGLE_MOVE: f64 = 0.05;
const RADIUS_MOVE: f64 = 1e-3;
const SYMMETRY_BREAK: f64 = 1e-7;

type P = (f64, f64);

/// Smallest weight on the bisector of `(a, b)`, in floating point.
fn min_weight(pts: &[P], a: usize, b: usize) -> usize {
    let (p, q) = (pts[a], pts[b]);
    let (dx, dy) = (q.0 - p.0, q.1 - p.1);
    let chord2 = dx * dx + dy * dy;
    let (sx, sy) = (p.0 + q.0, p.1 + q.1);
    let mut ev = Vec::with_capacity(pts.len());
    let mut cur = 0i64;
    for (i, x) in pts.iter().enumerate() {
        if i == a || i == b {
            continue;
        }
        let (ux, uy) = (sx - 2.0 * x.0, sy - 2.0 * x.1);
        let mut num = chord2 - (ux * ux + uy * uy);
        let mut den = 4.0 * (dx * uy - dy * ux);
        if den < 0.0 {
            num = -num;
            den = -den;
        }
        let pos = dx * (x.1 - p.1) - dy * (x.0 - p.0) > 0.0;
        if !pos {
            cur += 1;
        }
        ev.push((num / den, pos));
    }
    ev.sort_by(|e, f| e.0.total_cmp(&f.0));
    let mut best = cur;
    for (_, pos) in ev {
        cur += if pos { 1 } else { -1 };
        best = best.min(cur);
    }
    best as usize
}

/// Free parameters cover the two red arcs; each blue arc is the mirror image
/// `x -> -x` of the red arc beside it.
struct Layout {
    hi: usize,
    theta: Vec<f64>,
    radius: Vec<f64>,
}

impl Layout {
    fn new(n: usize, rng: &mut Rng) -> Self {
        let (hi, lo) = (n.div_ceil(2), n / 2);
        let mut theta = Vec::with_capacity(n);
        for (center, k) in [(FRAC_PI_4, hi), (FRAC_PI_4 + PI, lo)] {
            for i in 0..k {
                let u = if k == 1 { 0.0 } else { i as f64 / (k - 1) as f64 - 0.5 };
                theta.push(center + ARC_WIDTH * u);
            }
        }
        let radius = (0..n).map(|_| 1.0 + rng.range_f64(-1e-3, 1e-3)).collect();
        Self { hi, theta, radius }
    }

    /// Points in counterclockwise order with their colors.
    fn points(&self) -> (Vec<P>, Vec<Color>) {
        let at = |t: f64, r: f64| (r * t.cos(), r * t.sin());
        let n = self.theta.len();
        let mut pts = Vec::with_capacity(2 * n);
        let mut colors = Vec::with_capacity(2 * n);
        for (range, turn) in [(0..self.hi, PI), (self.hi..n, 3.0 * PI)] {
            for i in range.clone() {
                pts.push(at(self.theta[i], self.radius[i]));
                colors.push(Color::Red);
            }
            for i in range.rev() {
                pts.push(at(turn - self.theta[i], self.radius[i]));
                colors.push(Color::Blue);
            }
        }
        (pts, colors)
    }

    fn cost(&self, bound: usize) -> (usize, usize) {
        let (pts, colors) = self.points();
        cost(&pts, &colors, bound)
    }
}

/// Non-convex corners and total excess of bichromatic depths over `bound`.
fn cost(pts: &[P], colors: &[Color], bound: usize) -> (usize, usize) {
    let m = pts.len();
    let concave = (0..m)
        .filter(|&i| {
            let (a, b, c) = (pts[i], pts[(i + 1) % m], pts[(i + 2) % m]);
            (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0) <= 1e-12
        })
        .count();
    let mut excess = 0;
    for i in 0..m {
        for j in i + 1..m {
            if colors[i] != colors[j] {
                excess += min_weight(pts, i, j).saturating_sub(bound);
            }
        }
    }
    (concave, excess)
}

fn score(c: (usize, usize)) -> f64 {
    (c.0 * 1000 + c.1) as f64
}

/// Annealing over the arc angles and radii. Returns a float layout meeting
/// the bound, or `None` when the run stalls.
fn search(n: usize, rng: &mut Rng) -> Option<Layout> {
    let bound = n / 2;
    let mut lay = Layout::new(n, rng);
    let mut cur = score(lay.cost(bound));
    let mut temp = 2.0;
    for step in 0..STEPS {
        if cur == 0.0 {
            return Some(lay);
        }
        let i = (rng.next_u64() % n as u64) as usize;
        let old = (lay.theta[i], lay.radius[i]);
        let scale = 1.0 - step as f64 / STEPS as f64 + 2e-3;
        if rng.unit_f64() < 0.5 {
            lay.theta[i] += rng.range_f64(-ANGLE_MOVE, ANGLE_MOVE) * scale;
        } else {
            lay.radius[i] += rng.range_f64(-RADIUS_MOVE, RADIUS_MOVE) * scale;
        }
        let next = score(lay.cost(bound));
        let d = next - cur;
        if d <= 0.0 || rng.unit_f64() < (-d / temp).exp() {
            cur = next;
        } else {
            (lay.theta[i], lay.radius[i]) = old;
        }
        temp *= 0.9995;
    }
    (cur == 0.0).then_some(lay)
}

/// `n` red and `n` blue points in convex position such that every red-blue
/// pair lies on a circle enclosing at most `floor(n/2)` points.
///
/// Four arcs centered at 45, 135, 225 and 315 degrees carry `ceil(n/2)`,
/// `ceil(n/2)`, `floor(n/2)` and `floor(n/2)` points colored R, B, R, B.
/// Starting from evenly spread arcs on the unit circle, a seeded annealing
/// moves angles and radii until the float depths meet the bound. The search
/// keeps the set symmetric under `x -> -x` with colors swapped; radii are
/// then scaled by `1 +- 1e-7` to break the resulting cocircularities. The
/// snapped set is certified and the bound checked exactly. Failed runs
/// restart with fresh randomness.
pub fn two_colored_convex(n: usize) -> Result<ConstructionOutput, ConstructionError> {
    if !(2..=TWO_COLORED_MAX_N).contains(&n) {
        return Err(ConstructionError::InvalidParameter(format!(
            "n must lie in 2..={TWO_COLORED_MAX_N}"
        )));
    }
    let claim = ClaimKind::BichromaticDepthAtMost { bound: n / 2 };
    let mut rng = Rng::new(SEED ^ n as u64);
    let mut last = String::from("no layout met the bound");
    for _ in 0..RETRY_BUDGET {
        let Some(lay) = search(n, &mut rng) else {
            continue;
        };
        let (sym, colors) = lay.points();
        // mirror pairs form isosceles trapezoids, which are cocircular
        let raw: Vec<P> = sym
            .iter()
            .map(|&(x, y)| {
                let f = 1.0 + rng.range_f64(-SYMMETRY_BREAK, SYMMETRY_BREAK);
                (x * f, y * f)
            })
            .collect();
        if cost(&raw, &colors, n / 2) != (0, 0) {
            last = "perturbed layout lost the bound".into();
            continue;
        }
        let snapped = snap_to_rational(&raw, SNAP_DENOMINATOR);
        let mut s = PointSet::new(
            snapped
                .points()
                .iter()
                .zip(colors)
                .map(|(p, c)| ColoredPoint::new(p.point.clone(), c))
                .collect(),
        );
        let v = validate_general_position(&mut s);
        if !v.is_empty() {
            last = format!("violations {v:?}");
            continue;
        }
        if !is_convex_position(&s) {
            last = "snapped set is not in convex position".into();
            continue;
        }
        match attach_claims(&s, &[], vec![(claim.clone(), true)]) {
            Ok(claims) => {
                return Ok(ConstructionOutput {
                    points: s,
                    designated_pairs: Vec::new(),
                    claims,
                })
            }
            Err((_, detail)) => last = detail,
        }
    }
    Err(ConstructionError::ClaimFailed {
        attempts: RETRY_BUDGET,
        detail: last,
    })
}
