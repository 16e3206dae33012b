use std::f64::consts::FRAC_PI_2;

use super::{
    attach_claims, jitter, ClaimKind, ConstructionOutput, RETRY_BUDGET, SNAP_DENOMINATOR,
};
use crate::error::ConstructionError;
use crate::geom::{snap_to_rational, validate_general_position};
use crate::rng::Rng;

type P = (f64, f64);

struct Circle {
    c: P,
    r: f64,
}

fn circle3(a: P, b: P, c: P) -> Circle {
    let d = 2.0 * (a.0 * (b.1 - c.1) + b.0 * (c.1 - a.1) + c.0 * (a.1 - b.1));
    let (a2, b2, c2) = (
        a.0 * a.0 + a.1 * a.1,
        b.0 * b.0 + b.1 * b.1,
        c.0 * c.0 + c.1 * c.1,
    );
    let ux = (a2 * (b.1 - c.1) + b2 * (c.1 - a.1) + c2 * (a.1 - b.1)) / d;
    let uy = (a2 * (c.0 - b.0) + b2 * (a.0 - c.0) + c2 * (b.0 - a.0)) / d;
    Circle {
        c: (ux, uy),
        r: (a.0 - ux).hypot(a.1 - uy),
    }
}

/// Exit parameter of the ray `t * dir`, `t > 0`, from a circle containing the origin.
fn ray_exit(k: &Circle, dir: P) -> f64 {
    let b = -(k.c.0 * dir.0 + k.c.1 * dir.1);
    let c = k.c.0 * k.c.0 + k.c.1 * k.c.1 - k.r * k.r;
    -b + (b * b - c).sqrt()
}

/// Float layout ordered `p_1, q_1, ..., p_n, q_n`, or the failing step.
fn layout(n: usize, eps: f64) -> Result<Vec<P>, String> {
    let p1 = (-1.0, 0.0);
    let q1 = (1.0, 0.0);
    let step = FRAC_PI_2 / (n - 1) as f64;
    let dirs: Vec<P> = (0..n)
        .map(|i| ((i as f64 * step).cos(), (i as f64 * step).sin()))
        .collect();
    let mut p = vec![(0.0, 0.0); n + 1];
    let mut q = vec![(0.0, 0.0); n + 1];
    p[1] = p1;
    q[1] = q1;
    p[n] = (0.0, eps);
    let big = |k: P| circle3(p1, q1, k);
    let cn = big(p[n]);
    q[n] = (0.0, cn.c.1 - cn.r);
    let mut pair_circle: Option<Circle> = None;
    for i in (2..n).rev() {
        let d = dirs[i - 1];
        let down = (-d.0, -d.1);
        let t_in = ray_exit(&big(p[i + 1]), down);
        let t_out = pair_circle.as_ref().map_or(0.0, |k| ray_exit(k, down));
        if !(t_out < t_in) {
            return Err(format!("empty interval for q_{i}: [{t_out}, {t_in}]"));
        }
        let t = 0.5 * (t_out + t_in);
        q[i] = (down.0 * t, down.1 * t);
        let k = circle3(q[i + 1], p[i + 1], q[i]);
        let tp = ray_exit(&k, d);
        p[i] = (d.0 * tp, d.1 * tp);
        pair_circle = Some(k);
    }
    Ok((1..=n).flat_map(|i| [p[i], q[i]]).collect())
}

/// `2n` points with `n` halving pairs `(p_i, q_i)` whose circles all enclose
/// `n - 2`, `n - 1` or `n` points.
///
/// `p_1 = (-1, 0)` and `q_1 = (1, 0)`; the line of pair `i` passes through the
/// origin at angle `(i - 1) pi / (2(n - 1))`, so the last one is the bisector
/// of `p_1 q_1`. `p_n` starts at height `1/n^2` and `q_n` closes the circle
/// through `p_1, q_1, p_n`. Going down from `i = n - 1`, `q_i` sits at the
/// midpoint of the part of its ray inside the circle through `p_1, q_1,
/// p_{i+1}` and outside the circle through `q_{i+2}, p_{i+2}, q_{i+1}`, and
/// `p_i` is where the circle through `q_{i+1}, p_{i+1}, q_i` meets the
/// opposite ray.
///
/// Snapped sets that are degenerate get their offending points jittered;
/// sets that break the claim are rebuilt with `p_n` twice as close.
pub fn halving_line_construction(n: usize) -> Result<ConstructionOutput, ConstructionError> {
    if n < 2 {
        return Err(ConstructionError::InvalidParameter("n must be at least 2".into()));
    }
    let designated: Vec<(usize, usize)> = (0..n).map(|i| (2 * i, 2 * i + 1)).collect();
    let claim = ClaimKind::HalvingWeights { lo: n - 2, hi: n };
    let mut rng = Rng::new(n as u64);
    let mut eps = 1.0 / (n * n) as f64;
    let mut s = None;
    let mut amp: u64 = 1 << 8;
    let mut last = String::new();
    for _ in 0..RETRY_BUDGET {
        let mut cur = match s.take() {
            Some(c) => c,
            None => match layout(n, eps) {
                Ok(raw) => snap_to_rational(&raw, SNAP_DENOMINATOR),
                Err(e) => {
                    last = e;
                    eps *= 0.5;
                    continue;
                }
            },
        };
        let v = validate_general_position(&mut cur);
        if !v.is_empty() {
            s = Some(jitter(&cur, &v, amp.max(1), &mut rng, SNAP_DENOMINATOR));
            amp /= 2;
            last = format!("violations {v:?}");
            continue;
        }
        match attach_claims(&cur, &designated, vec![(claim.clone(), true)]) {
            Ok(claims) => {
                return Ok(ConstructionOutput {
                    points: cur,
                    designated_pairs: designated,
                    claims,
                })
            }
            Err((_, detail)) => {
                last = detail;
                eps *= 0.5;
                amp = 1 << 8;
            }
        }
    }
    Err(ConstructionError::ClaimFailed {
        attempts: RETRY_BUDGET,
        detail: last,
    })
}
