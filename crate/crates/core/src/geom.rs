//! Points, point sets and the exact predicates.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::GeomError;
use crate::lattice::Lattice;
use crate::scalar::{sign, Ring};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point2<T> {
    pub x: T,
    pub y: T,
}

impl<T> Point2<T> {
    pub const fn new(x: T, y: T) -> Self {
        Self { x, y }
    }
}

impl Point2<Rational> {
    /// Point with integer coordinates.
    pub fn from_ints(x: i64, y: i64) -> Self {
        Self::new(
            BigRational::from_integer(BigInt::from(x)),
            BigRational::from_integer(BigInt::from(y)),
        )
    }

    pub fn to_f64(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        (
            self.x.to_f64().unwrap_or(f64::NAN),
            self.y.to_f64().unwrap_or(f64::NAN),
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Color {
    Red,
    Blue,
    Uncolored,
}

impl Color {
    pub fn tag(self) -> Option<char> {
        match self {
            Color::Red => Some('R'),
            Color::Blue => Some('B'),
            Color::Uncolored => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredPoint {
    pub point: crate::Point,
    color: Color,
}

impl ColoredPoint {
    pub fn new(point: crate::Point, color: Color) -> Self {
        Self { point, color }
    }

    pub fn uncolored(point: crate::Point) -> Self {
        Self::new(point, Color::Uncolored)
    }

    pub fn color(&self) -> Color {
        self.color
    }
}

/// Ordered point list. Operations refer to points by index.
#[derive(Clone, Debug)]
pub struct PointSet {
    points: Vec<ColoredPoint>,
    gp_certified: bool,
    lattice: OnceLock<Lattice>,
}

impl PartialEq for PointSet {
    fn eq(&self, other: &Self) -> bool {
        self.points == other.points && self.gp_certified == other.gp_certified
    }
}

impl PointSet {
    pub fn new(points: Vec<ColoredPoint>) -> Self {
        Self {
            points,
            gp_certified: false,
            lattice: OnceLock::new(),
        }
    }

    pub fn from_points(points: Vec<crate::Point>) -> Self {
        Self::new(points.into_iter().map(ColoredPoint::uncolored).collect())
    }

    pub fn from_ints(coords: &[(i64, i64)]) -> Self {
        Self::from_points(
            coords
                .iter()
                .map(|&(x, y)| Point2::from_ints(x, y))
                .collect(),
        )
    }

    /// Validates and returns the certified set, or the violations.
    pub fn certified(mut self) -> Result<Self, Vec<Violation>> {
        let v = validate_general_position(&mut self);
        if v.is_empty() {
            Ok(self)
        } else {
            Err(v)
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[ColoredPoint] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &crate::Point {
        &self.points[i].point
    }

    pub fn color(&self, i: usize) -> Color {
        self.points[i].color
    }

    pub fn is_certified(&self) -> bool {
        self.gp_certified
    }

    pub fn count_color(&self, c: Color) -> usize {
        self.points.iter().filter(|p| p.color == c).count()
    }

    pub(crate) fn lattice(&self) -> &Lattice {
        self.lattice.get_or_init(|| Lattice::new(&self.points))
    }
}

/// Orientation of the triangle `abc`: +1 counterclockwise, -1 clockwise, 0 collinear.
pub fn orientation<T: Ring>(a: &Point2<T>, b: &Point2<T>, c: &Point2<T>) -> i8 {
    sign(&orient_det(a, b, c))
}

pub(crate) fn orient_det<T: Ring>(a: &Point2<T>, b: &Point2<T>, c: &Point2<T>) -> T {
    let (bx, by) = (b.x.clone() - a.x.clone(), b.y.clone() - a.y.clone());
    let (cx, cy) = (c.x.clone() - a.x.clone(), c.y.clone() - a.y.clone());
    bx * cy - by * cx
}

/// Sign of the lifted determinant, not normalized by orientation.
pub(crate) fn in_circle_det<T: Ring>(
    a: &Point2<T>,
    b: &Point2<T>,
    c: &Point2<T>,
    d: &Point2<T>,
) -> i8 {
    let row = |p: &Point2<T>| {
        let x = p.x.clone() - d.x.clone();
        let y = p.y.clone() - d.y.clone();
        let w = x.clone() * x.clone() + y.clone() * y.clone();
        (x, y, w)
    };
    let (a1, a2, a3) = row(a);
    let (b1, b2, b3) = row(b);
    let (c1, c2, c3) = row(c);
    let det = a1 * (b2.clone() * c3.clone() - b3.clone() * c2.clone())
        - a2 * (b1.clone() * c3 - b3 * c1.clone())
        + a3 * (b1 * c2 - b2 * c1);
    sign(&det)
}

/// +1 if `d` is strictly inside the circle through `a, b, c`, 0 if on it, -1 if outside.
pub fn in_circle<T: Ring>(
    a: &Point2<T>,
    b: &Point2<T>,
    c: &Point2<T>,
    d: &Point2<T>,
) -> Result<i8, GeomError> {
    let o = orientation(a, b, c);
    if o == 0 {
        return Err(GeomError::Collinear([0, 1, 2]));
    }
    Ok(in_circle_det(a, b, c, d) * o)
}

/// Center of the circle through `a, b, c`.
pub fn circumcenter<T: Ring>(
    a: &Point2<T>,
    b: &Point2<T>,
    c: &Point2<T>,
) -> Result<Point2<T>, GeomError> {
    let (bx, by) = (b.x.clone() - a.x.clone(), b.y.clone() - a.y.clone());
    let (cx, cy) = (c.x.clone() - a.x.clone(), c.y.clone() - a.y.clone());
    let two = T::one() + T::one();
    let den = two * (bx.clone() * cy.clone() - by.clone() * cx.clone());
    if den.is_zero() {
        return Err(GeomError::Collinear([0, 1, 2]));
    }
    let b2 = bx.clone() * bx.clone() + by.clone() * by.clone();
    let c2 = cx.clone() * cx.clone() + cy.clone() * cy.clone();
    let ux = (cy * b2.clone() - by * c2.clone()) / den.clone();
    let uy = (bx * c2 - cx * b2) / den;
    Ok(Point2::new(a.x.clone() + ux, a.y.clone() + uy))
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Violation {
    Coincident([usize; 2]),
    Collinear([usize; 3]),
    Cocircular([usize; 4]),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Coincident([a, b]) => write!(f, "coincident ({a},{b})"),
            Violation::Collinear([a, b, c]) => write!(f, "collinear ({a},{b},{c})"),
            Violation::Cocircular([a, b, c, d]) => write!(f, "cocircular ({a},{b},{c},{d})"),
        }
    }
}

/// Every coincident pair, collinear triple and cocircular quadruple, in lexicographic order.
///
/// Quadruples containing a collinear triple are not reported as cocircular.
pub fn general_position_violations(s: &PointSet) -> Vec<Violation> {
    match s.lattice() {
        Lattice::Small(p) => violations_in(p),
        Lattice::Big(p) => violations_in(p),
    }
}

fn violations_in<I: Ring + Send + Sync>(p: &[Point2<I>]) -> Vec<Violation> {
    let n = p.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if p[i] == p[j] {
                out.push(Violation::Coincident([i, j]));
            }
        }
    }
    let col = |a: usize, b: usize, c: usize| orientation(&p[a], &p[b], &p[c]) == 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if col(i, j, k) {
                    out.push(Violation::Collinear([i, j, k]));
                }
            }
        }
    }
    let quads: Vec<Vec<Violation>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut v = Vec::new();
            for j in i + 1..n {
                for k in j + 1..n {
                    if col(i, j, k) {
                        continue;
                    }
                    for l in k + 1..n {
                        if col(i, j, l) || col(i, k, l) || col(j, k, l) {
                            continue;
                        }
                        if in_circle_det(&p[i], &p[j], &p[k], &p[l]) == 0 {
                            v.push(Violation::Cocircular([i, j, k, l]));
                        }
                    }
                }
            }
            v
        })
        .collect();
    out.extend(quads.into_iter().flatten());
    out
}

/// Runs the exhaustive check and sets the certification flag on success.
pub fn validate_general_position(s: &mut PointSet) -> Vec<Violation> {
    let v = general_position_violations(s);
    s.gp_certified = v.is_empty();
    v
}

/// Rounds each coordinate to the nearest multiple of `1/denominator` (ties away from zero).
///
/// The float is converted exactly before rounding. Non-finite input maps to zero.
pub fn snap_to_rational(points: &[(f64, f64)], denominator: u64) -> PointSet {
    assert!(denominator >= 1, "denominator must be positive");
    let den = BigInt::from(denominator);
    let snap = |v: f64| -> Rational {
        let exact = BigRational::from_float(v).unwrap_or_else(BigRational::zero);
        let k = (exact * BigRational::from_integer(den.clone())).round();
        BigRational::new(k.to_integer(), den.clone())
    };
    PointSet::from_points(
        points
            .iter()
            .map(|&(x, y)| Point2::new(snap(x), snap(y)))
            .collect(),
    )
}

/// Indices of the convex hull vertices in counterclockwise order, collinear points excluded.
pub fn convex_hull(s: &PointSet) -> Vec<usize> {
    match s.lattice() {
        Lattice::Small(p) => hull_in(p),
        Lattice::Big(p) => hull_in(p),
    }
}

fn hull_in<I: Ring + Ord>(p: &[Point2<I>]) -> Vec<usize> {
    let n = p.len();
    if n < 3 {
        return (0..n).collect();
    }
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| (&p[a].x, &p[a].y).cmp(&(&p[b].x, &p[b].y)));
    let mut lower: Vec<usize> = Vec::new();
    for &i in &idx {
        while lower.len() >= 2
            && orientation(&p[lower[lower.len() - 2]], &p[lower[lower.len() - 1]], &p[i]) <= 0
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in idx.iter().rev() {
        while upper.len() >= 2
            && orientation(&p[upper[upper.len() - 2]], &p[upper[upper.len() - 1]], &p[i]) <= 0
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// True when every point is a hull vertex.
pub fn is_convex_position(s: &PointSet) -> bool {
    convex_hull(s).len() == s.len()
}
