//! Integer images of rational point sets.
//!
//! Multiplying every coordinate by the common denominator is a positive
//! scaling, so all signs of orientation and in-circle determinants and all
//! bisector event parameters are unchanged. Small images run on `i128`.

use num_bigint::{BigInt, ToBigInt};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::geom::{ColoredPoint, Point2};
use crate::scalar::Ring;

/// Coordinates below this bound keep every predicate inside `i128`.
const SMALL_BOUND: i128 = 1 << 28;

#[derive(Clone, Debug)]
pub(crate) enum Lattice {
    Small(Vec<Point2<i128>>),
    Big(Vec<Point2<BigInt>>),
}

impl Lattice {
    pub(crate) fn new(points: &[ColoredPoint]) -> Self {
        let mut den = BigInt::one();
        for p in points {
            den = den.lcm(p.point.x.denom());
            den = den.lcm(p.point.y.denom());
        }
        let scale = |v: &num_rational::BigRational| v.numer() * (&den / v.denom());
        let big: Vec<Point2<BigInt>> = points
            .iter()
            .map(|p| Point2::new(scale(&p.point.x), scale(&p.point.y)))
            .collect();
        let small: Option<Vec<Point2<i128>>> = big
            .iter()
            .map(|p| {
                let x = p.x.to_i128().filter(|v| v.abs() < SMALL_BOUND)?;
                let y = p.y.to_i128().filter(|v| v.abs() < SMALL_BOUND)?;
                Some(Point2::new(x, y))
            })
            .collect();
        match small {
            Some(s) => Lattice::Small(s),
            None => Lattice::Big(big),
        }
    }
}

/// Integer ring usable for lattice computations.
pub(crate) trait LatticeInt: Ring + Ord + Signed + ToBigInt + Send + Sync {}

impl<T> LatticeInt for T where T: Ring + Ord + Signed + ToBigInt + Send + Sync {}

/// Dispatches a generic body over the two lattice representations.
macro_rules! with_lattice {
    ($set:expr, |$p:ident| $body:expr) => {
        match $set.lattice() {
            $crate::lattice::Lattice::Small($p) => $body,
            $crate::lattice::Lattice::Big($p) => $body,
        }
    };
}
pub(crate) use with_lattice;
