//! Exact enclosing-circle depth for planar point sets.
//!
//! For a pair `p, q` of a point set `S`, the centers of all circles through
//! `p` and `q` form the perpendicular bisector of `pq`. The circumcenters of
//! `p, q, x` for the remaining points `x` cut it into `n - 1` open segments,
//! and every circle centered on one segment strictly encloses the same
//! points. The number of enclosed points is the segment weight.
//!
//! All arithmetic is exact. Coordinates are [`Rational`]; internally a point
//! set is scaled to an integer lattice and evaluated on `i128` whenever the
//! coordinates are small enough.
//!
//! ```
//! use circdepth::{PointSet, depth};
//!
//! let s = PointSet::from_ints(&[(0, 0), (10, 0), (9, 9), (0, 10)]).certified().unwrap();
//! let profile = depth::weight_sequence(&s, 0, 2).unwrap();
//! assert_eq!(profile.weights, vec![1, 0, 1]);
//! ```

pub mod constructions;
pub mod depth;
pub mod error;
pub mod geom;
mod lattice;
pub mod pointfile;
pub mod rng;
pub mod scalar;

pub use error::{ConstructionError, DepthError, GeomError};
pub use geom::{
    circumcenter, in_circle, orientation, snap_to_rational, validate_general_position, Color,
    ColoredPoint, Point2, PointSet, Violation,
};
pub use scalar::Ring;

/// Exact scalar.
pub type Rational = num_rational::BigRational;
/// Exact planar point.
pub type Point = Point2<Rational>;
/// Float points, used for constructions before snapping.
pub type PointF64 = Point2<f64>;
pub type PointF32 = Point2<f32>;
