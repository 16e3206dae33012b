//! Scalar bounds shared by the predicates.
//!
//! Predicates only need ring operations, so they run over machine integers,
//! big integers, exact rationals and floats alike. Division appears only in
//! [`crate::geom::circumcenter`], which is exact for field types such as
//! [`crate::Rational`] and approximate for floats.

use num_traits::{Num, Signed};

/// Ordered signed ring.
pub trait Ring: Clone + Num + Signed + PartialOrd {}

impl<T> Ring for T where T: Clone + Num + Signed + PartialOrd {}

/// Sign of `v` as -1, 0 or +1.
pub fn sign<T: Ring>(v: &T) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}
