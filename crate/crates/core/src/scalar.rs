//! Scalar abstraction over the two arithmetic lanes used throughout the
//! crate: exact integers (`i64`) for combinatorial identities that must hold
//! with residual zero, and floating point (`f32`/`f64`) for eigenvalue work.

use num_traits::{FromPrimitive, NumAssign, Signed, ToPrimitive};
use std::fmt;

/// Ring scalar shared by matrices, lifting operators, and quadratic forms.
///
/// Instantiate with `i64` for exact arithmetic and `f64` (or `f32`) for
/// floating arithmetic. The same operator code serves both lanes.
pub trait Scalar:
    Copy
    + PartialOrd
    + fmt::Debug
    + fmt::Display
    + NumAssign
    + Signed
    + FromPrimitive
    + ToPrimitive
    + 'static
{
    /// Conversion from an exact integer count (degrees, edge counts,
    /// binomials). Panics only if the value is unrepresentable, which the
    /// size guard rules out for supported dimensions.
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer count not representable in scalar type")
    }
}

impl<T> Scalar for T where
    T: Copy
        + PartialOrd
        + fmt::Debug
        + fmt::Display
        + NumAssign
        + Signed
        + FromPrimitive
        + ToPrimitive
        + 'static
{
}

/// Floating scalar for eigendecomposition and tolerance-based comparisons.
pub trait Real: Scalar + num_traits::Float {}

impl<T> Real for T where T: Scalar + num_traits::Float {}
