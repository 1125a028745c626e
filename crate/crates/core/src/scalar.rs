//! Scalar abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Real floating-point scalar the library is generic over (`f32` or `f64`).
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + NumAssign
    + Sum
    + Default
    + Debug
    + Display
    + LowerExp
    + Send
    + Sync
    + 'static
{
    /// Per-order base tolerance; construction tolerances are multiples of `base_tol() * n`.
    fn base_tol() -> Self;

    /// Converts an `f64` literal. Every literal used in the crate is representable.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    #[inline]
    fn from_usize_lossy(k: usize) -> Self {
        Self::from_usize(k).expect("usize representable in scalar type")
    }
}

impl Real for f64 {
    #[inline]
    fn base_tol() -> Self {
        1e-8
    }
}

impl Real for f32 {
    #[inline]
    fn base_tol() -> Self {
        1e-3
    }
}

/// `x <= tol`, false for NaN.
pub(crate) fn within<T: Real>(x: T, tol: T) -> bool {
    x <= tol
}
