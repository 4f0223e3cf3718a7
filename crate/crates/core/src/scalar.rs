//! Scalar abstraction: every numeric routine in this crate is generic over a
//! floating-point type implementing [`Real`]. `f64` is the intended workhorse;
//! `f32` is supported for callers that can live with the reduced margins.

use std::fmt;
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum<Self>
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
{
}

impl<T> Real for T where
    T: Float
        + FloatConst
        + FromPrimitive
        + AddAssign
        + SubAssign
        + MulAssign
        + DivAssign
        + Sum<T>
        + fmt::Debug
        + fmt::Display
        + Send
        + Sync
        + 'static
{
}

/// Scale-relative tolerance used by default for singularity verdicts,
/// branch selection near degenerate parameter values, and compatibility
/// checks of singular systems.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// Default cap on dense materialization. Dense matrices are oracle and
/// debugging tools; anything larger than this is almost certainly a mistake.
pub const DEFAULT_DENSE_CAP: usize = 4096;

/// [`DEFAULT_TOLERANCE`] converted to the scalar type.
pub fn default_tolerance<T: Real>() -> T {
    real(DEFAULT_TOLERANCE)
}

pub(crate) fn real<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("constant must be representable in the scalar type")
}

pub(crate) fn real_of<T: Real>(n: usize) -> T {
    T::from_usize(n).expect("index must be representable in the scalar type")
}
