//! Scalar abstraction so the whole crate works in either `f32` or `f64`.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{AddAssign, MulAssign, SubAssign};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating-point scalar usable for walk amplitudes and probabilities.
///
/// The associated tolerances scale with the precision of the type, so the
/// same invariant checks are meaningful for both `f32` and `f64`.
pub trait WalkFloat:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + Sum
    + Debug
    + Display
    + 'static
{
    /// Absolute tolerance for normalization checks and single-step algebraic
    /// identities.
    const NORM_TOL: Self;

    /// Looser tolerance for quantities limited by series/window truncation
    /// rather than round-off (e.g. the norm of a Bessel-propagated state).
    const TRUNC_TOL: Self;
}

impl WalkFloat for f64 {
    const NORM_TOL: f64 = 1e-12;
    const TRUNC_TOL: f64 = 1e-8;
}

impl WalkFloat for f32 {
    const NORM_TOL: f32 = 1e-5;
    const TRUNC_TOL: f32 = 1e-3;
}

/// Converts an `f64` constant into `T`.
///
/// Panics only if `T` cannot represent ordinary literals, which no real
/// float type fails to do.
pub(crate) fn cast<T: WalkFloat>(x: f64) -> T {
    T::from_f64(x).expect("float literal must be representable")
}

/// Converts a lattice site index into `T`.
pub(crate) fn cast_i64<T: WalkFloat>(k: i64) -> T {
    T::from_i64(k).expect("site index must be representable")
}

/// Converts a time step count into `T`.
pub(crate) fn cast_u64<T: WalkFloat>(t: u64) -> T {
    T::from_u64(t).expect("step count must be representable")
}

/// `base^exp` for integer `exp` by repeated squaring.
///
/// `Float::powi` takes an `i32`; trajectory lengths are `u64`, so this is
/// done by hand. For `|base| <= 1` no intermediate can overflow.
pub(crate) fn pow_u64<T: WalkFloat>(base: T, exp: u64) -> T {
    let mut acc = T::one();
    let mut b = base;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= b;
        }
        b = b * b;
        e >>= 1;
    }
    acc
}
