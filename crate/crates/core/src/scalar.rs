//! Scalar abstractions shared by the closed forms, the direct metrics and the
//! numeric oracle.
//!
//! [`Scalar`] covers every field the ratio-valued quantities can be evaluated
//! in: `f32`, `f64` and the exact rational [`Exact`]. Anything that needs a
//! square root or an iterative solver is bounded by [`RealScalar`] instead,
//! which only the floating-point types implement.

use std::fmt::Debug;

use num_rational::Ratio;
use num_traits::{Float, FromPrimitive, Num, NumCast};

/// Exact rational scalar. Counts are small enough on desk-scale graphs that
/// 128-bit numerators and denominators never overflow.
pub type Exact = Ratio<i128>;

/// A number field the closed forms can be evaluated in.
pub trait Scalar: Num + Copy + PartialOrd + Debug {
    /// Embeds a (possibly negative) integer count.
    fn from_int(v: i128) -> Self;

    /// Nearest `f64`, used for reporting.
    fn to_f64(self) -> f64;

    fn from_count(v: u128) -> Self {
        Self::from_int(v as i128)
    }

    fn ratio(num: i128, den: i128) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }
}

impl Scalar for f64 {
    fn from_int(v: i128) -> Self {
        v as f64
    }

    fn to_f64(self) -> f64 {
        self
    }
}

impl Scalar for f32 {
    fn from_int(v: i128) -> Self {
        v as f32
    }

    fn to_f64(self) -> f64 {
        self as f64
    }
}

impl Scalar for Exact {
    fn from_int(v: i128) -> Self {
        Ratio::from_integer(v)
    }

    fn to_f64(self) -> f64 {
        // numerators stay below 2^100 or so in practice, well inside f64 range
        *self.numer() as f64 / *self.denom() as f64
    }

    fn ratio(num: i128, den: i128) -> Self {
        Ratio::new(num, den)
    }
}

/// Floating-point scalar: required by square roots, bisection and Jacobi
/// rotations.
pub trait RealScalar: Scalar + Float + FromPrimitive + NumCast {
    /// Converts an `f64` constant (tolerances and the like).
    fn lit(v: f64) -> Self {
        <Self as NumCast>::from(v).expect("finite literal")
    }
}

impl RealScalar for f32 {}
impl RealScalar for f64 {}
