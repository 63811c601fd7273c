//! Scalar abstractions.
//!
//! Ring-level code (matrix products, commutators, characteristic polynomials,
//! the critical polynomials) only needs [`Scalar`], so it runs unchanged over
//! `i64`, `Rational64`, `f32` and `f64`. Anything that takes square roots,
//! exponentials or compares against a tolerance needs [`Real`].

use std::fmt::{Debug, Display, LowerExp};
use std::ops::Neg;

use num_traits::{Float, FloatConst, FromPrimitive, Num};

/// Exact or floating ring element.
pub trait Scalar:
    Num + Copy + Neg<Output = Self> + PartialOrd + Debug + FromPrimitive + Send + Sync + 'static
{
    /// Converts a small integer literal. Panics only if the target type
    /// cannot represent it, which never happens for the values used here.
    fn int(v: i64) -> Self {
        Self::from_i64(v).expect("integer literal representable")
    }
}

impl<T> Scalar for T where
    T: Num + Copy + Neg<Output = T> + PartialOrd + Debug + FromPrimitive + Send + Sync + 'static
{
}

/// Floating-point scalar: `f32` or `f64`.
pub trait Real: Scalar + Float + FloatConst + Display + LowerExp {
    /// Converts an `f64` constant.
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal representable")
    }
}

impl Real for f32 {}
impl Real for f64 {}
