//! Floating-point scalar abstraction.
//!
//! Everything numerical that is not exact integer arithmetic (distances,
//! spectra, phase-estimation probabilities, cost formulas) is written against
//! [`Real`], so the same code runs in `f32` or `f64`.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Real scalar usable both with `num-traits` arithmetic and nalgebra's
/// symmetric eigensolver.
///
/// Both supertraits define methods such as `sqrt` and `sin`, so generic code
/// calls them through [`Float`] explicitly.
pub trait Real:
    Float
    + FromPrimitive
    + ToPrimitive
    + nalgebra::RealField
    + Copy
    + Debug
    + Display
    + Default
    + serde::Serialize
    + Send
    + Sync
    + 'static
{
    /// Lossy conversion from `f64`, used for literal constants.
    fn lit(x: f64) -> Self {
        <Self as FromPrimitive>::from_f64(x).expect("f64 literal representable")
    }

    fn from_count(x: usize) -> Self {
        <Self as FromPrimitive>::from_usize(x).expect("count representable")
    }

    fn to_f64_lossy(self) -> f64 {
        <Self as ToPrimitive>::to_f64(&self).unwrap_or(f64::NAN)
    }

    fn pi() -> Self {
        Self::lit(std::f64::consts::PI)
    }
}

impl Real for f32 {}
impl Real for f64 {}
