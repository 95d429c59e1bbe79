//! Floating-point scalar abstraction for the probabilistic parts of the crate.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Real scalar used by the generative model and the relatedness condition.
///
/// Implemented for `f32` and `f64`. Integer quantities (DP cells, lengths,
/// distances) never go through this trait.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
    /// Tolerance used when checking that a probability vector sums to one.
    fn normalization_tol() -> Self;

    /// Lossy conversion from `f64`; every literal in this crate is representable.
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("finite literal")
    }
}

impl Scalar for f64 {
    fn normalization_tol() -> Self {
        1e-12
    }
}

impl Scalar for f32 {
    // f32 cannot resolve 1e-12; 1e-5 is a few ulps around 1.0 accumulated over a 4-8 term sum.
    fn normalization_tol() -> Self {
        1e-5
    }
}
