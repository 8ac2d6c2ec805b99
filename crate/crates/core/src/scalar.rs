//! Scalar abstraction for the numeric kernels.
//!
//! Everything below the data-ingestion layer is generic over [`Scalar`] so the
//! same kernels run in `f32` or `f64`. The default pipeline (CLI, experiment
//! harness, reports) is pinned to `f64`; see the aliases at the crate root.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use ndarray::{LinalgScalar, ScalarOperand};
use num_traits::Float;

/// Floating-point scalar usable by every kernel in this crate.
pub trait Scalar:
    Float
    + LinalgScalar
    + ScalarOperand
    + num_traits::NumAssignOps
    + Sum
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Lossy conversion from `f64`. Constants and RNG draws are produced in
    /// `f64` and narrowed here.
    fn from_f64(value: f64) -> Self {
        num_traits::NumCast::from(value).expect("finite f64 converts to Scalar")
    }

    /// Widening (or identity) conversion to `f64`, used at reporting
    /// boundaries.
    fn to_f64(self) -> f64 {
        num_traits::ToPrimitive::to_f64(&self).expect("Scalar converts to f64")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
