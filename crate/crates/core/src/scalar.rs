//! Numeric bound shared by the real-valued parts of the crate
//! (centrality, clustering, curve statistics).

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumCast};

/// Floating point: `f32` or `f64`.
pub trait Scalar:
    Float + FromPrimitive + NumCast + Sum + Debug + Display + Default + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Float + FromPrimitive + NumCast + Sum + Debug + Display + Default + Send + Sync + 'static
{
}

/// Lossy conversion helper; every `Scalar` can represent small integers.
#[inline]
pub(crate) fn cast<F: Scalar>(x: usize) -> F {
    F::from_usize(x).expect("integer representable in scalar type")
}
