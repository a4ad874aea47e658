//! Floating-point scalar abstraction for the spectral routines.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Real scalar type usable by the eigensolvers: `f32` or `f64`.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + Sum + Debug + Display + Send + Sync + 'static
{
    /// Converts a count or small constant; panics only if the type cannot hold it.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("scalar conversion")
    }

    fn of_usize(x: usize) -> Self {
        Self::from_usize(x).expect("scalar conversion")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar conversion")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
