//! Coefficient fields.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// A field of coefficients. Everything in the crate that is not intrinsically
/// integral (Laurent coefficients, KLR coefficients, row reduction) is written
/// against this trait.
///
/// Exactness is the caller's business: `BigRational` gives exact results,
/// `Ratio<i64>` is faster but can overflow, and `f64` compiles but makes
/// rank computations meaningless.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + Num + Neg<Output = Self> + FromPrimitive + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer does not fit the scalar type")
    }
}

impl<T> Scalar for T where
    T: Clone + Debug + Display + PartialEq + Num + Neg<Output = T> + FromPrimitive + Send + Sync + 'static
{
}
