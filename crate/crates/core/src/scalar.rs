//! Scalar abstraction shared by every model.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real scalar type the gyrovector machinery is generic over (`f32` or `f64`).
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Converts an `f64` literal into the scalar type.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// `true` when the value is an integer (and finite).
    fn is_integer(self) -> bool {
        self.is_finite() && self.fract() == Self::zero()
    }

    fn artanh(self) -> Self {
        // 0.5 * ln((1 + t) / (1 - t)) written with ln_1p for small |t|
        let two = Self::lit(2.0);
        (two * self / (Self::one() - self)).ln_1p() / two
    }
}

impl<T> Scalar for T where
    T: Float
        + FloatConst
        + FromPrimitive
        + ToPrimitive
        + Debug
        + Display
        + Default
        + Send
        + Sync
        + 'static
{
}
