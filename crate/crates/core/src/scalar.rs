//! Scalar traits shared by the exact and floating-point layers.
//!
//! Matrices are generic over [`Ring`]; anything that also supports exact
//! (or floating) inversion implements [`Field`]. Geometry works over any
//! `num_traits::Float` through [`num_complex::Complex`].

use std::fmt::Debug;
use std::ops::{Div, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Float, One, Zero};

/// Commutative ring with identity, as needed by matrix arithmetic.
pub trait Ring:
    Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone + PartialEq + Debug + Zero + One + Neg<Output = T> + Sub<Output = T>
{
}

/// A ring whose nonzero elements can be inverted.
pub trait Field: Ring + Div<Output = Self> {
    fn try_inv(&self) -> Option<Self>;
}

impl Field for BigRational {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl<F: Float + Debug> Field for Complex<F> {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.inv())
        }
    }
}

macro_rules! float_field {
    ($($t:ty),+) => {
        $(
            impl Field for $t {
                fn try_inv(&self) -> Option<Self> {
                    if *self == 0.0 { None } else { Some(1.0 / *self) }
                }
            }
        )+
    };
}

float_field!(f32, f64);

/// Evaluation into the complex numbers under the identity embedding.
pub trait Embed {
    fn to_complex(&self) -> Complex<f64>;
}

impl Embed for BigInt {
    fn to_complex(&self) -> Complex<f64> {
        use num_traits::ToPrimitive;
        Complex::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }
}

impl Embed for BigRational {
    fn to_complex(&self) -> Complex<f64> {
        Complex::new(rational_to_f64(self), 0.0)
    }
}

impl Embed for Complex<f64> {
    fn to_complex(&self) -> Complex<f64> {
        *self
    }
}

pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}
