//! Scalar abstraction: everything in this crate is generic over the real
//! floating-point type carrying the arithmetic.

use std::fmt;

use nalgebra::RealField;
use num_traits::FromPrimitive;

/// Real floating-point scalar underlying all matrices, models and tolerances.
///
/// Implemented for `f32` and `f64`. Complex arithmetic uses
/// `num_complex::Complex<T>`, which nalgebra equips with the full
/// `ComplexField` operation set for any `T: RealField`.
pub trait Scalar: RealField + FromPrimitive + Copy + fmt::Display + fmt::LowerExp {
    /// Convert an `f64` literal into `Self`. Panics only if the literal is
    /// not representable, which cannot happen for the in-crate constants.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal not representable in scalar type")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
