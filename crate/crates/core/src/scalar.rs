//! Coefficient rings.
//!
//! Multivectors are generic over a coefficient type `T: Scalar`. The algebra
//! only ever needs ring operations plus the complex conjugation used by the
//! `*` anti-automorphism; real types conjugate to themselves.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::Ratio;
use num_traits::{One, Zero};

/// Complex conjugation. Identity on real rings.
pub trait Conjugate {
    fn conj(&self) -> Self;
}

/// A commutative ring usable as a multivector coefficient.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Conjugate
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// `+1` or `-1` as a ring element.
    fn from_sign(negative: bool) -> Self {
        if negative {
            -Self::one()
        } else {
            Self::one()
        }
    }
}

impl<T> Scalar for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + Conjugate
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

macro_rules! real_conjugate {
    ($($t:ty),*) => {
        $(impl Conjugate for $t {
            #[inline]
            fn conj(&self) -> Self {
                self.clone()
            }
        })*
    };
}

real_conjugate!(i8, i16, i32, i64, i128, isize, f32, f64, BigInt);

impl<T: Clone + num_integer::Integer> Conjugate for Ratio<T> {
    fn conj(&self) -> Self {
        self.clone()
    }
}

impl<T: Clone + Neg<Output = T>> Conjugate for Complex<T> {
    #[inline]
    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }
}

/// Imaginary unit in any complex ring.
pub fn imaginary_unit<T: Zero + One>() -> Complex<T> {
    Complex::new(T::zero(), T::one())
}
