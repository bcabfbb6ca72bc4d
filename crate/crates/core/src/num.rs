//! Scalar abstractions.
//!
//! Exact quantities (series coefficients, moments) live in a [`Coefficient`]
//! ring; everything asymptotic is generic over a [`Real`] floating type.

use std::fmt::Debug;
use std::ops::{AddAssign, Neg, SubAssign};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Float, FloatConst, FromPrimitive, One, ToPrimitive, Zero};

use crate::double_double::DoubleDouble;

/// Exact ring for truncated power series coefficients.
pub trait Coefficient:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    fn mul_ref(&self, other: &Self) -> Self;

    fn from_i64(v: i64) -> Self;
}

macro_rules! impl_coefficient {
    ($($t:ty),*) => {
        $(
            impl Coefficient for $t {
                fn mul_ref(&self, other: &Self) -> Self {
                    self * other
                }

                fn from_i64(v: i64) -> Self {
                    <$t>::from(v)
                }
            }
        )*
    };
}

impl_coefficient!(i64, i128, BigInt);

impl Coefficient for BigRational {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

/// Floating-point scalar used by the asymptotic layer.
pub trait Real: Float + FloatConst + FromPrimitive + Debug + Send + Sync + 'static {
    /// Half the spacing of representable numbers just above one.
    fn unit_roundoff() -> Self {
        Self::epsilon() / Self::of(2.0)
    }

    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("f64 is representable")
    }

    fn of_u64(v: u64) -> Self {
        Self::from_u64(v).expect("u64 is representable")
    }
}

impl Real for f32 {}

impl Real for f64 {}

impl Real for DoubleDouble {}

/// Natural log of a positive big integer, from its top 128 bits plus a
/// binary exponent. `None` for zero.
pub fn ln_biguint<T: Real>(x: &BigUint) -> Option<T> {
    if x.is_zero() {
        return None;
    }
    let shift = x.bits().saturating_sub(128);
    let top = (x >> shift).to_u128().expect("top 128 bits");
    let (hi, lo) = ((top >> 64) as u64, top as u64);
    let top = T::of_u64(hi) * T::of(2f64.powi(64)) + T::of_u64(lo);
    Some(top.ln() + T::of_u64(shift) * T::LN_2())
}

/// Converts an exact rational to `T`, exactly when numerator and denominator
/// are both below 2^53.
pub fn rational_to_real<T: Real>(q: &BigRational) -> T {
    const EXACT: u64 = 1 << 53;
    let num = q.numer();
    let den = q.denom();
    match (num.to_i64(), den.to_i64()) {
        (Some(a), Some(b)) if a.unsigned_abs() < EXACT && b.unsigned_abs() < EXACT => {
            T::of(a as f64) / T::of(b as f64)
        }
        _ => T::of(q.to_f64().expect("finite rational")),
    }
}
