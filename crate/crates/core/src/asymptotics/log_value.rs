use std::cmp::Ordering;
use std::ops::{Div, Mul};

use num_bigint::BigUint;

use crate::num::{ln_biguint, Real};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    fn times(self, other: Sign) -> Sign {
        match (self, other) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Positive,
            _ => Sign::Negative,
        }
    }
}

/// A real number stored as a sign and the natural log of its magnitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogValue<T> {
    sign: Sign,
    log_abs: T,
}

impl<T: Real> LogValue<T> {
    pub fn zero() -> Self {
        Self {
            sign: Sign::Zero,
            log_abs: T::neg_infinity(),
        }
    }

    /// Positive value `exp(log_abs)`.
    pub fn from_ln(log_abs: T) -> Self {
        Self {
            sign: Sign::Positive,
            log_abs,
        }
    }

    pub fn from_real(x: T) -> Self {
        match x.partial_cmp(&T::zero()) {
            Some(Ordering::Greater) => Self::from_ln(x.ln()),
            Some(Ordering::Less) => Self {
                sign: Sign::Negative,
                log_abs: (-x).ln(),
            },
            _ => Self::zero(),
        }
    }

    pub fn from_biguint(x: &BigUint) -> Self {
        ln_biguint(x).map_or_else(Self::zero, Self::from_ln)
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// `ln|x|`, or `None` when the value is zero.
    pub fn ln_abs(&self) -> Option<T> {
        (self.sign != Sign::Zero).then_some(self.log_abs)
    }

    pub fn to_real(&self) -> T {
        match self.sign {
            Sign::Zero => T::zero(),
            Sign::Positive => self.log_abs.exp(),
            Sign::Negative => -self.log_abs.exp(),
        }
    }

    /// `self / other` as a plain real; `None` when `other` is zero.
    pub fn ratio(&self, other: &Self) -> Option<T> {
        (other.sign != Sign::Zero).then(|| (*self / *other).to_real())
    }
}

impl<T: Real> Mul for LogValue<T> {
    type Output = Self;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Self) -> Self {
        match self.sign.times(rhs.sign) {
            Sign::Zero => Self::zero(),
            sign => Self {
                sign,
                log_abs: self.log_abs + rhs.log_abs,
            },
        }
    }
}

impl<T: Real> Div for LogValue<T> {
    type Output = Self;

    /// Panics on division by zero.
    fn div(self, rhs: Self) -> Self {
        assert!(rhs.sign != Sign::Zero, "division by a zero LogValue");
        match self.sign.times(rhs.sign) {
            Sign::Zero => Self::zero(),
            sign => Self {
                sign,
                log_abs: self.log_abs - rhs.log_abs,
            },
        }
    }
}
