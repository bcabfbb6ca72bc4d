//! Double-double arithmetic: an unevaluated sum `hi + lo` of two `f64`s with
//! `|lo| <= ulp(hi)/2`, good for about 32 significant digits.
//!
//! Arithmetic uses the usual error-free transforms (Dekker, Knuth, Bailey's
//! QD). Exponential, logarithm, square root and the circular functions are
//! accurate to full double-double precision; inverse and hyperbolic
//! functions are built from those.

use std::cmp::Ordering;
use std::f64::consts as f64c;
use std::fmt;
use std::num::FpCategory;
use std::ops::{
    Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Rem, RemAssign, Sub, SubAssign,
};
use std::str::FromStr;

use num_traits::{Float, FloatConst, FromPrimitive, Num, One, ToPrimitive, Zero};

#[derive(Debug, Clone, Copy, Default)]
pub struct DoubleDouble {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

const fn dd(hi: f64, lo: f64) -> DoubleDouble {
    DoubleDouble { hi, lo }
}

const LN_2: DoubleDouble = dd(f64c::LN_2, 2.3190468138462996e-17);
const PI: DoubleDouble = dd(f64c::PI, 1.2246467991473532e-16);
const TAU: DoubleDouble = dd(f64c::TAU, 2.4492935982947064e-16);
const FRAC_PI_2: DoubleDouble = dd(f64c::FRAC_PI_2, 6.123233995736766e-17);
const LN_10: DoubleDouble = dd(f64c::LN_10, -2.1707562233822494e-16);

impl DoubleDouble {
    pub const fn from_parts(hi: f64, lo: f64) -> Self {
        dd(hi, lo)
    }

    /// Normalizes an arbitrary pair so that `hi` is the rounded sum.
    pub fn new(hi: f64, lo: f64) -> Self {
        let (h, l) = two_sum(hi, lo);
        dd(h, l)
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    fn from_f64_exact(x: f64) -> Self {
        dd(x, 0.0)
    }

    fn scale(self, f: f64) -> Self {
        // exact when f is a power of two
        dd(self.hi * f, self.lo * f)
    }

    fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        let (h, l) = quick_two_sum(p, e + self.lo * b);
        dd(h, l)
    }

    fn div_f64(self, b: f64) -> Self {
        let q1 = self.hi / b;
        let r = self - Self::from_f64_exact(q1).mul_f64(b);
        let q2 = r.hi / b;
        let r = r - Self::from_f64_exact(q2).mul_f64(b);
        let q3 = r.hi / b;
        let (h, l) = quick_two_sum(q1, q2);
        dd(h, l) + Self::from_f64_exact(q3)
    }

    fn sqr(self) -> Self {
        self * self
    }

    /// `e^x - 1` for `|x| <= 0.5` by its Taylor series.
    fn expm1_series(x: Self) -> Self {
        let mut term = x;
        let mut sum = x;
        for n in 2..60 {
            term = term.mul(x).div_f64(f64::from(n));
            sum += term;
            if term.hi.abs() < 1e-34 * sum.hi.abs() {
                break;
            }
        }
        sum
    }

    /// `2 atanh(u)` for `|u| <= 1/3`.
    fn two_atanh_series(u: Self) -> Self {
        let u2 = u.sqr();
        let mut pow = u;
        let mut sum = u;
        for k in 1..200 {
            pow *= u2;
            let term = pow.div_f64(f64::from(2 * k + 1));
            sum += term;
            if term.hi.abs() < 1e-34 * sum.hi.abs() {
                break;
            }
        }
        sum.scale(2.0)
    }

    /// sin and cos of `x` with `|x| <= π/4`.
    fn sin_cos_reduced(x: Self) -> (Self, Self) {
        let x2 = x.sqr();
        let mut term = x;
        let mut sin = x;
        for n in 1..40 {
            term = -(term * x2).div_f64(f64::from((2 * n) * (2 * n + 1)));
            sin += term;
            if term.hi.abs() < 1e-34 {
                break;
            }
        }
        let mut term = Self::one();
        let mut cos = Self::one();
        for n in 1..40 {
            term = -(term * x2).div_f64(f64::from((2 * n - 1) * (2 * n)));
            cos += term;
            if term.hi.abs() < 1e-34 {
                break;
            }
        }
        (sin, cos)
    }

    fn sin_cos_dd(self) -> (Self, Self) {
        if !self.is_finite() {
            return (Self::nan(), Self::nan());
        }
        // x = 2πk + (π/2)j + r with |r| <= π/4
        let k = (self / TAU).round();
        let y = self - TAU * k;
        let j = (y / FRAC_PI_2).round();
        let r = y - FRAC_PI_2 * j;
        let (s, c) = Self::sin_cos_reduced(r);
        match j.hi as i64 {
            0 => (s, c),
            1 => (c, -s),
            -1 => (-c, s),
            _ => (-s, -c),
        }
    }
}

impl From<f64> for DoubleDouble {
    fn from(x: f64) -> Self {
        dd(x, 0.0)
    }
}

impl PartialEq for DoubleDouble {
    fn eq(&self, other: &Self) -> bool {
        self.hi == other.hi && self.lo == other.lo
    }
}

impl PartialOrd for DoubleDouble {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi)? {
            Ordering::Equal => self.lo.partial_cmp(&other.lo),
            o => Some(o),
        }
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    fn neg(self) -> Self {
        dd(-self.hi, -self.lo)
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    fn add(self, b: Self) -> Self {
        let (s1, s2) = two_sum(self.hi, b.hi);
        if !s1.is_finite() {
            return dd(s1, 0.0);
        }
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (h, l) = quick_two_sum(s1, s2 + t2);
        dd(h, l)
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    fn sub(self, b: Self) -> Self {
        self + (-b)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    fn mul(self, b: Self) -> Self {
        let (p, e) = two_prod(self.hi, b.hi);
        if !p.is_finite() {
            return dd(p, 0.0);
        }
        let (h, l) = quick_two_sum(p, e + (self.hi * b.lo + self.lo * b.hi));
        dd(h, l)
    }
}

impl Div for DoubleDouble {
    type Output = Self;
    fn div(self, b: Self) -> Self {
        let q1 = self.hi / b.hi;
        if !q1.is_finite() || q1 == 0.0 {
            return dd(q1, 0.0);
        }
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (h, l) = quick_two_sum(q1, q2);
        dd(h, l) + dd(q3, 0.0)
    }
}

impl Rem for DoubleDouble {
    type Output = Self;
    fn rem(self, b: Self) -> Self {
        self - b * (self / b).trunc()
    }
}

macro_rules! assign_ops {
    ($($tr:ident $m:ident $op:tt),*) => {$(
        impl $tr for DoubleDouble {
            fn $m(&mut self, rhs: Self) {
                *self = *self $op rhs;
            }
        }
    )*};
}

assign_ops!(AddAssign add_assign +, SubAssign sub_assign -, MulAssign mul_assign *,
    DivAssign div_assign /, RemAssign rem_assign %);

impl Zero for DoubleDouble {
    fn zero() -> Self {
        dd(0.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.hi == 0.0
    }
}

impl One for DoubleDouble {
    fn one() -> Self {
        dd(1.0, 0.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDoubleDoubleError;

impl fmt::Display for ParseDoubleDoubleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("invalid double-double literal")
    }
}

impl std::error::Error for ParseDoubleDoubleError {}

/// Decimal literals only (`-12.5e-3`); digits are accumulated exactly up to
/// double-double precision, so long literals keep all ~32 digits.
impl FromStr for DoubleDouble {
    type Err = ParseDoubleDoubleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (neg, body) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            _ => (false, s),
        };
        let (mantissa, exp) = match body.find(['e', 'E']) {
            Some(i) => (
                &body[..i],
                body[i + 1..]
                    .parse::<i32>()
                    .map_err(|_| ParseDoubleDoubleError)?,
            ),
            None => (body, 0),
        };
        let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
        if int.is_empty() && frac.is_empty() {
            return Err(ParseDoubleDoubleError);
        }
        let mut value = Self::zero();
        for c in int.bytes().chain(frac.bytes()) {
            if !c.is_ascii_digit() {
                return Err(ParseDoubleDoubleError);
            }
            value = value.mul_f64(10.0) + dd(f64::from(c - b'0'), 0.0);
        }
        let shift = exp - frac.len() as i32;
        let ten = dd(10.0, 0.0);
        value = if shift >= 0 {
            value * ten.powi(shift)
        } else {
            value / ten.powi(-shift)
        };
        Ok(if neg { -value } else { value })
    }
}

impl fmt::Display for DoubleDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == 0.0 {
            write!(f, "{}", self.hi)
        } else {
            write!(f, "{:e} {:+e}", self.hi, self.lo)
        }
    }
}

impl Num for DoubleDouble {
    type FromStrRadixErr = ParseDoubleDoubleError;

    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        if radix != 10 {
            return Err(ParseDoubleDoubleError);
        }
        s.parse()
    }
}

impl ToPrimitive for DoubleDouble {
    fn to_i64(&self) -> Option<i64> {
        let t = self.trunc();
        let hi = t.hi.to_i64()?;
        hi.checked_add(t.lo.to_i64()?)
    }

    fn to_u64(&self) -> Option<u64> {
        let t = self.trunc();
        let hi = t.hi.to_i128()?;
        u64::try_from(hi + t.lo.to_i128()?).ok()
    }

    fn to_f64(&self) -> Option<f64> {
        Some(self.hi + self.lo)
    }
}

impl FromPrimitive for DoubleDouble {
    fn from_i64(n: i64) -> Option<Self> {
        let hi = n as f64;
        // the rounding error of an i64 → f64 conversion fits an i64
        let lo = n.wrapping_sub(hi as i64) as f64;
        Some(Self::new(hi, lo))
    }

    fn from_u64(n: u64) -> Option<Self> {
        let hi = n as f64;
        let lo = (i128::from(n) - hi as i128) as f64;
        Some(Self::new(hi, lo))
    }

    fn from_f64(x: f64) -> Option<Self> {
        Some(dd(x, 0.0))
    }
}

impl num_traits::NumCast for DoubleDouble {
    fn from<T: ToPrimitive>(n: T) -> Option<Self> {
        if let Some(i) = n.to_i64() {
            Self::from_i64(i)
        } else if let Some(u) = n.to_u64() {
            Self::from_u64(u)
        } else {
            n.to_f64().map(|x| dd(x, 0.0))
        }
    }
}

impl FloatConst for DoubleDouble {
    fn E() -> Self {
        dd(f64c::E, 1.4456468917292502e-16)
    }
    fn FRAC_1_PI() -> Self {
        dd(f64c::FRAC_1_PI, -1.9678676675182486e-17)
    }
    fn FRAC_1_SQRT_2() -> Self {
        dd(f64c::FRAC_1_SQRT_2, -4.833646656726457e-17)
    }
    fn FRAC_2_PI() -> Self {
        dd(f64c::FRAC_2_PI, -3.935735335036497e-17)
    }
    fn FRAC_2_SQRT_PI() -> Self {
        dd(f64c::FRAC_2_SQRT_PI, 1.533545961316588e-17)
    }
    fn FRAC_PI_2() -> Self {
        FRAC_PI_2
    }
    fn FRAC_PI_3() -> Self {
        dd(f64c::FRAC_PI_3, -1.072081766451091e-16)
    }
    fn FRAC_PI_4() -> Self {
        dd(f64c::FRAC_PI_4, 3.061616997868383e-17)
    }
    fn FRAC_PI_6() -> Self {
        dd(f64c::FRAC_PI_6, -5.360408832255455e-17)
    }
    fn FRAC_PI_8() -> Self {
        dd(f64c::FRAC_PI_8, 1.5308084989341915e-17)
    }
    fn LN_10() -> Self {
        LN_10
    }
    fn LN_2() -> Self {
        LN_2
    }
    fn LOG10_E() -> Self {
        dd(f64c::LOG10_E, 1.098319650216765e-17)
    }
    fn LOG2_E() -> Self {
        dd(f64c::LOG2_E, 2.0355273740931033e-17)
    }
    fn PI() -> Self {
        PI
    }
    fn SQRT_2() -> Self {
        dd(f64c::SQRT_2, -9.667293313452913e-17)
    }
    fn TAU() -> Self {
        TAU
    }
    fn LOG10_2() -> Self {
        dd(f64c::LOG10_2, -2.8037281277851704e-18)
    }
    fn LOG2_10() -> Self {
        dd(f64c::LOG2_10, 1.661617516973592e-16)
    }
}

impl Float for DoubleDouble {
    fn nan() -> Self {
        dd(f64::NAN, f64::NAN)
    }
    fn infinity() -> Self {
        dd(f64::INFINITY, 0.0)
    }
    fn neg_infinity() -> Self {
        dd(f64::NEG_INFINITY, 0.0)
    }
    fn neg_zero() -> Self {
        dd(-0.0, 0.0)
    }
    fn min_value() -> Self {
        dd(f64::MIN, 0.0)
    }
    fn min_positive_value() -> Self {
        dd(f64::MIN_POSITIVE, 0.0)
    }
    fn max_value() -> Self {
        dd(f64::MAX, 0.0)
    }
    /// `2^-104`, the spacing just above one.
    fn epsilon() -> Self {
        dd(f64::EPSILON * f64::EPSILON / 4.0, 0.0)
    }
    fn is_nan(self) -> bool {
        self.hi.is_nan() || self.lo.is_nan()
    }
    fn is_infinite(self) -> bool {
        self.hi.is_infinite()
    }
    fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }
    fn is_normal(self) -> bool {
        self.hi.is_normal()
    }
    fn classify(self) -> FpCategory {
        self.hi.classify()
    }

    fn floor(self) -> Self {
        let h = self.hi.floor();
        if h == self.hi {
            let (h, l) = quick_two_sum(h, self.lo.floor());
            dd(h, l)
        } else {
            dd(h, 0.0)
        }
    }
    fn ceil(self) -> Self {
        let h = self.hi.ceil();
        if h == self.hi {
            let (h, l) = quick_two_sum(h, self.lo.ceil());
            dd(h, l)
        } else {
            dd(h, 0.0)
        }
    }
    /// Half-way cases round away from zero.
    fn round(self) -> Self {
        let half = dd(0.5, 0.0);
        if self.hi >= 0.0 {
            (self + half).floor()
        } else {
            (self - half).ceil()
        }
    }
    fn trunc(self) -> Self {
        if self.hi >= 0.0 {
            self.floor()
        } else {
            self.ceil()
        }
    }
    fn fract(self) -> Self {
        self - self.trunc()
    }
    fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }
    fn signum(self) -> Self {
        if self.is_nan() {
            self
        } else {
            dd(self.hi.signum(), 0.0)
        }
    }
    fn is_sign_positive(self) -> bool {
        self.hi.is_sign_positive()
    }
    fn is_sign_negative(self) -> bool {
        self.hi.is_sign_negative()
    }
    fn mul_add(self, a: Self, b: Self) -> Self {
        self * a + b
    }
    fn recip(self) -> Self {
        Self::one() / self
    }

    fn powi(self, n: i32) -> Self {
        let mut base = self;
        let mut e = n.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            e >>= 1;
            if e > 0 {
                base = base.sqr();
            }
        }
        if n < 0 {
            acc.recip()
        } else {
            acc
        }
    }
    fn powf(self, n: Self) -> Self {
        if n.is_zero() {
            return Self::one();
        }
        if self.is_zero() {
            return if n.hi > 0.0 {
                Self::zero()
            } else {
                Self::infinity()
            };
        }
        if n.fract().is_zero() && n.abs().hi < f64::from(i32::MAX) {
            return self.powi(n.hi as i32 + n.lo as i32);
        }
        (n * self.ln()).exp()
    }

    /// Karp's square root: one Newton step on the `f64` reciprocal root.
    fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return if self.is_zero() {
                Self::zero()
            } else {
                Self::nan()
            };
        }
        if self.hi.is_infinite() {
            return self;
        }
        let x = 1.0 / self.hi.sqrt();
        let ax = self.hi * x;
        let diff = self - dd(ax, 0.0).sqr();
        Self::new(ax, diff.hi * x * 0.5)
    }

    /// Range reduction by `ln 2` and `2^10`, Taylor series in `expm1` form,
    /// then ten exact-form squarings `(1+p)² = 1 + p(p+2)`.
    fn exp(self) -> Self {
        const HALVINGS: i32 = 10;
        if self.hi < -745.2 {
            return Self::zero();
        }
        if self.hi > 709.8 {
            return Self::infinity();
        }
        if self.is_nan() {
            return self;
        }
        let k = (self.hi / LN_2.hi).round();
        let r = (self - LN_2 * dd(k, 0.0)).scale(1.0 / f64::from(1 << HALVINGS));
        let mut p = Self::expm1_series(r);
        for _ in 0..HALVINGS {
            p = p * (p + dd(2.0, 0.0));
        }
        let e = p + Self::one();
        // 2^k in two steps so neither factor leaves the normal range
        let half = (k / 2.0).trunc();
        e.scale(2f64.powi(half as i32))
            .scale(2f64.powi((k - half) as i32))
    }
    fn exp2(self) -> Self {
        (self * LN_2).exp()
    }
    fn exp_m1(self) -> Self {
        if self.abs().hi <= 0.5 {
            Self::expm1_series(self)
        } else {
            self.exp() - Self::one()
        }
    }

    /// Two Newton steps `x ← x + a·e^{-x} - 1` from the `f64` logarithm.
    fn ln(self) -> Self {
        if self.hi < 0.0 || self.is_nan() {
            return Self::nan();
        }
        if self.is_zero() {
            return Self::neg_infinity();
        }
        if self.hi.is_infinite() {
            return self;
        }
        let mut x = dd(self.hi.ln(), 0.0);
        for _ in 0..2 {
            x = x + self * (-x).exp() - Self::one();
        }
        x
    }
    fn ln_1p(self) -> Self {
        if self.abs().hi < 0.5 {
            let u = self / (self + dd(2.0, 0.0));
            Self::two_atanh_series(u)
        } else {
            (self + Self::one()).ln()
        }
    }
    fn log(self, base: Self) -> Self {
        self.ln() / base.ln()
    }
    fn log2(self) -> Self {
        self.ln() / LN_2
    }
    fn log10(self) -> Self {
        self.ln() / LN_10
    }

    fn max(self, other: Self) -> Self {
        if self.is_nan() || other > self {
            other
        } else {
            self
        }
    }
    fn min(self, other: Self) -> Self {
        if self.is_nan() || other < self {
            other
        } else {
            self
        }
    }
    fn abs_sub(self, other: Self) -> Self {
        if self <= other {
            Self::zero()
        } else {
            self - other
        }
    }
    fn cbrt(self) -> Self {
        if self.is_zero() || !self.is_finite() {
            return self;
        }
        let mut x = dd(self.hi.cbrt(), 0.0);
        for _ in 0..2 {
            x = x - (x.powi(3) - self) / (x.sqr().mul_f64(3.0));
        }
        x
    }
    fn hypot(self, other: Self) -> Self {
        (self.sqr() + other.sqr()).sqrt()
    }

    fn sin(self) -> Self {
        self.sin_cos_dd().0
    }
    fn cos(self) -> Self {
        self.sin_cos_dd().1
    }
    fn tan(self) -> Self {
        let (s, c) = self.sin_cos_dd();
        s / c
    }
    fn sin_cos(self) -> (Self, Self) {
        self.sin_cos_dd()
    }
    fn asin(self) -> Self {
        self.atan2((Self::one() - self.sqr()).sqrt())
    }
    fn acos(self) -> Self {
        (Self::one() - self.sqr()).sqrt().atan2(self)
    }
    /// Newton's method on `sin x - a cos x` from the `f64` arctangent.
    fn atan(self) -> Self {
        if self.is_nan() {
            return self;
        }
        if self.hi.is_infinite() {
            return FRAC_PI_2 * self.signum();
        }
        let mut x = dd(self.hi.atan(), 0.0);
        for _ in 0..2 {
            let (s, c) = x.sin_cos_dd();
            x -= (s - self * c) / (c + self * s);
        }
        x
    }
    fn atan2(self, other: Self) -> Self {
        let (y, x) = (self, other);
        if x.is_zero() {
            return if y.is_zero() {
                Self::zero()
            } else {
                FRAC_PI_2 * y.signum()
            };
        }
        let a = (y / x).atan();
        if x.hi > 0.0 {
            a
        } else if y.hi >= 0.0 {
            a + PI
        } else {
            a - PI
        }
    }
    fn sinh(self) -> Self {
        if self.abs().hi <= 0.5 {
            let e = self.exp_m1();
            // (e^x - e^-x)/2 with e^x = 1+e
            (e + e / (e + Self::one())).scale(0.5)
        } else {
            let e = self.exp();
            (e - e.recip()).scale(0.5)
        }
    }
    fn cosh(self) -> Self {
        let e = self.exp();
        (e + e.recip()).scale(0.5)
    }
    fn tanh(self) -> Self {
        if self.abs().hi > 40.0 {
            return self.signum();
        }
        let e = self.scale(2.0).exp_m1();
        e / (e + dd(2.0, 0.0))
    }
    fn asinh(self) -> Self {
        let a = self.abs();
        let r = (a + (a.sqr() + Self::one()).sqrt()).ln();
        if self.hi < 0.0 {
            -r
        } else {
            r
        }
    }
    fn acosh(self) -> Self {
        (self + (self.sqr() - Self::one()).sqrt()).ln()
    }
    fn atanh(self) -> Self {
        ((Self::one() + self) / (Self::one() - self))
            .ln()
            .scale(0.5)
    }
    fn integer_decode(self) -> (u64, i16, i8) {
        self.hi.integer_decode()
    }
    fn to_degrees(self) -> Self {
        self * dd(180.0, 0.0) / PI
    }
    fn to_radians(self) -> Self {
        self * PI / dd(180.0, 0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> DoubleDouble {
        s.parse().unwrap()
    }

    fn close(a: DoubleDouble, b: DoubleDouble, rel: f64) -> bool {
        ((a - b) / b).abs().hi <= rel
    }

    #[test]
    fn division_keeps_the_low_word() {
        let third = DoubleDouble::one() / dd(3.0, 0.0);
        assert!((third * dd(3.0, 0.0) - DoubleDouble::one()).abs().hi < 1e-31);
        let b = parse("0.30000000000000001110223024625157");
        assert!(((b * b) / b - b).abs().hi < 1e-32);
    }

    #[test]
    fn parsing_is_exact_to_double_double() {
        let pi = parse("3.14159265358979323846264338327950288");
        assert!(close(pi, PI, 1e-32));
        assert_eq!(parse("-2.5e3"), dd(-2500.0, 0.0));
        assert!("1.2.3".parse::<DoubleDouble>().is_err());
        assert!("".parse::<DoubleDouble>().is_err());
    }

    #[test]
    fn exponential_and_logarithm() {
        // e^{-1}, e^3, e^{-7.5} to 32 digits
        let cases = [
            (-1.0, "0.36787944117144232159552377016146087"),
            (3.0, "20.085536923187667740928529654581717"),
            (-7.5, "5.5308437014783358310200008853035720e-4"),
        ];
        for (x, want) in cases {
            let want = parse(want);
            assert!(close(dd(x, 0.0).exp(), want, 1e-31), "exp({x})");
            assert!((want.ln() - dd(x, 0.0)).abs().hi < 1e-31, "ln(exp({x}))");
        }
        let ln10 = dd(10.0, 0.0).ln();
        assert!(close(ln10, LN_10, 1e-32));
        for k in 1..200 {
            let x = dd(-0.37 * f64::from(k), 0.0);
            assert!((x.exp() * (-x).exp() - DoubleDouble::one()).abs().hi < 1e-30);
        }
        assert_eq!(dd(-800.0, 0.0).exp(), DoubleDouble::zero());
    }

    #[test]
    fn small_argument_functions() {
        let x = parse("1e-10");
        // Taylor series to x⁴; x⁵ is below the tolerance
        let x2 = x * x;
        let want = x - x2 / dd(2.0, 0.0) + x2 * x / dd(3.0, 0.0) - x2 * x2 / dd(4.0, 0.0);
        assert!(close(x.ln_1p(), want, 1e-31));
        let want = x + x2 / dd(2.0, 0.0) + x2 * x / dd(6.0, 0.0) + x2 * x2 / dd(24.0, 0.0);
        assert!(close(x.exp_m1(), want, 1e-31));
    }

    #[test]
    fn roots_and_powers() {
        let two = dd(2.0, 0.0);
        assert!(close(two.sqrt(), DoubleDouble::SQRT_2(), 5e-32));
        assert!(close(two.cbrt().powi(3), two, 1e-31));
        assert!(close(two.powi(-3), dd(0.125, 0.0), 1e-32));
        assert!(close(two.powf(dd(0.5, 0.0)), DoubleDouble::SQRT_2(), 1e-31));
    }

    #[test]
    fn circular_functions() {
        let sixth = PI / dd(6.0, 0.0);
        assert!(close(sixth.sin(), dd(0.5, 0.0), 1e-31));
        assert!(close((PI / dd(3.0, 0.0)).cos(), dd(0.5, 0.0), 1e-31));
        assert!(close(
            DoubleDouble::one().atan(),
            DoubleDouble::FRAC_PI_4(),
            1e-31
        ));
        let x = parse("12.345");
        let (s, c) = x.sin_cos();
        assert!((s * s + c * c - DoubleDouble::one()).abs().hi < 1e-30);
        assert!(close(
            dd(-1.0, 0.0).atan2(dd(-1.0, 0.0)),
            -DoubleDouble::FRAC_PI_4() * dd(3.0, 0.0),
            1e-31
        ));
    }

    #[test]
    fn rounding() {
        let x = DoubleDouble::new(4.0, -1e-20);
        assert_eq!(x.floor(), dd(3.0, 0.0));
        assert_eq!(x.ceil(), dd(4.0, 0.0));
        assert_eq!(x.round(), dd(4.0, 0.0));
        assert_eq!(dd(-2.5, 0.0).round(), dd(-3.0, 0.0));
        assert_eq!((-x).trunc(), dd(-3.0, 0.0));
    }

    #[test]
    fn integer_conversions_are_exact() {
        let big = u64::MAX - 12;
        let x = DoubleDouble::from_u64(big).unwrap();
        assert_eq!(x.to_u64(), Some(big));
        let n = -(1i64 << 60) - 7;
        assert_eq!(DoubleDouble::from_i64(n).unwrap().to_i64(), Some(n));
    }
}
