//! Weighted partial theta sums `Σ_{n≥0} (n+u)^r e^{-(n+u)²t²}` and their
//! small-`t` expansion.

use super::bernoulli::bernoulli_poly;
use super::gamma::gamma_half_integer;
use crate::num::Real;

/// Extra terms summed after the tail criterion is met.
const TAIL_MARGIN: usize = 16;

/// Sign in front of the Bernoulli sum in the small-`t` expansion.
///
/// The correct sign is negative; `Flipped` reproduces the sign error of
/// the general Euler–Maclaurin statement this expansion descends from and
/// exists only so tests can show it is wrong.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpansionSign {
    Corrected,
    Flipped,
}

/// Direct summation until the terms are past the peak and below
/// `min(1e-18, unit roundoff)` relative to the running sum, then a fixed
/// margin.
pub fn partial_theta_sum<T: Real>(u: T, r: u32, t: T) -> T {
    assert!(u > T::zero() && t > T::zero(), "u and t must be positive");
    let tol = T::of(1e-18).min(T::unit_roundoff());
    let t2 = t * t;
    // x^r e^{-x²t²} peaks at x = sqrt(r/2)/t
    let peak = (T::of(f64::from(r)) / T::of(2.0)).sqrt() / t;
    let mut sum = T::zero();
    let mut extra = None;
    for n in 0u64.. {
        let x = T::of_u64(n) + u;
        let term = x.powi(r as i32) * (-(x * x) * t2).exp();
        assert!(term.is_finite(), "non-finite term at n = {n}");
        sum = sum + term;
        match extra {
            Some(0) => break,
            Some(k) => extra = Some(k - 1),
            None if x > peak && (term <= tol * sum || term.is_zero()) => extra = Some(TAIL_MARGIN),
            None => {}
        }
    }
    sum
}

/// `Γ((r+1)/2) / (2t^{r+1}) - Σ_{n<N} (-1)^n B_{2n+r+1}(u) t^{2n} / ((2n+r+1) n!)`.
pub fn partial_theta_expansion<T: Real>(u: T, r: u32, t: T, terms: usize) -> T {
    partial_theta_expansion_signed(u, r, t, terms, ExpansionSign::Corrected)
}

pub fn partial_theta_expansion_signed<T: Real>(
    u: T,
    r: u32,
    t: T,
    terms: usize,
    sign: ExpansionSign,
) -> T {
    assert!(terms >= 1, "at least one correction term");
    let leading = gamma_half_integer::<T>(r + 1) / (T::of(2.0) * t.powi(r as i32 + 1));
    let t2 = t * t;
    let mut correction = T::zero();
    let mut t_pow = T::one();
    let mut factorial = T::one();
    for n in 0..terms {
        if n > 0 {
            factorial = factorial * T::of_u64(n as u64);
            t_pow = t_pow * t2;
        }
        let index = 2 * n + r as usize + 1;
        let mut term = bernoulli_poly(index, u) * t_pow / (T::of_u64(index as u64) * factorial);
        if n % 2 == 1 {
            term = -term;
        }
        correction = correction + term;
    }
    match sign {
        ExpansionSign::Corrected => leading - correction,
        ExpansionSign::Flipped => leading + correction,
    }
}

/// `|sum(t) - expansion(t)| / |sum(t/2) - expansion(t/2)|`, which tends to
/// `4^N` when the remainder is exactly of order `t^{2N}`.
pub fn remainder_ratio<T: Real>(u: T, r: u32, t: T, terms: usize, sign: ExpansionSign) -> T {
    let err = |t: T| {
        (partial_theta_sum(u, r, t) - partial_theta_expansion_signed(u, r, t, terms, sign)).abs()
    };
    err(t) / err(t / T::of(2.0))
}
