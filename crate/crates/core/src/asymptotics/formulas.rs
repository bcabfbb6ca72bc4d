//! Closed-form leading asymptotics of p(n), σ and ς.

use super::gamma::ln_gamma;
use super::log_value::LogValue;
use crate::num::Real;
use crate::partitions::MexParams;
use crate::qseries::MomentKind;

/// `π√(2n/3)`
fn exponent<T: Real>(n: u64) -> T {
    T::PI() * (T::of(2.0) * T::of_u64(n) / T::of(3.0)).sqrt()
}

/// `p(n) ~ e^{π√(2n/3)} / (4√3 n)`.
pub fn hardy_ramanujan_asymp<T: Real>(n: u64) -> LogValue<T> {
    assert!(n >= 1, "n must be positive");
    let ln_4_sqrt3 = T::of(4.0).ln() + T::of(3.0).ln() / T::of(2.0);
    LogValue::from_ln(exponent::<T>(n) - ln_4_sqrt3 - T::of_u64(n).ln())
}

/// `ln(2^{(3r-12)/4} 3^{(r-2)/4} π^{-r/2} s^{-r/2} r Γ(r/2) n^{(r-4)/4}) + π√(2n/3)`
/// for `r ≥ 1`, without the modulus factor.
fn ln_moment_core<T: Real>(s: u32, r: u32, n: u64) -> T {
    let r_t = T::of(f64::from(r));
    let two = T::of(2.0);
    let four = T::of(4.0);
    (T::of(3.0) * r_t - T::of(12.0)) / four * two.ln() + (r_t - two) / four * T::of(3.0).ln()
        - r_t / two * T::PI().ln()
        - r_t / two * T::of(f64::from(s)).ln()
        + r_t.ln()
        + ln_gamma(r_t / two)
        + (r_t - four) / four * T::of_u64(n).ln()
        + exponent::<T>(n)
}

/// Leading asymptotic of σ at `n`; independent of the residue `A`.
pub fn sigma_asymp<T: Real>(p: &MexParams, n: u64) -> LogValue<T> {
    assert!(n >= 1, "n must be positive");
    let ln_m = T::of(f64::from(p.modulus())).ln();
    if p.r() == 0 {
        let hr = hardy_ramanujan_asymp::<T>(n).ln_abs().expect("positive");
        return LogValue::from_ln(hr - ln_m);
    }
    LogValue::from_ln(ln_moment_core::<T>(p.s(), p.r(), n) - ln_m)
}

/// Leading asymptotic of ς at `n`; equals p(n)'s for `r = 0`.
pub fn varsigma_asymp<T: Real>(p: &MexParams, n: u64) -> LogValue<T> {
    assert!(n >= 1, "n must be positive");
    if p.r() == 0 {
        return hardy_ramanujan_asymp(n);
    }
    let ln_m = T::of(f64::from(p.modulus())).ln();
    let half_r = T::of(f64::from(p.r())) / T::of(2.0);
    LogValue::from_ln(ln_moment_core::<T>(p.s(), p.r(), n) + half_r * ln_m)
}

pub fn moment_asymp<T: Real>(kind: MomentKind, p: &MexParams, n: u64) -> LogValue<T> {
    match kind {
        MomentKind::Sigma => sigma_asymp(p, n),
        MomentKind::Varsigma => varsigma_asymp(p, n),
    }
}
