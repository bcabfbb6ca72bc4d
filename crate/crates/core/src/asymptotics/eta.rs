use crate::error::AsymptoticError;
use crate::num::Real;

pub const DEFAULT_FACTOR_CAP: u64 = 10_000_000;

/// Compares `ln ∏_{k≤K} (1 - e^{-kt})`, with `K` the first index where
/// `e^{-Kt} < 1e-20`, against `½ln(2π) - ½ln t - π²/(6t)`.
/// Returns `(lhs, rhs)`; their difference is `t/24` up to exponentially
/// small terms.
pub fn eta_inversion_check<T: Real>(t: T, factor_cap: u64) -> Result<(T, T), AsymptoticError> {
    let t_f = t.to_f64().unwrap_or(f64::NAN);
    if !(t > T::zero() && t <= T::one()) {
        return Err(AsymptoticError::StepOutOfRange(t_f));
    }
    let needed = (20.0 * std::f64::consts::LN_10 / t_f).floor() as u64 + 1;
    if needed > factor_cap {
        return Err(AsymptoticError::FactorCapExceeded {
            needed,
            cap: factor_cap,
        });
    }
    let mut lhs = T::zero();
    for k in 1..=needed {
        lhs = lhs + (-(-T::of_u64(k) * t).exp()).ln_1p();
    }
    let two = T::of(2.0);
    let rhs = (two * T::PI()).ln() / two - t.ln() / two - T::PI() * T::PI() / (T::of(6.0) * t);
    Ok((lhs, rhs))
}
