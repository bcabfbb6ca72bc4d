//! Ingham's Tauberian transfer and the `t → 0⁺` behaviour of the moment
//! generating functions it is applied to.

use super::gamma::ln_gamma;
use super::log_value::LogValue;
use crate::error::AsymptoticError;
use crate::num::Real;
use crate::partitions::MexParams;

/// Constants of `F(e^{-t}) ~ λ t^α e^{A/t}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InghamParams<T> {
    lambda: T,
    alpha: T,
    growth: T,
}

impl<T: Real> InghamParams<T> {
    pub fn new(lambda: T, alpha: T, growth: T) -> Result<Self, AsymptoticError> {
        let positive = |name: &'static str, v: T| {
            if v > T::zero() {
                Ok(())
            } else {
                Err(AsymptoticError::NonPositive {
                    name,
                    value: v.to_f64().unwrap_or(f64::NAN),
                })
            }
        };
        positive("lambda", lambda)?;
        positive("growth constant", growth)?;
        Ok(Self {
            lambda,
            alpha,
            growth,
        })
    }

    pub fn lambda(&self) -> T {
        self.lambda
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn growth(&self) -> T {
        self.growth
    }

    /// `ln(λ t^α e^{A/t})`.
    pub fn ln_at(&self, t: T) -> T {
        self.lambda.ln() + self.alpha * t.ln() + self.growth / t
    }
}

/// `f(n) ~ λ/(2√π) · A^{α/2+1/4} / n^{α/2+3/4} · e^{2√(An)}` in log-space.
pub fn ingham_transfer<T: Real>(p: &InghamParams<T>, n: u64) -> LogValue<T> {
    let two = T::of(2.0);
    let quarter = T::of(0.25);
    let n = T::of_u64(n);
    let half_alpha = p.alpha / two;
    LogValue::from_ln(
        p.lambda.ln() - two.ln() - T::PI().ln() / two + (half_alpha + quarter) * p.growth.ln()
            - (half_alpha + T::of(0.75)) * n.ln()
            + two * (p.growth * n).sqrt(),
    )
}

fn pi_squared_over_six<T: Real>() -> T {
    T::PI() * T::PI() / T::of(6.0)
}

/// `ln(r Γ(r/2) s^{-r/2})`, shared by every `r ≥ 1` constant.
fn ln_moment_factor<T: Real>(s: u32, r: u32) -> T {
    let r_t = T::of(f64::from(r));
    r_t.ln() + ln_gamma(r_t / T::of(2.0)) - r_t / T::of(2.0) * T::of(f64::from(s)).ln()
}

fn ln_m<T: Real>(p: &MexParams) -> T {
    T::of(f64::from(p.modulus())).ln()
}

/// Behaviour of `Σ σ(n) e^{-nt}` as `t → 0⁺`:
/// `M^{-1} t^{1/2} e^{π²/6t} / √(2π)` for `r = 0`, and
/// `2^{(r-3)/2} π^{-1/2} M^{-1} s^{-r/2} r Γ(r/2) t^{(1-r)/2} e^{π²/6t}` otherwise.
pub fn sigma_q_asymptotic<T: Real>(p: &MexParams) -> InghamParams<T> {
    let two = T::of(2.0);
    let (ln_lambda, alpha) = if p.r() == 0 {
        (-ln_m::<T>(p) - (two * T::PI()).ln() / two, T::of(0.5))
    } else {
        let r = T::of(f64::from(p.r()));
        (
            (r - T::of(3.0)) / two * two.ln() - T::PI().ln() / two - ln_m::<T>(p)
                + ln_moment_factor::<T>(p.s(), p.r()),
            (T::one() - r) / two,
        )
    };
    InghamParams::new(ln_lambda.exp(), alpha, pi_squared_over_six())
        .expect("constants are positive")
}

/// Behaviour of `Σ ς(n) e^{-nt}` as `t → 0⁺`. For `r = 0` this is the
/// partition generating function `t^{1/2} e^{π²/6t} / √(2π)`; otherwise
/// `2^{(r-3)/2} π^{-1/2} M^{r/2} s^{-r/2} r Γ(r/2) t^{(1-r)/2} e^{π²/6t}`.
pub fn varsigma_q_asymptotic<T: Real>(p: &MexParams) -> InghamParams<T> {
    let two = T::of(2.0);
    let (ln_lambda, alpha) = if p.r() == 0 {
        (-(two * T::PI()).ln() / two, T::of(0.5))
    } else {
        let r = T::of(f64::from(p.r()));
        (
            (r - T::of(3.0)) / two * two.ln() - T::PI().ln() / two
                + r / two * ln_m::<T>(p)
                + ln_moment_factor::<T>(p.s(), p.r()),
            (T::one() - r) / two,
        )
    };
    InghamParams::new(ln_lambda.exp(), alpha, pi_squared_over_six())
        .expect("constants are positive")
}
