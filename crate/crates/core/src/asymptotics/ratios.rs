//! Exact-versus-asymptotic comparisons driven by exact moment sequences.

use std::io::{self, Write};

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::formulas::moment_asymp;
use super::log_value::LogValue;
use crate::error::AsymptoticError;
use crate::num::{ln_biguint, Real};
use crate::partitions::MexParams;
use crate::qseries::{MomentKind, MomentSequence};

#[derive(Debug, Clone, PartialEq)]
pub struct RatioRow<T> {
    pub n: usize,
    pub exact: BigUint,
    pub asymp_log: T,
    pub ratio: T,
}

fn lookup(seq: &MomentSequence, n: usize) -> Result<&BigUint, AsymptoticError> {
    seq.value(n).ok_or(AsymptoticError::OutOfRange {
        n,
        max_n: seq.max_n(),
    })
}

/// `exact(n) / asymptotic(n)` for each requested `n ≥ 1`.
pub fn ratio_table<T: Real>(
    seq: &MomentSequence,
    ns: &[usize],
) -> Result<Vec<RatioRow<T>>, AsymptoticError> {
    ns.iter()
        .map(|&n| {
            if n == 0 {
                return Err(AsymptoticError::NonPositive {
                    name: "n",
                    value: 0.0,
                });
            }
            let exact = lookup(seq, n)?.clone();
            let asymp = moment_asymp::<T>(seq.kind(), seq.params(), n as u64);
            let ratio = LogValue::from_biguint(&exact)
                .ratio(&asymp)
                .expect("asymptotic value is positive");
            Ok(RatioRow {
                n,
                exact,
                asymp_log: asymp.ln_abs().expect("positive"),
                ratio,
            })
        })
        .collect()
}

/// Writes `n,exact,asymp_log,ratio` with a `# params:` comment line.
pub fn write_ratio_csv<T: Real, W: Write>(
    mut w: W,
    kind: MomentKind,
    params: &MexParams,
    rows: &[RatioRow<T>],
) -> io::Result<()> {
    writeln!(w, "# params: kind={kind} {params}")?;
    writeln!(w, "n,exact,asymp_log,ratio")?;
    for row in rows {
        writeln!(
            w,
            "{},{},{:.15e},{:.15}",
            row.n,
            row.exact,
            row.asymp_log.to_f64().unwrap_or(f64::NAN),
            row.ratio.to_f64().unwrap_or(f64::NAN)
        )?;
    }
    Ok(())
}

fn check_pair(a: &MomentSequence, b: &MomentSequence) -> Result<(), AsymptoticError> {
    let (pa, pb) = (a.params(), b.params());
    if a.kind() != b.kind() {
        return Err(AsymptoticError::Mismatched("different moment kinds"));
    }
    if (pa.s(), pa.modulus(), pa.r()) != (pb.s(), pb.modulus(), pb.r()) {
        return Err(AsymptoticError::Mismatched("different (s, M, r)"));
    }
    Ok(())
}

/// `a(n) / b(n)` for two residues of the same `(kind, s, M, r)`.
pub fn corollary_ratio<T: Real>(
    a: &MomentSequence,
    b: &MomentSequence,
    n: usize,
) -> Result<T, AsymptoticError> {
    check_pair(a, b)?;
    let (x, y) = (lookup(a, n)?, lookup(b, n)?);
    if y.is_zero() {
        return Err(AsymptoticError::ZeroDenominator(n));
    }
    Ok(LogValue::from_biguint(x)
        .ratio(&LogValue::from_biguint(y))
        .expect("nonzero denominator"))
}

/// `|a(n)/b(n) - 1|`, computed as `|a(n) - b(n)| / b(n)` from the exact
/// difference so it stays meaningful below floating-point resolution of
/// the ratio itself.
pub fn corollary_deviation<T: Real>(
    a: &MomentSequence,
    b: &MomentSequence,
    n: usize,
) -> Result<T, AsymptoticError> {
    check_pair(a, b)?;
    let (x, y) = (lookup(a, n)?, lookup(b, n)?);
    if y.is_zero() {
        return Err(AsymptoticError::ZeroDenominator(n));
    }
    let diff = (BigInt::from(x.clone()) - BigInt::from(y.clone()))
        .into_parts()
        .1;
    match ln_biguint::<T>(&diff) {
        None => Ok(T::zero()),
        Some(ln_diff) => Ok((ln_diff - ln_biguint::<T>(y).expect("nonzero")).exp()),
    }
}

/// `ln Σ_{n≤max_n} a(n) e^{-nt}` from exact values (log-sum-exp). Only a
/// faithful value of the full series when the omitted tail is negligible.
pub fn generating_function_ln_at<T: Real>(seq: &MomentSequence, t: T) -> Option<T> {
    let logs: Vec<T> = seq
        .values()
        .iter()
        .enumerate()
        .filter_map(|(n, v)| ln_biguint::<T>(v).map(|l| l - T::of_u64(n as u64) * t))
        .collect();
    let max = logs.iter().copied().fold(T::neg_infinity(), T::max);
    if max == T::neg_infinity() {
        return None;
    }
    let sum = logs.iter().fold(T::zero(), |acc, &l| acc + (l - max).exp());
    Some(max + sum.ln())
}

fn theta_sum<T: Real>(mut term: impl FnMut(u64) -> Option<T>) -> T {
    let mut sum = T::zero();
    for n in 0u64.. {
        match term(n) {
            Some(v) => sum = sum + v,
            None => break,
        }
    }
    sum
}

/// `e^{-exponent}` is far below any representable contribution.
fn negligible<T: Real>(exponent: T) -> bool {
    exponent > T::of(800.0)
}

/// `Σ (Mn+A)^r q^{s m(m-1)/2} (1 - q^{sm})` at `q = e^{-t}`, `m = Mn+A`.
pub fn sigma_theta_at<T: Real>(p: &MexParams, t: T) -> T {
    let (s, m0, a) = (
        T::of(f64::from(p.s())),
        T::of(f64::from(p.modulus())),
        T::of(f64::from(p.residue())),
    );
    let half = T::of(0.5);
    theta_sum(|n| {
        let m = m0 * T::of_u64(n) + a;
        let e1 = s * m * (m - T::one()) * half * t;
        if n > 0 && negligible(e1) {
            return None;
        }
        Some(m.powi(p.r() as i32) * (-e1).exp() * -(-(s * m * t)).exp_m1())
    })
}

/// The telescoped ς theta factor at `q = e^{-t}`.
pub fn varsigma_theta_at<T: Real>(p: &MexParams, t: T) -> T {
    let (s, m0, a) = (
        T::of(f64::from(p.s())),
        T::of(f64::from(p.modulus())),
        T::of(f64::from(p.residue())),
    );
    let r = p.r() as i32;
    let head = a.powi(r);
    head + theta_sum(|n| {
        let nf = T::of_u64(n);
        let e = s * (m0 * nf * (nf + T::one()) / T::of(2.0) + a * (nf + T::one())) * t;
        if n > 0 && negligible(e) {
            return None;
        }
        let w = (m0 * (nf + T::one()) + a).powi(r) - (m0 * nf + a).powi(r);
        Some(w * (-e).exp())
    })
}

/// Leading small-`t` term of the theta factor: `1/M` (σ) or `1` (ς) for
/// `r = 0`, else `2^{(r-2)/2} μ s^{-r/2} r Γ(r/2) t^{-r/2}` with `μ = M^{-1}`
/// (σ) or `M^{r/2}` (ς).
pub fn theta_leading<T: Real>(kind: MomentKind, p: &MexParams, t: T) -> T {
    let m = T::of(f64::from(p.modulus()));
    if p.r() == 0 {
        return match kind {
            MomentKind::Sigma => m.recip(),
            MomentKind::Varsigma => T::one(),
        };
    }
    let r = T::of(f64::from(p.r()));
    let two = T::of(2.0);
    let modulus_factor = match kind {
        MomentKind::Sigma => m.recip(),
        MomentKind::Varsigma => m.powf(r / two),
    };
    two.powf((r - two) / two)
        * modulus_factor
        * T::of(f64::from(p.s())).powf(-r / two)
        * r
        * super::gamma::ln_gamma(r / two).exp()
        * t.powf(-r / two)
}
