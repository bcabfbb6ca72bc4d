use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use super::moments::{MomentKind, MomentSequence};
use super::series::{SparseSeries, TruncatedSeries};
use crate::num::Coefficient;
use crate::partitions::MexParams;

pub const DEFAULT_TRUNCATION: usize = 4096;

/// `∏_{k=1}^{order} (1 - q^k)` truncated at `order`, by direct expansion.
pub fn euler_product<C: Coefficient>(order: usize) -> TruncatedSeries<C> {
    let mut s = TruncatedSeries::one(order);
    for k in 1..=order {
        s.mul_one_minus_q_pow(k);
    }
    s
}

/// p(0..=order) from the pentagonal-number recurrence.
pub fn partition_numbers(order: usize) -> Vec<BigUint> {
    partition_numbers_signed(order)
        .into_iter()
        .map(|p| p.into_parts().1)
        .collect()
}

fn partition_numbers_signed(order: usize) -> Vec<BigInt> {
    let mut p: Vec<BigInt> = Vec::with_capacity(order + 1);
    p.push(BigInt::one());
    for n in 1..=order {
        let mut acc = BigInt::zero();
        for k in 1usize.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let g2 = g1 + k;
            if k % 2 == 1 {
                acc += &p[n - g1];
                if g2 <= n {
                    acc += &p[n - g2];
                }
            } else {
                acc -= &p[n - g1];
                if g2 <= n {
                    acc -= &p[n - g2];
                }
            }
        }
        p.push(acc);
    }
    p
}

fn big_pow(base: u64, r: u32) -> BigInt {
    BigInt::from(base).pow(r)
}

/// `Σ_{n≥0} (Mn+A)^r q^{s·m(m-1)/2} (1 - q^{s·m})` with `m = Mn+A`, up to `q^order`.
pub fn sigma_theta(p: &MexParams, order: usize) -> SparseSeries<BigInt> {
    let (s, modulus, residue) = (
        u64::from(p.s()),
        u64::from(p.modulus()),
        u64::from(p.residue()),
    );
    let mut theta = SparseSeries::new(order);
    for n in 0u64.. {
        let m = modulus * n + residue;
        let e1 = s * (m * (m - 1) / 2);
        if e1 > order as u64 {
            break;
        }
        let w = big_pow(m, p.r());
        theta.add_term(e1 + s * m, -w.clone());
        theta.add_term(e1, w);
    }
    theta
}

/// ς theta factor in its original form:
/// `Σ_{n≥0} (Mn+A)^r q^{s(Mn(n-1)/2 + An)} (1 - q^{s(Mn+A)})`.
pub fn varsigma_theta_direct(p: &MexParams, order: usize) -> SparseSeries<BigInt> {
    let (s, modulus, residue) = (
        u64::from(p.s()),
        u64::from(p.modulus()),
        u64::from(p.residue()),
    );
    let mut theta = SparseSeries::new(order);
    for n in 0u64.. {
        let e1 = s * (modulus * (n * n.saturating_sub(1) / 2) + residue * n);
        if e1 > order as u64 {
            break;
        }
        let m = modulus * n + residue;
        let w = big_pow(m, p.r());
        theta.add_term(e1 + s * m, -w.clone());
        theta.add_term(e1, w);
    }
    theta
}

/// ς theta factor after telescoping:
/// `A^r + Σ_{n≥0} ((M(n+1)+A)^r - (Mn+A)^r) q^{s(Mn(n+1)/2 + A(n+1))}`.
/// Every coefficient is nonnegative.
pub fn varsigma_theta_reformulated(p: &MexParams, order: usize) -> SparseSeries<BigInt> {
    let (s, modulus, residue) = (
        u64::from(p.s()),
        u64::from(p.modulus()),
        u64::from(p.residue()),
    );
    let mut theta = SparseSeries::new(order);
    theta.add_term(0, big_pow(residue, p.r()));
    for n in 0u64.. {
        let e = s * (modulus * (n * (n + 1) / 2) + residue * (n + 1));
        if e > order as u64 {
            break;
        }
        let w = big_pow(modulus * (n + 1) + residue, p.r()) - big_pow(modulus * n + residue, p.r());
        theta.add_term(e, w);
    }
    theta
}

/// Holds `1/(q;q)_∞` to a fixed order so many moment sequences can share it.
#[derive(Debug, Clone)]
pub struct MomentEngine {
    partitions: TruncatedSeries<BigInt>,
}

impl MomentEngine {
    pub fn new(order: usize) -> Self {
        let coeffs = partition_numbers_signed(order);
        Self {
            partitions: TruncatedSeries::from_coeffs(coeffs).expect("order + 1 coefficients"),
        }
    }

    pub fn order(&self) -> usize {
        self.partitions.order()
    }

    pub fn partition_series(&self) -> &TruncatedSeries<BigInt> {
        &self.partitions
    }

    fn finish(
        &self,
        p: &MexParams,
        kind: MomentKind,
        theta: &SparseSeries<BigInt>,
    ) -> MomentSequence {
        let coeffs = self.partitions.mul_sparse(theta).into_coeffs();
        let values = coeffs
            .into_iter()
            .map(|c| {
                assert!(
                    !c.is_negative(),
                    "moment generating function has nonnegative coefficients"
                );
                c.into_parts().1
            })
            .collect();
        MomentSequence::new(*p, kind, values)
    }

    pub fn sigma(&self, p: &MexParams) -> MomentSequence {
        self.finish(p, MomentKind::Sigma, &sigma_theta(p, self.order()))
    }

    pub fn varsigma(&self, p: &MexParams) -> MomentSequence {
        self.finish(
            p,
            MomentKind::Varsigma,
            &varsigma_theta_reformulated(p, self.order()),
        )
    }

    pub fn varsigma_direct(&self, p: &MexParams) -> MomentSequence {
        self.finish(
            p,
            MomentKind::Varsigma,
            &varsigma_theta_direct(p, self.order()),
        )
    }

    pub fn moments(&self, p: &MexParams, kind: MomentKind) -> MomentSequence {
        match kind {
            MomentKind::Sigma => self.sigma(p),
            MomentKind::Varsigma => self.varsigma(p),
        }
    }
}

/// σ(0..=order) as coefficients of `(1/(q;q)_∞) · sigma_theta`.
pub fn sigma_gf_coeffs(p: &MexParams, order: usize) -> MomentSequence {
    MomentEngine::new(order).sigma(p)
}

/// ς(0..=order) via the telescoped theta factor.
pub fn varsigma_gf_coeffs(p: &MexParams, order: usize) -> MomentSequence {
    MomentEngine::new(order).varsigma(p)
}

/// ς(0..=order) via the untelescoped theta factor.
pub fn varsigma_gf_coeffs_direct(p: &MexParams, order: usize) -> MomentSequence {
    MomentEngine::new(order).varsigma_direct(p)
}
