use std::collections::BTreeMap;
use std::ops::Mul;

use crate::error::SeriesError;
use crate::num::Coefficient;

/// Formal power series in `q` known exactly up to `q^order`.
///
/// Coefficients past `order` are unknown rather than zero, so every
/// binary operation truncates to the smaller order.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> TruncatedSeries<C> {
    pub fn from_coeffs(coeffs: Vec<C>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        Ok(Self { coeffs })
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = C::one();
        s
    }

    /// Dense form of a sparse series, truncated to `order`.
    pub fn from_sparse(sparse: &SparseSeries<C>, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (&e, c) in sparse.terms.range(..=order) {
            s.coeffs[e] = c.clone();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Option<&C> {
        self.coeffs.get(k)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn truncate(&mut self, order: usize) {
        self.coeffs.truncate(order + 1);
    }

    /// Cauchy product, truncated to the smaller of the two orders.
    pub fn mul_series(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                out.coeffs[i + j] += &a.mul_ref(b);
            }
        }
        out
    }

    /// Product with a sparse series; `O(order · terms)`.
    pub fn mul_sparse(&self, sparse: &SparseSeries<C>) -> Self {
        let order = self.order().min(sparse.order);
        let mut out = Self::zero(order);
        for (&e, c) in sparse.terms.range(..=order) {
            for (k, a) in self.coeffs[..=order - e].iter().enumerate() {
                out.coeffs[e + k] += &c.mul_ref(a);
            }
        }
        out
    }

    /// In-place multiplication by `1 - q^k`, `k >= 1`.
    pub fn mul_one_minus_q_pow(&mut self, k: usize) {
        assert!(k >= 1, "exponent must be positive");
        for i in (k..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] -= &lo[i - k];
        }
    }

    /// Multiplicative inverse up to the same order. Restricted to a unit
    /// constant term so the result stays in the coefficient ring.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        let neg_c0 = -c0.clone();
        if !(c0.is_one() || neg_c0.is_one()) {
            return Err(SeriesError::NonUnitConstant);
        }
        // 1/c0 == c0 for c0 = ±1
        let mut inv: Vec<C> = Vec::with_capacity(self.coeffs.len());
        inv.push(c0.clone());
        for k in 1..self.coeffs.len() {
            let mut acc = C::zero();
            for j in 1..=k {
                let a = &self.coeffs[j];
                if !a.is_zero() {
                    acc += &a.mul_ref(&inv[k - j]);
                }
            }
            inv.push(neg_c0.mul_ref(&acc));
        }
        Ok(Self { coeffs: inv })
    }
}

impl<C: Coefficient> Mul for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;

    fn mul(self, rhs: Self) -> TruncatedSeries<C> {
        self.mul_series(rhs)
    }
}

/// Exponent → coefficient map for series with few nonzero terms up to
/// `order`. Terms above `order` are dropped on insertion and zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseSeries<C> {
    terms: BTreeMap<usize, C>,
    order: usize,
}

impl<C: Coefficient> SparseSeries<C> {
    pub fn new(order: usize) -> Self {
        Self {
            terms: BTreeMap::new(),
            order,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn add_term(&mut self, exponent: u64, coeff: C) {
        let Ok(e) = usize::try_from(exponent) else {
            return;
        };
        if e > self.order || coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(C::zero);
        *slot += &coeff;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &C)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}
