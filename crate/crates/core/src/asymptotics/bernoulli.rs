//! Bernoulli numbers and polynomials, `t e^{xt} / (e^t - 1) = Σ B_n(x) t^n / n!`.
//!
//! Coefficients are exact rationals; [`bernoulli_poly`] converts them at
//! the boundary.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::num::{rational_to_real, Real};

fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n {
        let next = &row[k] * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

/// `B_0..=B_n` with `B_1 = -1/2`.
pub fn bernoulli_numbers(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = vec![BigRational::one()];
    for m in 1..=n {
        // Σ_{j=0}^{m} C(m+1, j) B_j = 0
        let row = binomial_row(m + 1);
        let mut acc = BigRational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += BigRational::from_integer(row[j].clone()) * bj;
        }
        b.push(-acc / BigRational::from_integer(row[m].clone()));
    }
    b
}

/// Coefficients of `B_n(x)` in ascending powers of `x`.
pub fn bernoulli_poly_coeffs(n: usize) -> Vec<BigRational> {
    let b = bernoulli_numbers(n);
    let row = binomial_row(n);
    // B_n(x) = Σ_k C(n,k) B_k x^{n-k}
    (0..=n)
        .map(|power| BigRational::from_integer(row[power].clone()) * &b[n - power])
        .collect()
}

pub fn bernoulli_poly_exact(n: usize, x: &BigRational) -> BigRational {
    bernoulli_poly_coeffs(n)
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + c)
}

pub fn bernoulli_poly<T: Real>(n: usize, x: T) -> T {
    bernoulli_poly_coeffs(n)
        .iter()
        .rev()
        .fold(T::zero(), |acc, c| acc * x + rational_to_real::<T>(c))
}
