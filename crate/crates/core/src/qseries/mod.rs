//! Exact truncated power series and the σ / ς generating functions.

mod generating;
mod moments;
mod series;

pub use generating::{
    euler_product, partition_numbers, sigma_gf_coeffs, sigma_theta, varsigma_gf_coeffs,
    varsigma_gf_coeffs_direct, varsigma_theta_direct, varsigma_theta_reformulated, MomentEngine,
    DEFAULT_TRUNCATION,
};
pub use moments::{MomentKind, MomentSequence};
pub use series::{SparseSeries, TruncatedSeries};
