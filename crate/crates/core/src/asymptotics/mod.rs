//! Log-space asymptotics: the partial theta expansion, Ingham's transfer,
//! the eta inversion, and the closed-form leading terms of p(n), σ and ς.

mod bernoulli;
mod eta;
mod formulas;
mod gamma;
mod ingham;
mod log_value;
mod ratios;
mod theta;

pub use bernoulli::{
    bernoulli_numbers, bernoulli_poly, bernoulli_poly_coeffs, bernoulli_poly_exact,
};
pub use eta::{eta_inversion_check, DEFAULT_FACTOR_CAP};
pub use formulas::{hardy_ramanujan_asymp, moment_asymp, sigma_asymp, varsigma_asymp};
pub use gamma::{gamma_half_integer, ln_gamma};
pub use ingham::{ingham_transfer, sigma_q_asymptotic, varsigma_q_asymptotic, InghamParams};
pub use log_value::{LogValue, Sign};
pub use ratios::{
    corollary_deviation, corollary_ratio, generating_function_ln_at, ratio_table, sigma_theta_at,
    theta_leading, varsigma_theta_at, write_ratio_csv, RatioRow,
};
pub use theta::{
    partial_theta_expansion, partial_theta_expansion_signed, partial_theta_sum, remainder_ratio,
    ExpansionSign,
};
