use thiserror::Error;

/// Invalid `(s, M, A, r)` tuple.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("frequency threshold s must be positive")]
    ZeroFrequency,
    #[error("modulus M must be positive")]
    ZeroModulus,
    #[error("residue A = {residue} must satisfy 0 < A <= M = {modulus}")]
    ResidueOutOfRange { residue: u32, modulus: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be positive")]
    NonPositivePart,
    #[error("parts must be weakly decreasing (found {prev} followed by {next})")]
    NotDecreasing { prev: u32, next: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series has no coefficients")]
    Empty,
    #[error("constant term must be +1 or -1 for exact inversion")]
    NonUnitConstant,
    #[error("negative coefficient at q^{0}")]
    NegativeCoefficient(usize),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AsymptoticError {
    #[error("{name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },
    #[error("t = {0} outside (0, 1]")]
    StepOutOfRange(f64),
    #[error("product needs {needed} factors, above the cap of {cap}")]
    FactorCapExceeded { needed: u64, cap: u64 },
    #[error("value at n = {0} is zero")]
    ZeroDenominator(usize),
    #[error("no value at n = {n}; sequence ends at {max_n}")]
    OutOfRange { n: usize, max_n: usize },
    #[error("sequences are not comparable: {0}")]
    Mismatched(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScanError {
    #[error("n_lo must be at least 1")]
    ZeroLowerBound,
    #[error("empty range [{lo}, {hi}]")]
    EmptyRange { lo: usize, hi: usize },
    #[error("value at n = {n} unavailable; sequence ends at {max_n}")]
    Unavailable { n: usize, max_n: usize },
    #[error("bias scan needs one sequence per residue 1..={modulus} sharing (kind, s, M, r)")]
    IncompleteResidues { modulus: u32 },
    #[error("residue classes of the 0th moment do not sum to p({0})")]
    PartitionOfUnity(usize),
}
