//! Generalized minimal-excludant (s-mex) partition statistics.
//!
//! The moments σ and ς are available three ways: by brute-force
//! enumeration ([`partitions`]), as exact generating-function coefficients
//! ([`qseries`]) and through their leading asymptotics ([`asymptotics`]).
//! [`conjectures`] scans exact sequences for log-concavity and residue
//! bias.
//!
//! Exact arithmetic is generic over a [`Coefficient`] ring and floating
//! point over a [`Real`] type; the aliases below fix the common choices.

pub mod asymptotics;
pub mod conjectures;
pub mod double_double;
pub mod error;
pub mod num;
pub mod partitions;
pub mod qseries;

pub use error::{AsymptoticError, ParamError, PartitionError, ScanError, SeriesError};
pub use num::{Coefficient, Real};
pub use partitions::{MexParams, Partition};
pub use qseries::{MomentEngine, MomentKind, MomentSequence, SparseSeries, TruncatedSeries};

pub use double_double::DoubleDouble;

/// Series over arbitrary-precision integers.
pub type IntSeries = TruncatedSeries<num_bigint::BigInt>;
/// Series over exact rationals.
pub type RationalSeries = TruncatedSeries<num_rational::BigRational>;
pub type LogValue64 = asymptotics::LogValue<f64>;
pub type LogValue32 = asymptotics::LogValue<f32>;
pub type LogValueDD = asymptotics::LogValue<DoubleDouble>;
pub type InghamParams64 = asymptotics::InghamParams<f64>;
