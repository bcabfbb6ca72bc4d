use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use smex_core::MomentKind;

#[derive(Debug, Parser)]
#[command(
    name = "smex",
    version,
    about = "Exact and asymptotic s-mex partition moments"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact moment values by brute force, generating function, or both.
    Stats(StatsArgs),
    /// Cross-check generating-function coefficients against brute force over a grid.
    Verify(VerifyArgs),
    /// Exact-to-asymptotic ratios, or ratios between two residue classes.
    Asymp(AsympArgs),
    /// Empirical scans for log-concavity and residue bias.
    Conjecture(ConjectureArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Oracle,
    Gf,
    Both,
}

/// Inclusive `a:b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub lo: usize,
    pub hi: usize,
}

impl std::str::FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s
            .split_once(':')
            .ok_or_else(|| format!("expected a range LO:HI, got `{s}`"))?;
        let parse = |x: &str| {
            x.trim()
                .parse::<usize>()
                .map_err(|e| format!("bad range bound `{x}`: {e}"))
        };
        let (lo, hi) = (parse(a)?, parse(b)?);
        if lo > hi {
            return Err(format!("empty range {lo}:{hi}"));
        }
        Ok(Span { lo, hi })
    }
}

fn parse_kind(s: &str) -> Result<MomentKind, String> {
    s.parse()
}

/// Options shared by every subcommand.
#[derive(Debug, Clone, Default, Args)]
pub struct Common {
    /// Flat TOML file of defaults; command-line flags override it.
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Write the result here (plus a PATH.meta.json sidecar) instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Series truncation order N [env: SMEX_TRUNCATION, default 4096].
    #[arg(long, value_name = "N")]
    pub trunc: Option<usize>,
    /// Largest n for brute-force enumeration [env: SMEX_ORACLE_CAP, default 60].
    #[arg(long, value_name = "N")]
    pub oracle_cap: Option<usize>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct MomentArgs {
    /// sigma or varsigma [default: sigma].
    #[arg(long, value_parser = parse_kind)]
    pub kind: Option<MomentKind>,
    /// Frequency threshold s [default: 1].
    #[arg(long)]
    pub s: Option<u32>,
    /// Modulus M [default: 1].
    #[arg(long = "mod", value_name = "M")]
    pub modulus: Option<u32>,
    /// Residue A with 0 < A <= M [default: 1].
    #[arg(long = "res", value_name = "A")]
    pub residue: Option<u32>,
    /// Moment order r [default: 0].
    #[arg(long)]
    pub r: Option<u32>,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    #[command(flatten)]
    pub moment: MomentArgs,
    /// A single n.
    #[arg(long, conflicts_with = "range")]
    pub n: Option<usize>,
    /// Inclusive range LO:HI.
    #[arg(long)]
    pub range: Option<Span>,
    /// [default: gf]
    #[arg(long, value_enum)]
    pub method: Option<Method>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// [default: 4]
    #[arg(long)]
    pub max_mod: Option<u32>,
    /// [default: 3]
    #[arg(long)]
    pub max_s: Option<u32>,
    /// [default: 2]
    #[arg(long)]
    pub max_r: Option<u32>,
    /// [default: 30]
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Test hook: perturb one generating-function coefficient.
    #[arg(long, hide = true)]
    pub inject_corruption: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct AsympArgs {
    #[command(flatten)]
    pub moment: MomentArgs,
    /// Comma-separated n values [default: 500,1000,2000,4096].
    #[arg(long, value_delimiter = ',')]
    pub ns: Option<Vec<usize>>,
    /// Compare residue A against A' instead of against the asymptotic.
    #[arg(long = "res-prime", value_name = "A'")]
    pub residue_prime: Option<u32>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct ConjectureArgs {
    #[command(subcommand)]
    pub scan: Scan,
}

#[derive(Debug, Subcommand)]
pub enum Scan {
    /// Check a(n)² > a(n-1)·a(n+1) for n in LO..HI-1.
    Logconcave(ScanArgs),
    /// Order the residues 1..=M by moment value at each n in LO..=HI.
    Bias(ScanArgs),
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub moment: MomentArgs,
    /// Inclusive range LO:HI [default: 1:100].
    #[arg(long)]
    pub range: Option<Span>,
    #[command(flatten)]
    pub common: Common,
}
