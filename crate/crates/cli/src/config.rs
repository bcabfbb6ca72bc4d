//! Settings resolution: command-line flag, then config file, then the
//! `SMEX_*` environment variables, then built-in defaults.

use std::path::{Path, PathBuf};

use serde::Deserialize;
use smex_core::partitions::DEFAULT_ORACLE_CAP;
use smex_core::qseries::DEFAULT_TRUNCATION;
use smex_core::{MexParams, MomentKind};

use crate::cli::{Common, Format, Method, MomentArgs, Span};
use crate::error::CliError;

pub const TRUNCATION_ENV: &str = "SMEX_TRUNCATION";
pub const ORACLE_CAP_ENV: &str = "SMEX_ORACLE_CAP";

/// Flat key/value config file. Keys are the long flag names.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct FileConfig {
    pub kind: Option<String>,
    pub s: Option<u32>,
    #[serde(rename = "mod")]
    pub modulus: Option<u32>,
    #[serde(rename = "res")]
    pub residue: Option<u32>,
    pub r: Option<u32>,
    pub n: Option<usize>,
    pub range: Option<String>,
    pub method: Option<Method>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub trunc: Option<usize>,
    pub oracle_cap: Option<usize>,
    pub ns: Option<Vec<usize>>,
    #[serde(rename = "res-prime")]
    pub residue_prime: Option<u32>,
    pub max_mod: Option<u32>,
    pub max_s: Option<u32>,
    pub max_r: Option<u32>,
    pub max_n: Option<usize>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::io(path.display().to_string(), e))?;
        toml::from_str(&text)
            .map_err(|e| CliError::Validation(format!("config file {}: {e}", path.display())))
    }

    pub fn range(&self) -> Result<Option<Span>, CliError> {
        self.range
            .as_deref()
            .map(|s| {
                s.parse()
                    .map_err(|e| CliError::Validation(format!("config `range`: {e}")))
            })
            .transpose()
    }
}

fn env_usize(name: &str) -> Result<Option<usize>, CliError> {
    match std::env::var(name) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|e| CliError::Validation(format!("{name}={v}: {e}"))),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(CliError::Validation(format!("{name}: {e}"))),
    }
}

/// Everything a subcommand needs besides its own flags.
#[derive(Debug)]
pub struct Context {
    pub file: FileConfig,
    pub truncation: usize,
    pub oracle_cap: usize,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl Context {
    pub fn load(common: &Common) -> Result<Self, CliError> {
        let file = match &common.config {
            Some(path) => FileConfig::load(path)?,
            None => FileConfig::default(),
        };
        let truncation = match common.trunc.or(file.trunc) {
            Some(n) => n,
            None => env_usize(TRUNCATION_ENV)?.unwrap_or(DEFAULT_TRUNCATION),
        };
        let oracle_cap = match common.oracle_cap.or(file.oracle_cap) {
            Some(n) => n,
            None => env_usize(ORACLE_CAP_ENV)?.unwrap_or(DEFAULT_ORACLE_CAP),
        };
        Ok(Self {
            truncation,
            oracle_cap,
            format: common.format.or(file.format).unwrap_or(Format::Csv),
            out: common.out.clone().or_else(|| file.out.clone()),
            file,
        })
    }

    pub fn kind(&self, m: &MomentArgs) -> Result<MomentKind, CliError> {
        match (m.kind, &self.file.kind) {
            (Some(k), _) => Ok(k),
            (None, Some(k)) => k.parse().map_err(CliError::Validation),
            (None, None) => Ok(MomentKind::Sigma),
        }
    }

    pub fn params(&self, m: &MomentArgs) -> Result<MexParams, CliError> {
        let f = &self.file;
        Ok(MexParams::new(
            m.s.or(f.s).unwrap_or(1),
            m.modulus.or(f.modulus).unwrap_or(1),
            m.residue.or(f.residue).unwrap_or(1),
            m.r.or(f.r).unwrap_or(0),
        )?)
    }

    /// Refuses `n` beyond the truncation order.
    pub fn check_truncation(&self, n: usize) -> Result<(), CliError> {
        if n > self.truncation {
            return Err(CliError::Validation(format!(
                "n = {n} exceeds the truncation order N = {} (raise --trunc)",
                self.truncation
            )));
        }
        Ok(())
    }

    /// Refuses brute force beyond the oracle cap.
    pub fn check_oracle(&self, n: usize) -> Result<(), CliError> {
        if n > self.oracle_cap {
            return Err(CliError::ResourceCap(format!(
                "brute-force enumeration at n = {n} is above the oracle cap {} (raise --oracle-cap)",
                self.oracle_cap
            )));
        }
        Ok(())
    }
}
