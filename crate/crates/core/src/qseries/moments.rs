use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::partitions::{self, MexParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MomentKind {
    /// Moments of the s-mex restricted to the residue class `A mod M`.
    Sigma,
    /// Moments of the s-mex taken within the residue class `A mod M`.
    Varsigma,
}

impl MomentKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            MomentKind::Sigma => "sigma",
            MomentKind::Varsigma => "varsigma",
        }
    }

    /// Brute-force value at `n`.
    pub fn oracle(&self, p: &MexParams, n: u32) -> BigUint {
        match self {
            MomentKind::Sigma => partitions::sigma_oracle(p, n),
            MomentKind::Varsigma => partitions::varsigma_oracle(p, n),
        }
    }
}

impl fmt::Display for MomentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MomentKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sigma" => Ok(MomentKind::Sigma),
            "varsigma" => Ok(MomentKind::Varsigma),
            other => Err(format!(
                "unknown moment kind `{other}` (expected sigma or varsigma)"
            )),
        }
    }
}

/// Exact moment values for `n = 0..=max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentSequence {
    params: MexParams,
    kind: MomentKind,
    values: Vec<BigUint>,
}

#[derive(Serialize)]
struct SequenceJson<'a> {
    params: &'a MexParams,
    kind: MomentKind,
    values: Vec<String>,
}

impl MomentSequence {
    pub fn new(params: MexParams, kind: MomentKind, values: Vec<BigUint>) -> Self {
        Self {
            params,
            kind,
            values,
        }
    }

    /// Brute-force sequence for `n = 0..=max_n`.
    pub fn from_oracle(params: MexParams, kind: MomentKind, max_n: u32) -> Self {
        let values = (0..=max_n).map(|n| kind.oracle(&params, n)).collect();
        Self::new(params, kind, values)
    }

    pub fn params(&self) -> &MexParams {
        &self.params
    }

    pub fn kind(&self) -> MomentKind {
        self.kind
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn value(&self, n: usize) -> Option<&BigUint> {
        self.values.get(n)
    }

    pub fn max_n(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    pub fn values_mut(&mut self) -> &mut Vec<BigUint> {
        &mut self.values
    }

    /// Smallest `n0` with `values[n0] <= values[n0+1] <= … <= values[max_n]`.
    pub fn nondecreasing_from(&self) -> usize {
        let mut n0 = self.max_n();
        while n0 > 0 && self.values[n0 - 1] <= self.values[n0] {
            n0 -= 1;
        }
        n0
    }

    /// CSV with a `# params:` comment line and an `n,value` header.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "# params: kind={} {}", self.kind, self.params)?;
        let mut out = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(w);
        out.write_record(["n", "value"])?;
        for (n, v) in self.values.iter().enumerate() {
            out.write_record([n.to_string(), v.to_string()])?;
        }
        out.flush()
    }

    /// JSON object `{params, kind, values}` with values as decimal strings.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&SequenceJson {
            params: &self.params,
            kind: self.kind,
            values: self.values.iter().map(|v| v.to_string()).collect(),
        })
        .expect("sequence serializes")
    }
}
