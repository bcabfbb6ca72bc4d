//! Empirical scans for eventual log-concavity and residue bias.
//!
//! All comparisons are exact. "Stabilized" always means stabilized within
//! the scanned range; it is evidence, not proof.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::ScanError;
use crate::partitions::MexParams;
use crate::qseries::{partition_numbers, MomentEngine, MomentKind, MomentSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanKind {
    LogConcavity,
    Bias,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanParams {
    pub kind: MomentKind,
    pub s: u32,
    #[serde(rename = "M")]
    pub modulus: u32,
    /// Absent for bias scans, which cover every residue.
    #[serde(rename = "A", skip_serializing_if = "Option::is_none", default)]
    pub residue: Option<u32>,
    pub r: u32,
}

/// Residues `1..=M` sorted by moment value at `n`, ties broken by ascending
/// residue. `ties[i]` marks `perm[i]` and `perm[i+1]` as equal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderingEntry {
    pub n: usize,
    pub perm: Vec<u32>,
    pub ties: Vec<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub scan: ScanKind,
    pub params: ScanParams,
    pub range: [usize; 2],
    /// Every `n` where the strict inequality fails (log-concavity only).
    pub violations: Vec<usize>,
    /// The subset of `violations` where equality holds.
    pub equalities: Vec<usize>,
    pub ordering: Vec<OrderingEntry>,
    pub stabilized_at: Option<usize>,
}

impl ScanReport {
    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn all_ties(&self) -> bool {
        self.ordering.iter().all(|e| e.ties.iter().all(|&t| t))
    }
}

fn value_at(seq: &MomentSequence, n: usize) -> Result<&BigUint, ScanError> {
    seq.value(n).ok_or(ScanError::Unavailable {
        n,
        max_n: seq.max_n(),
    })
}

/// Checks `a(n)² > a(n-1)·a(n+1)` for `n` in `[n_lo, n_hi - 1]`.
pub fn scan_log_concavity(
    seq: &MomentSequence,
    n_lo: usize,
    n_hi: usize,
) -> Result<ScanReport, ScanError> {
    if n_lo == 0 {
        return Err(ScanError::ZeroLowerBound);
    }
    if n_hi < n_lo {
        return Err(ScanError::EmptyRange { lo: n_lo, hi: n_hi });
    }
    value_at(seq, n_hi)?;
    let mut violations = Vec::new();
    let mut equalities = Vec::new();
    for n in n_lo..n_hi {
        let mid = value_at(seq, n)?;
        let lhs = mid * mid;
        let rhs = value_at(seq, n - 1)? * value_at(seq, n + 1)?;
        if lhs <= rhs {
            violations.push(n);
            if lhs == rhs {
                equalities.push(n);
            }
        }
    }
    let stabilized_at = match violations.last() {
        None => Some(n_lo),
        Some(&v) if v + 1 < n_hi => Some(v + 1),
        Some(_) => None,
    };
    let p = seq.params();
    Ok(ScanReport {
        scan: ScanKind::LogConcavity,
        params: ScanParams {
            kind: seq.kind(),
            s: p.s(),
            modulus: p.modulus(),
            residue: Some(p.residue()),
            r: p.r(),
        },
        range: [n_lo, n_hi],
        violations,
        equalities,
        ordering: Vec::new(),
        stabilized_at,
    })
}

/// Orders the residues `1..=M` by moment value at each `n` in `[n_lo, n_hi]`.
///
/// `sequences` must hold one sequence per residue, all sharing
/// `(kind, s, M, r)`. For σ with `r = 0` the residue classes must add up
/// to p(n), which is checked at every scanned `n`.
pub fn scan_bias(
    sequences: &[MomentSequence],
    n_lo: usize,
    n_hi: usize,
) -> Result<ScanReport, ScanError> {
    let first = sequences
        .first()
        .ok_or(ScanError::IncompleteResidues { modulus: 0 })?;
    let (kind, fp) = (first.kind(), *first.params());
    let modulus = fp.modulus();
    let mut by_residue: Vec<&MomentSequence> = sequences.iter().collect();
    by_residue.sort_by_key(|s| s.params().residue());
    let complete = by_residue.len() == modulus as usize
        && by_residue.iter().enumerate().all(|(i, s)| {
            let p = s.params();
            s.kind() == kind
                && p.residue() == i as u32 + 1
                && (p.s(), p.modulus(), p.r()) == (fp.s(), modulus, fp.r())
        });
    if !complete {
        return Err(ScanError::IncompleteResidues { modulus });
    }
    if n_hi < n_lo {
        return Err(ScanError::EmptyRange { lo: n_lo, hi: n_hi });
    }
    for s in &by_residue {
        value_at(s, n_hi)?;
    }
    let unity = (kind == MomentKind::Sigma && fp.r() == 0).then(|| partition_numbers(n_hi));

    let mut ordering = Vec::with_capacity(n_hi - n_lo + 1);
    for n in n_lo..=n_hi {
        let values: Vec<&BigUint> = by_residue.iter().map(|s| &s.values()[n]).collect();
        if let Some(p) = &unity {
            let total: BigUint = values.iter().copied().sum();
            if total != p[n] {
                return Err(ScanError::PartitionOfUnity(n));
            }
        }
        let mut perm: Vec<u32> = (1..=modulus).collect();
        // stable: equal values keep ascending residue order
        perm.sort_by(|&a, &b| values[a as usize - 1].cmp(values[b as usize - 1]));
        let ties = perm
            .windows(2)
            .map(|w| values[w[0] as usize - 1] == values[w[1] as usize - 1])
            .collect();
        ordering.push(OrderingEntry { n, perm, ties });
    }

    let mut start = ordering.len() - 1;
    while start > 0
        && ordering[start - 1].perm == ordering[start].perm
        && ordering[start - 1].ties == ordering[start].ties
    {
        start -= 1;
    }
    let run_start = ordering[start].n;
    let stabilized_at = (run_start < n_hi || n_lo == n_hi).then_some(run_start);

    Ok(ScanReport {
        scan: ScanKind::Bias,
        params: ScanParams {
            kind,
            s: fp.s(),
            modulus,
            residue: None,
            r: fp.r(),
        },
        range: [n_lo, n_hi],
        violations: Vec::new(),
        equalities: Vec::new(),
        ordering,
        stabilized_at,
    })
}

/// The `M` sequences `A = 1..=M` that [`scan_bias`] expects.
pub fn residue_sequences(
    engine: &MomentEngine,
    kind: MomentKind,
    s: u32,
    modulus: u32,
    r: u32,
) -> Result<Vec<MomentSequence>, crate::error::ParamError> {
    (1..=modulus)
        .map(|a| MexParams::new(s, modulus, a, r).map(|p| engine.moments(&p, kind)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(values: &[u32], residue: u32, modulus: u32) -> MomentSequence {
        MomentSequence::new(
            MexParams::new(1, modulus, residue, 1).unwrap(),
            MomentKind::Sigma,
            values.iter().map(|&v| BigUint::from(v)).collect(),
        )
    }

    #[test]
    fn zero_prefix_counts_as_equality_violations() {
        let s = seq(&[0, 0, 0, 1, 3, 6, 10, 15], 3, 3);
        let report = scan_log_concavity(&s, 1, 7).unwrap();
        assert_eq!(report.violations, vec![1, 2]);
        assert_eq!(report.equalities, vec![1, 2]);
        assert_eq!(report.stabilized_at, Some(3));
    }

    #[test]
    fn strict_failure_is_not_an_equality() {
        let s = seq(&[1, 1, 5, 6], 1, 1);
        let report = scan_log_concavity(&s, 1, 3).unwrap();
        assert_eq!(report.violations, vec![1]);
        assert!(report.equalities.is_empty());
        assert_eq!(report.stabilized_at, Some(2));
        let report = scan_log_concavity(&s, 1, 2).unwrap();
        assert_eq!(report.stabilized_at, None);
    }

    #[test]
    fn log_concavity_range_errors() {
        let s = seq(&[1, 2, 3], 1, 1);
        assert_eq!(scan_log_concavity(&s, 0, 2), Err(ScanError::ZeroLowerBound));
        assert_eq!(
            scan_log_concavity(&s, 1, 3),
            Err(ScanError::Unavailable { n: 3, max_n: 2 })
        );
        assert!(scan_log_concavity(&s, 2, 1).is_err());
    }

    #[test]
    fn bias_ordering_with_ties() {
        let a1 = seq(&[5, 1, 2], 1, 3);
        let a2 = seq(&[5, 3, 2], 2, 3);
        let a3 = seq(&[1, 2, 2], 3, 3);
        let report = scan_bias(&[a3, a1, a2], 0, 2).unwrap();
        assert_eq!(report.ordering[0].perm, vec![3, 1, 2]);
        assert_eq!(report.ordering[0].ties, vec![false, true]);
        assert_eq!(report.ordering[1].perm, vec![1, 3, 2]);
        assert_eq!(report.ordering[2].perm, vec![1, 2, 3]);
        assert_eq!(report.ordering[2].ties, vec![true, true]);
        assert_eq!(report.stabilized_at, None);
    }

    #[test]
    fn bias_requires_every_residue() {
        let a1 = seq(&[1, 2], 1, 3);
        let a2 = seq(&[1, 2], 2, 3);
        assert_eq!(
            scan_bias(&[a1.clone(), a2], 0, 1),
            Err(ScanError::IncompleteResidues { modulus: 3 })
        );
        assert!(scan_bias(&[], 0, 1).is_err());
        assert!(scan_bias(&[a1.clone(), a1.clone(), a1], 0, 1).is_err());
    }

    #[test]
    fn modulus_one_is_trivial() {
        let engine = MomentEngine::new(50);
        let seqs = residue_sequences(&engine, MomentKind::Sigma, 2, 1, 1).unwrap();
        let report = scan_bias(&seqs, 1, 50).unwrap();
        assert!(report
            .ordering
            .iter()
            .all(|e| e.perm == vec![1] && e.ties.is_empty()));
        assert_eq!(report.stabilized_at, Some(1));
    }

    #[test]
    fn partition_of_unity_is_enforced() {
        let engine = MomentEngine::new(30);
        let mut seqs = residue_sequences(&engine, MomentKind::Sigma, 1, 2, 0).unwrap();
        assert!(scan_bias(&seqs, 0, 30).is_ok());
        seqs[1].values_mut()[17] += 1u32;
        assert_eq!(
            scan_bias(&seqs, 0, 30),
            Err(ScanError::PartitionOfUnity(17))
        );
    }
}
