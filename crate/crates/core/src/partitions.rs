//! Exhaustive partition enumeration and the s-mex statistics.
//!
//! Everything here is brute force and serves as ground truth for the
//! generating-function layer in [`crate::qseries`].

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{ParamError, PartitionError};

/// Default upper bound on `n` for brute-force computations; p(60) is
/// just under a million partitions.
pub const DEFAULT_ORACLE_CAP: usize = 60;

/// A partition stored as weakly decreasing parts together with a dense
/// frequency table indexed by part size.
#[derive(Clone, PartialEq, Eq)]
pub struct Partition {
    parts: Vec<u32>,
    freq: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(PartitionError::NotDecreasing {
                    prev: w[0],
                    next: w[1],
                });
            }
        }
        if parts.last() == Some(&0) {
            return Err(PartitionError::NonPositivePart);
        }
        let largest = parts.first().copied().unwrap_or(0) as usize;
        let mut freq = vec![0; largest + 1];
        for &p in &parts {
            freq[p as usize] += 1;
        }
        Ok(Self { parts, freq })
    }

    pub fn empty() -> Self {
        Self {
            parts: Vec::new(),
            freq: vec![0],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// |π|, the sum of the parts.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    pub fn frequency(&self, part: u32) -> u32 {
        self.freq.get(part as usize).copied().unwrap_or(0)
    }

    /// `(part, frequency)` pairs in decreasing part order.
    pub fn frequencies(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (1..self.freq.len())
            .rev()
            .filter(|&k| self.freq[k] > 0)
            .map(|k| (k as u32, self.freq[k]))
    }

    fn push(&mut self, part: u32, count: u32) {
        let idx = part as usize;
        if idx >= self.freq.len() {
            self.freq.resize(idx + 1, 0);
        }
        self.freq[idx] += count;
        self.parts.extend(std::iter::repeat_n(part, count as usize));
    }

    fn pop_while_one(&mut self) -> u32 {
        let mut ones = 0;
        while self.parts.last() == Some(&1) {
            self.parts.pop();
            ones += 1;
        }
        if let Some(f) = self.freq.get_mut(1) {
            *f -= ones;
        }
        ones
    }

    fn pop(&mut self) -> Option<u32> {
        let p = self.parts.pop()?;
        self.freq[p as usize] -= 1;
        Some(p)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// The tuple `(s, M, A, r)`: frequency threshold, modulus, residue and
/// moment order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MexParams {
    s: u32,
    #[serde(rename = "M")]
    modulus: u32,
    #[serde(rename = "A")]
    residue: u32,
    r: u32,
}

impl MexParams {
    pub fn new(s: u32, modulus: u32, residue: u32, r: u32) -> Result<Self, ParamError> {
        if s == 0 {
            return Err(ParamError::ZeroFrequency);
        }
        if modulus == 0 {
            return Err(ParamError::ZeroModulus);
        }
        if residue == 0 || residue > modulus {
            return Err(ParamError::ResidueOutOfRange { residue, modulus });
        }
        Ok(Self {
            s,
            modulus,
            residue,
            r,
        })
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn residue(&self) -> u32 {
        self.residue
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn with_residue(&self, residue: u32) -> Result<Self, ParamError> {
        Self::new(self.s, self.modulus, residue, self.r)
    }

    /// Every valid tuple with `M <= max_modulus`, `s <= max_s`, `r <= max_r`,
    /// ordered by `(M, A, s, r)`.
    pub fn grid(max_modulus: u32, max_s: u32, max_r: u32) -> Vec<Self> {
        let mut out = Vec::new();
        for modulus in 1..=max_modulus {
            for residue in 1..=modulus {
                for s in 1..=max_s {
                    for r in 0..=max_r {
                        out.push(Self {
                            s,
                            modulus,
                            residue,
                            r,
                        });
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for MexParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "s={} M={} A={} r={}",
            self.s, self.modulus, self.residue, self.r
        )
    }
}

/// Partitions of `n` in descending lexicographic order.
///
/// [`Partitions::advance`] lends the current partition without cloning; the
/// `Iterator` impl clones.
pub struct Partitions {
    current: Partition,
    n: u32,
    started: bool,
    done: bool,
}

impl Partitions {
    pub fn new(n: u32) -> Self {
        Self {
            current: Partition::empty(),
            n,
            started: false,
            done: false,
        }
    }

    pub fn advance(&mut self) -> Option<&Partition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.n > 0 {
                self.current.push(self.n, 1);
            }
            return Some(&self.current);
        }
        let ones = self.current.pop_while_one();
        let Some(v) = self.current.pop() else {
            self.done = true;
            return None;
        };
        let total = ones + v;
        let size = v - 1;
        self.current.push(size, total / size);
        if !total.is_multiple_of(size) {
            self.current.push(total % size, 1);
        }
        Some(&self.current)
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        self.advance().cloned()
    }
}

pub fn enumerate_partitions(n: u32) -> Partitions {
    Partitions::new(n)
}

/// Smallest `k >= 1` whose frequency in `pi` is below `s`.
pub fn mex_s(pi: &Partition, s: u32) -> u32 {
    let mut k = 1;
    while pi.frequency(k) >= s {
        k += 1;
    }
    k
}

/// Smallest `k ≡ A (mod M)`, `k >= 1`, whose frequency in `pi` is below `s`.
pub fn mex_s_mod(pi: &Partition, s: u32, modulus: u32, residue: u32) -> u32 {
    let mut k = residue;
    while pi.frequency(k) >= s {
        k += modulus;
    }
    k
}

fn pow(base: u32, r: u32) -> BigUint {
    if r == 0 {
        return BigUint::one();
    }
    BigUint::from(base).pow(r)
}

/// σ: sum of `mex_s(π)^r` over partitions of `n` with `mex_s(π) ≡ A (mod M)`.
pub fn sigma_oracle(p: &MexParams, n: u32) -> BigUint {
    let mut total = BigUint::zero();
    let mut it = Partitions::new(n);
    while let Some(pi) = it.advance() {
        let m = mex_s(pi, p.s);
        if (m - 1) % p.modulus == p.residue - 1 {
            total += pow(m, p.r);
        }
    }
    total
}

/// ς: sum of `mex_{s;M,A}(π)^r` over all partitions of `n`.
pub fn varsigma_oracle(p: &MexParams, n: u32) -> BigUint {
    let mut total = BigUint::zero();
    let mut it = Partitions::new(n);
    while let Some(pi) = it.advance() {
        total += pow(mex_s_mod(pi, p.s, p.modulus, p.residue), p.r);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> Partition {
        Partition::new(vec![6, 4, 3, 3, 2, 2, 2, 1, 1]).unwrap()
    }

    fn parts_of(n: u32) -> Vec<Vec<u32>> {
        enumerate_partitions(n)
            .map(|p| p.parts().to_vec())
            .collect()
    }

    #[test]
    fn enumerates_zero_as_empty_partition() {
        assert_eq!(parts_of(0), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn enumerates_four_in_descending_lex_order() {
        assert_eq!(
            parts_of(4),
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn counts_thirty() {
        assert_eq!(enumerate_partitions(30).count(), 5604);
    }

    #[test]
    fn frequency_view_tracks_parts() {
        let mut it = Partitions::new(12);
        while let Some(pi) = it.advance() {
            assert_eq!(pi.weight(), 12);
            let fresh = Partition::new(pi.parts().to_vec()).unwrap();
            for k in 0..=13 {
                assert_eq!(pi.frequency(k), fresh.frequency(k), "{pi:?} at {k}");
            }
        }
    }

    #[test]
    fn rejects_malformed_parts() {
        assert_eq!(
            Partition::new(vec![1, 2]),
            Err(PartitionError::NotDecreasing { prev: 1, next: 2 })
        );
        assert_eq!(
            Partition::new(vec![2, 0]),
            Err(PartitionError::NonPositivePart)
        );
    }

    #[test]
    fn frequencies_lists_distinct_parts() {
        let f: Vec<_> = example().frequencies().collect();
        assert_eq!(f, vec![(6, 1), (4, 1), (3, 2), (2, 3), (1, 2)]);
    }

    #[test]
    fn mex_s_worked_example() {
        let pi = example();
        assert_eq!(mex_s(&pi, 1), 5);
        assert_eq!(mex_s(&pi, 2), 4);
        for s in 3..8 {
            assert_eq!(mex_s(&pi, s), 1);
        }
        assert_eq!(mex_s(&Partition::empty(), 4), 1);
    }

    #[test]
    fn mex_s_mod_worked_example() {
        let pi = example();
        let table = [
            (1, 1, 5),
            (1, 2, 8),
            (2, 1, 5),
            (2, 2, 4),
            (3, 1, 1),
            (3, 2, 4),
            (4, 1, 1),
            (4, 2, 2),
            (9, 2, 2),
        ];
        for (s, a, want) in table {
            assert_eq!(mex_s_mod(&pi, s, 2, a), want, "s={s} A={a}");
        }
        assert_eq!(mex_s_mod(&Partition::empty(), 2, 5, 3), 3);
    }

    #[test]
    fn params_validation() {
        assert_eq!(MexParams::new(0, 1, 1, 0), Err(ParamError::ZeroFrequency));
        assert_eq!(MexParams::new(1, 0, 1, 0), Err(ParamError::ZeroModulus));
        assert_eq!(
            MexParams::new(1, 3, 5, 0),
            Err(ParamError::ResidueOutOfRange {
                residue: 5,
                modulus: 3
            })
        );
        assert!(MexParams::new(1, 3, 0, 0).is_err());
        assert!(MexParams::new(2, 3, 3, 4).is_ok());
    }

    #[test]
    fn grid_size() {
        // 10 (M, A) pairs × 3 × 3
        assert_eq!(MexParams::grid(4, 3, 2).len(), 90);
    }

    #[test]
    fn sigma_oracle_small_values() {
        let p = MexParams::new(1, 2, 1, 0).unwrap();
        assert_eq!(sigma_oracle(&p, 4), BigUint::from(3u32));
        let p = MexParams::new(1, 2, 1, 1).unwrap();
        assert_eq!(sigma_oracle(&p, 4), BigUint::from(5u32));
        for s in 1..4 {
            for r in 0..3 {
                let one = MexParams::new(s, 3, 1, r).unwrap();
                assert_eq!(sigma_oracle(&one, 0), BigUint::one());
                let two = MexParams::new(s, 3, 2, r).unwrap();
                assert_eq!(sigma_oracle(&two, 0), BigUint::zero());
            }
        }
    }

    #[test]
    fn varsigma_oracle_small_values() {
        for (s, m, a) in [(1, 1, 1), (2, 3, 2), (3, 4, 4)] {
            let p = MexParams::new(s, m, a, 0).unwrap();
            assert_eq!(varsigma_oracle(&p, 4), BigUint::from(5u32));
        }
        let p = MexParams::new(1, 2, 2, 1).unwrap();
        assert_eq!(varsigma_oracle(&p, 3), BigUint::from(8u32));
        let p = MexParams::new(2, 5, 3, 3).unwrap();
        assert_eq!(varsigma_oracle(&p, 0), BigUint::from(27u32));
    }
}
