//! Partitions, dominant weights and their two coordinate systems.
//!
//! A dominant weight of `A_{N-1}` is a partition `(q_1 >= ... >= q_N >= 0)`
//! read in the permutation basis; the equivalent Dynkin labels are the
//! successive differences `a_i = q_i - q_{i+1}`.  Because the N basis vectors
//! sum to zero, subtracting the last part from every part leaves the weight
//! unchanged; we fix the representative with last part 0 as canonical.

use std::collections::HashSet;
use std::fmt;

use num::bigint::BigUint;
use num::One;

use crate::error::{Error, Result};

/// Non-increasing tuple of non-negative integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::arg(format!("parts not non-increasing: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn nonzero_len(&self) -> usize {
        self.0.iter().filter(|&&p| p != 0).count()
    }

    /// Same partition padded or truncated (zeros only) to exactly `n` parts.
    pub fn padded(&self, n: usize) -> Result<Partition> {
        if self.nonzero_len() > n {
            return Err(Error::arg(format!(
                "partition {self} has more than {n} non-zero parts"
            )));
        }
        let mut v = self.0.clone();
        v.resize(n, 0);
        v.truncate(n);
        Ok(Partition(v))
    }

    /// Drop trailing zero parts.
    pub fn stripped(&self) -> Partition {
        let mut v = self.0.clone();
        while v.last() == Some(&0) {
            v.pop();
        }
        Partition(v)
    }

    /// Add `k` to every part, keeping the length.
    pub fn lifted(&self, k: u32) -> Partition {
        Partition(self.0.iter().map(|&p| p + k).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// Canonical representative of `p` as an `A_{n-1}` dominant weight: pad to
/// `n` parts and subtract the minimal (last) part from every part.
pub fn canonicalize(p: &Partition, n: usize) -> Result<Partition> {
    let padded = p.padded(n)?;
    let last = *padded.parts().last().expect("n >= 1");
    Ok(Partition(
        padded.parts().iter().map(|&q| q - last).collect(),
    ))
}

/// Partition coordinates from Dynkin labels: `q_i = a_i + ... + a_{n-1}`,
/// `q_n = 0`.
pub fn dynkin_to_partition(n: usize, labels: &[u32]) -> Result<Partition> {
    if n < 2 {
        return Err(Error::arg("rank parameter n must be at least 2"));
    }
    if labels.len() != n - 1 {
        return Err(Error::arg(format!(
            "expected {} Dynkin labels, got {}",
            n - 1,
            labels.len()
        )));
    }
    let mut parts = vec![0u32; n];
    let mut acc = 0u32;
    for i in (0..n - 1).rev() {
        acc += labels[i];
        parts[i] = acc;
    }
    Ok(Partition(parts))
}

/// Dynkin labels of a partition with exactly `n` parts.
pub fn dynkin_labels(p: &Partition, n: usize) -> Result<Vec<u32>> {
    let padded = p.padded(n)?;
    Ok(padded.parts().windows(2).map(|w| w[0] - w[1]).collect())
}

/// A dominant weight of `A_{n-1}`, stored canonically (last part zero)
/// together with its Dynkin-label view.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DominantWeight {
    rank_n: usize,
    partition: Partition,
    dynkin: Vec<u32>,
}

impl DominantWeight {
    /// Canonicalizes `p`; shifts along the all-ones direction represent the
    /// same weight.
    pub fn from_partition(n: usize, p: &Partition) -> Result<Self> {
        if n < 2 {
            return Err(Error::arg("rank parameter n must be at least 2"));
        }
        let partition = canonicalize(p, n)?;
        let dynkin = dynkin_labels(&partition, n)?;
        Ok(DominantWeight {
            rank_n: n,
            partition,
            dynkin,
        })
    }

    pub fn from_dynkin(n: usize, labels: &[u32]) -> Result<Self> {
        let partition = dynkin_to_partition(n, labels)?;
        Ok(DominantWeight {
            rank_n: n,
            partition,
            dynkin: labels.to_vec(),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank_n
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn dynkin(&self) -> &[u32] {
        &self.dynkin
    }

    pub fn weight(&self) -> u32 {
        self.partition.weight()
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.partition)
    }
}

fn gen_exact(m: u32, t: usize, max_first: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if t == 1 {
        if m >= 1 && m <= max_first {
            prefix.push(m);
            out.push(prefix.clone());
            prefix.pop();
        }
        return;
    }
    let hi = max_first.min(m.saturating_sub(t as u32 - 1));
    let lo = m.div_ceil(t as u32);
    let mut p = hi;
    while p >= lo {
        prefix.push(p);
        gen_exact(m - p, t - 1, p, prefix, out);
        prefix.pop();
        if p == 0 {
            break;
        }
        p -= 1;
    }
}

/// All partitions of `m` into at most `max_parts` parts, each padded with
/// zeros to `max_parts` entries.
///
/// Order: by number of non-zero parts ascending, then lexicographically
/// descending — the order in which character tables are conventionally
/// listed.
pub fn partitions_of(m: u32, max_parts: usize) -> Result<Vec<Partition>> {
    if max_parts < 1 {
        return Err(Error::arg("max_parts must be at least 1"));
    }
    let mut out = Vec::new();
    if m == 0 {
        out.push(Partition(vec![0; max_parts]));
        return Ok(out);
    }
    let mut raw = Vec::new();
    for t in 1..=max_parts {
        gen_exact(m, t, m, &mut Vec::new(), &mut raw);
    }
    for mut v in raw {
        v.resize(max_parts, 0);
        out.push(Partition(v));
    }
    Ok(out)
}

/// The dominant weights below `m` times the first fundamental weight.
#[derive(Clone, Debug)]
pub struct SubSet {
    rank_n: usize,
    weight_m: u32,
    members: Vec<DominantWeight>,
}

impl SubSet {
    pub fn rank(&self) -> usize {
        self.rank_n
    }

    pub fn weight(&self) -> u32 {
        self.weight_m
    }

    pub fn members(&self) -> &[DominantWeight] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Canonical representatives of all dominant weights appearing in the
/// representation family of weight `m`: partitions of `m`, `m-n`, `m-2n`, ...
/// canonicalized and deduplicated, in block order.
pub fn sub_dominant_set(n: usize, m: u32) -> Result<SubSet> {
    if n < 2 {
        return Err(Error::arg("rank parameter n must be at least 2"));
    }
    let mut members = Vec::new();
    let mut seen = HashSet::new();
    let mut k = 0u32;
    while k * n as u32 <= m {
        let w = m - k * n as u32;
        for p in partitions_of(w, n)? {
            let c = canonicalize(&p, n)?;
            if seen.insert(c.clone()) {
                members.push(DominantWeight::from_partition(n, &c)?);
            }
        }
        k += 1;
    }
    Ok(SubSet {
        rank_n: n,
        weight_m: m,
        members,
    })
}

/// Number of distinct permutations of the parts of `p` padded to `n` entries:
/// `n! / prod_v (count of part value v)!`.
pub fn orbit_size(p: &Partition, n: usize) -> Result<BigUint> {
    let padded = p.padded(n)?;
    let mut size = BigUint::one();
    for i in 2..=n {
        size *= BigUint::from(i);
    }
    let mut run = 1usize;
    let parts = padded.parts();
    for i in 1..=n {
        if i < n && parts[i] == parts[i - 1] {
            run += 1;
        } else {
            for f in 2..=run {
                size /= BigUint::from(f);
            }
            run = 1;
        }
    }
    Ok(size)
}

/// Dominance order on partitions of equal weight: `upper` dominates `lower`
/// iff every prefix sum of `upper` is at least the corresponding prefix sum
/// of `lower`.  Partitions of different weight are incomparable.
pub fn dominates(upper: &Partition, lower: &Partition) -> bool {
    if upper.weight() != lower.weight() {
        return false;
    }
    let n = upper.len().max(lower.len());
    let mut su = 0u64;
    let mut sl = 0u64;
    for i in 0..n {
        su += *upper.parts().get(i).unwrap_or(&0) as u64;
        sl += *lower.parts().get(i).unwrap_or(&0) as u64;
        if su < sl {
            return false;
        }
    }
    true
}
