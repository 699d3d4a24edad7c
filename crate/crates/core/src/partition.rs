//! Integer partitions and the elementary statistics built on them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::factorial;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
    size: u32,
}

impl Partition {
    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::precondition("partition parts must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let size = parts.iter().sum();
        Ok(Partition { parts, size })
    }

    pub fn empty() -> Self {
        Partition {
            parts: Vec::new(),
            size: 0,
        }
    }

    /// The one-part partition `(d)`.
    pub fn single(d: u32) -> Self {
        Partition::new(vec![d]).expect("positive part")
    }

    /// `(1^d)`.
    pub fn ones(d: u32) -> Self {
        Partition {
            parts: vec![1; d as usize],
            size: d,
        }
    }

    /// The hook `(d-k, 1^k)`.
    pub fn hook(d: u32, k: u32) -> Self {
        assert!(k < d, "hook leg must be shorter than the size");
        let mut parts = vec![d - k];
        parts.extend(std::iter::repeat_n(1, k as usize));
        Partition { parts, size: d }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.size
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

    /// Part value to count.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn multiplicity(&self, part: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == part).count() as u32
    }

    /// `prod_i a_i!` over the multiplicities `a_i`.
    pub fn aut_order(&self) -> BigInt {
        aut_of_counts(self.multiplicities().values().copied())
    }

    pub fn parts_product(&self) -> BigInt {
        self.parts.iter().fold(BigInt::one(), |acc, &p| acc * p)
    }

    /// Size of the conjugacy class of cycle type `self` in `S_d`.
    pub fn conjugacy_class_size(&self) -> BigInt {
        factorial(self.size as u64) / (self.aut_order() * self.parts_product())
    }

    /// Transposed Young diagram.
    pub fn conjugate(&self) -> Partition {
        let Some(&first) = self.parts.first() else {
            return Partition::empty();
        };
        let parts = (1..=first)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count() as u32)
            .collect();
        Partition {
            parts,
            size: self.size,
        }
    }

    /// `S_{2j} = -1 + sum_i beta_i^{2j}`.
    pub fn shifted_power_sum(&self, two_j: u32) -> BigInt {
        assert!(
            two_j >= 2 && two_j.is_multiple_of(2),
            "shifted power sums use even positive exponents"
        );
        let sum: BigInt = self
            .parts
            .iter()
            .map(|&p| num_traits::pow(BigInt::from(p), two_j as usize))
            .sum();
        sum - 1
    }

    /// `c_1 = N_1 - 1`, `c_i = N_i` for `i >= 2`. `c_1` is reported even
    /// when it is zero or negative.
    pub fn hook_content_counts(&self) -> BTreeMap<u32, i64> {
        let mut c: BTreeMap<u32, i64> = self
            .multiplicities()
            .into_iter()
            .map(|(p, n)| (p, n as i64))
            .collect();
        *c.entry(1).or_insert(0) -= 1;
        c
    }

    /// Multiset union.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts).expect("union of partitions")
    }

    /// Removes one copy of `part`, if present.
    pub fn remove_part(&self, part: u32) -> Option<Partition> {
        let pos = self.parts.iter().position(|&p| p == part)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition {
            parts,
            size: self.size - part,
        })
    }

    pub fn add_part(&self, part: u32) -> Partition {
        let mut parts = self.parts.clone();
        parts.push(part);
        Partition::new(parts).expect("positive part")
    }

    /// Scales every part by `t`.
    pub fn scaled(&self, t: u32) -> Partition {
        Partition {
            parts: self.parts.iter().map(|&p| p * t).collect(),
            size: self.size * t,
        }
    }

    /// Every sub-multiset together with its complement, each distinct
    /// sub-multiset exactly once.
    pub fn splits(&self) -> Vec<(Partition, Partition)> {
        let counts: Vec<(u32, u32)> = self.multiplicities().into_iter().collect();
        let mut out = Vec::new();
        let mut chosen = vec![0u32; counts.len()];
        loop {
            let mut sub = Vec::new();
            let mut rest = Vec::new();
            for (i, &(part, n)) in counts.iter().enumerate() {
                sub.extend(std::iter::repeat_n(part, chosen[i] as usize));
                rest.extend(std::iter::repeat_n(part, (n - chosen[i]) as usize));
            }
            out.push((
                Partition::new(sub).expect("sub-multiset"),
                Partition::new(rest).expect("complement"),
            ));
            // odometer over multiplicities
            let mut i = 0;
            loop {
                if i == counts.len() {
                    return out;
                }
                if chosen[i] < counts[i].1 {
                    chosen[i] += 1;
                    break;
                }
                chosen[i] = 0;
                i += 1;
            }
        }
    }
}

pub(crate) fn aut_of_counts(counts: impl IntoIterator<Item = u32>) -> BigInt {
    counts
        .into_iter()
        .fold(BigInt::one(), |acc, n| acc * factorial(n as u64))
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts comma-separated positive integers in any order; the empty
    /// string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A weakly decreasing sequence of non-negative integers of a declared
/// length; zeros sit at the end.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PaddedPartition {
    parts: Vec<u32>,
}

impl PaddedPartition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        PaddedPartition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Zero counts as a part value.
    pub fn aut_order(&self) -> BigInt {
        let mut m: BTreeMap<u32, u32> = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        aut_of_counts(m.into_values())
    }
}

/// All partitions of `d` in reverse-lexicographic order, so
/// `(3) > (2,1) > (1,1,1)`.
pub fn partitions_of(d: u32) -> Vec<Partition> {
    fn go(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition {
                parts: cur.clone(),
                size: cur.iter().sum(),
            });
            return;
        }
        for p in (1..=max.min(rem)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, &mut Vec::new(), &mut out);
    out
}

/// All weakly decreasing non-negative sequences of length exactly `n`
/// summing to `s`, in reverse-lexicographic order.
pub fn padded_partitions(s: u32, n: usize) -> Vec<PaddedPartition> {
    partitions_of(s)
        .into_iter()
        .filter(|p| p.len() <= n)
        .map(|p| {
            let mut parts = p.parts;
            parts.resize(n, 0);
            PaddedPartition { parts }
        })
        .collect()
}
