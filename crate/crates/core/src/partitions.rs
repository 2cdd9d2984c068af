//! Integer partitions, which index the bases of the ring of symmetric functions.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{AlgebraError, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The ordering is by weight first, then lexicographic on the parts, so
/// `() < (1) < (1,1) < (2) < (1,1,1) < (2,1) < (3)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    /// Sorts the given parts into a partition; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Partition> {
        if parts.contains(&0) {
            return Err(AlgebraError::parse(0, "partition parts must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn single(n: u32) -> Partition {
        assert!(n > 0, "partition parts must be positive");
        Partition(vec![n])
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

    /// Multiset union; `e_λ · e_μ = e_{λ∪μ}` in a multiplicative basis.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] >= b[j] {
                parts.push(a[i]);
                i += 1;
            } else {
                parts.push(b[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&a[i..]);
        parts.extend_from_slice(&b[j..]);
        Partition(parts)
    }

    /// Multiplies every part by `k`.
    pub fn scale(&self, k: u32) -> Partition {
        Partition(self.0.iter().map(|p| p * k).collect())
    }

    pub fn conjugate(&self) -> Partition {
        let Some(&first) = self.0.first() else {
            return Partition::empty();
        };
        Partition(
            (1..=first)
                .map(|i| self.0.iter().filter(|&&p| p >= i).count() as u32)
                .collect(),
        )
    }

    /// `(part, multiplicity)` pairs in increasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in self.0.iter().rev() {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Parses `[3,1,1]`; `[]` is the empty partition.
    pub fn parse(text: &str) -> Result<Partition> {
        let inner = text
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| AlgebraError::parse(0, format!("expected `[..]`, got `{text}`")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| AlgebraError::parse(0, format!("bad partition part `{p}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of `n` in reverse-lexicographic order: `(n)` first, `(1^n)` last.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}
