use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};

/// A finite, divisor-closed set of positive integers indexing Witt components.
///
/// Members are stored sorted; cloning is cheap.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncationSet(Arc<[u32]>);

impl TruncationSet {
    /// Builds a truncation set from arbitrary members, rejecting zero and any
    /// set that is not closed under taking divisors.
    pub fn new(members: impl IntoIterator<Item = u32>) -> Result<TruncationSet> {
        let mut ms: Vec<u32> = members.into_iter().collect();
        ms.sort_unstable();
        ms.dedup();
        if ms.first() == Some(&0) {
            return Err(AlgebraError::descriptor(
                "truncation sets hold positive integers",
            ));
        }
        for &n in &ms {
            for d in 1..n {
                if n % d == 0 && ms.binary_search(&d).is_err() {
                    return Err(AlgebraError::descriptor(format!(
                        "truncation set is not divisor-closed: {n} present, {d} missing"
                    )));
                }
            }
        }
        Ok(TruncationSet(ms.into()))
    }

    /// `{1, p, …, p^(len-1)}`.
    pub fn p_typical(p: u32, len: u32) -> Result<TruncationSet> {
        if !is_prime(p) {
            return Err(AlgebraError::descriptor(format!("{p} is not prime")));
        }
        let mut ms = Vec::with_capacity(len as usize);
        let mut q: u32 = 1;
        for i in 0..len {
            if i > 0 {
                q = q.checked_mul(p).ok_or_else(|| {
                    AlgebraError::descriptor(format!("p-typical length {len} overflows"))
                })?;
            }
            ms.push(q);
        }
        Ok(TruncationSet(ms.into()))
    }

    /// `{1, …, n}`.
    pub fn big(n: u32) -> TruncationSet {
        TruncationSet((1..=n).collect::<Vec<_>>().into())
    }

    /// Parses `1,2,4` or `[1,2,4]`.
    pub fn parse(text: &str) -> Result<TruncationSet> {
        let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
        if inner.trim().is_empty() {
            return TruncationSet::new([]);
        }
        let ms = inner
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<u32>()
                    .map_err(|_| AlgebraError::descriptor(format!("bad truncation member `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        TruncationSet::new(ms)
    }

    pub fn members(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, n: u32) -> bool {
        self.position(n).is_some()
    }

    pub fn position(&self, n: u32) -> Option<usize> {
        self.0.binary_search(&n).ok()
    }

    pub fn max(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn is_subset(&self, other: &TruncationSet) -> bool {
        self.0.iter().all(|&n| other.contains(n))
    }

    /// Members dividing `n`, ascending; `n` itself last when present.
    pub fn divisors_of(&self, n: u32) -> impl Iterator<Item = u32> + '_ {
        self.0
            .iter()
            .copied()
            .filter(move |&d| d <= n && n % d == 0)
    }

    /// `{m : m·k ∈ self}`, the index set of `F_k` applied to this truncation.
    pub fn quotient(&self, k: u32) -> TruncationSet {
        TruncationSet(
            self.0
                .iter()
                .filter(|&&n| n % k == 0)
                .map(|&n| n / k)
                .collect::<Vec<_>>()
                .into(),
        )
    }

    /// The prime `p` when this is `{1, p, …, p^n}` with `n ≥ 1`.
    pub fn typical_prime(&self) -> Option<u32> {
        let p = *self.0.get(1)?;
        let mut q = 1u64;
        for &n in self.0.iter() {
            if n as u64 != q {
                return None;
            }
            q *= p as u64;
        }
        is_prime(p).then_some(p)
    }

    /// Whether this is `{1, …, N}`.
    pub fn is_big(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &n)| n as usize == i + 1)
    }
}

impl fmt::Display for TruncationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{n}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for TruncationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}
