use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{AlgebraError, Result};

const MAX_PREFIX: usize = 6;

/// A variable name: up to six lowercase letters followed by an optional
/// index, e.g. `x`, `x0`, `y12`, `theta2`.
///
/// Variables are packed into a `u64` whose integer order is the global
/// variable order: by prefix, then unindexed before indexed, then by index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(u64);

impl Var {
    pub fn new(prefix: &str, index: Option<u32>) -> Result<Var> {
        if prefix.is_empty()
            || prefix.len() > MAX_PREFIX
            || !prefix.bytes().all(|b| b.is_ascii_lowercase())
        {
            return Err(AlgebraError::parse(
                0,
                format!("invalid variable prefix `{prefix}`"),
            ));
        }
        let mut code = 0u64;
        for i in 0..MAX_PREFIX {
            let c = prefix
                .as_bytes()
                .get(i)
                .map_or(0, |b| (b - b'a' + 1) as u64);
            code = (code << 5) | c;
        }
        let idx = match index {
            Some(i) if i == u32::MAX => {
                return Err(AlgebraError::parse(0, "variable index too large"))
            }
            Some(i) => i as u64 + 1,
            None => 0,
        };
        Ok(Var((code << 32) | idx))
    }

    /// Shorthand for a valid indexed variable; panics on a malformed prefix.
    pub fn indexed(prefix: &str, index: u32) -> Var {
        Var::new(prefix, Some(index)).expect("valid variable prefix")
    }

    pub fn named(prefix: &str) -> Var {
        Var::new(prefix, None).expect("valid variable prefix")
    }

    /// Parses `x12`, `t`, `theta0`.
    pub fn parse(text: &str) -> Result<Var> {
        let split = text
            .find(|c: char| c.is_ascii_digit())
            .unwrap_or(text.len());
        let (prefix, digits) = text.split_at(split);
        let index = if digits.is_empty() {
            None
        } else {
            Some(digits.parse::<u32>().map_err(|_| {
                AlgebraError::parse(split, format!("invalid variable index in `{text}`"))
            })?)
        };
        Var::new(prefix, index)
    }

    pub fn prefix(&self) -> String {
        let code = self.0 >> 32;
        (0..MAX_PREFIX)
            .rev()
            .map(|i| ((code >> (5 * i)) & 31) as u8)
            .take_while(|&c| c != 0)
            .map(|c| (b'a' + c - 1) as char)
            .collect()
    }

    pub fn index(&self) -> Option<u32> {
        match self.0 & 0xffff_ffff {
            0 => None,
            i => Some((i - 1) as u32),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.prefix())?;
        if let Some(i) = self.index() {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Exponent vector with finite support, sorted by variable, no zero entries.
///
/// Ordered graded-lexicographically: higher total degree is greater, ties
/// broken by comparing exponents variable by variable in the global order
/// (so `x0` outranks `x1`).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[(Var, u32); 4]>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var) -> Monomial {
        Monomial::power(v, 1)
    }

    pub fn power(v: Var, exp: u32) -> Monomial {
        let mut m = Monomial::one();
        if exp > 0 {
            m.0.push((v, exp));
        }
        m
    }

    /// Builds a monomial from arbitrary `(var, exp)` pairs, merging repeats.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Monomial {
        pairs.into_iter().fold(Monomial::one(), |acc, (v, e)| {
            acc.mul(&Monomial::power(v, e))
        })
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&(_, e)| e as u64).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .binary_search_by_key(&v, |&(w, _)| w)
            .map_or(0, |i| self.0[i].1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.0.iter().copied()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn pow(&self, exp: u32) -> Monomial {
        if exp == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * exp)).collect())
    }

    /// Applies a variable renaming; the result is re-sorted and merged.
    pub fn rename(&self, f: impl Fn(Var) -> Var) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(v, e)| (f(v), e)))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (a, b) = (&self.0, &other.0);
            for (x, y) in a.iter().zip(b.iter()) {
                if x.0 != y.0 {
                    // the side holding the earlier variable has a positive
                    // exponent where the other has zero
                    return if x.0 < y.0 {
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    };
                }
                if x.1 != y.1 {
                    return x.1.cmp(&y.1);
                }
            }
            a.len().cmp(&b.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{v}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
