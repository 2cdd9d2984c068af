use std::fmt;

use num_bigint::BigInt;
use num_traits::Pow;

use super::trunc::TruncationSet;
use super::vector::{from_ghost, GhostVector, WittVector};
use crate::error::{AlgebraError, Result};

/// A p-typical Witt vector whose components are themselves p-typical Witt
/// vectors of a fixed inner length.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NestedWittVector {
    p: u32,
    outer: TruncationSet,
    components: Vec<WittVector>,
}

impl NestedWittVector {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn outer(&self) -> &TruncationSet {
        &self.outer
    }

    pub fn components(&self) -> &[WittVector] {
        &self.components
    }

    /// Outer ghost components `Σ_{i ≤ n} p^i·b_i^{p^(n−i)}`, computed with
    /// Witt-vector arithmetic in the inner ring.
    pub fn outer_ghost(&self) -> Result<Vec<WittVector>> {
        let mut out = Vec::with_capacity(self.components.len());
        for n in 0..self.components.len() {
            let mut acc = WittVector::zero(self.components[0].trunc(), self.components[0].ring());
            for (i, b) in self.components[..=n].iter().enumerate() {
                let e = self.p.pow((n - i) as u32);
                let term = b
                    .pow(e)?
                    .scale_int(Pow::pow(&BigInt::from(self.p), i as u32))?;
                acc = acc.try_add(&term)?;
            }
            out.push(acc);
        }
        Ok(out)
    }
}

impl fmt::Display for NestedWittVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// The Artin–Hasse map `W(R) → W(W(R))`, truncated to outer length `r` and
/// inner length `s`: the unique `b` with outer ghost `F_{p^n}(a)` for `n < r`.
///
/// Needs `a` p-typical for the given prime over a torsion-free ring with length at least
/// `r + s − 1`, so that every `F_{p^n}(a)` is known to inner length `s`.
pub fn artin_hasse(a: &WittVector, p: u32, r: u32, s: u32) -> Result<NestedWittVector> {
    // an explicit p, since the length-1 truncation [1] is p-typical for every p
    if *a.trunc() != TruncationSet::p_typical(p, a.trunc().len() as u32)? {
        return Err(AlgebraError::descriptor(format!(
            "{} is not a {p}-typical truncation",
            a.trunc()
        )));
    }
    if !a.ring().is_torsion_free() {
        return Err(AlgebraError::descriptor(format!(
            "Artin-Hasse needs a torsion-free ring, got {}",
            a.ring()
        )));
    }
    if r == 0 || s == 0 {
        return Err(AlgebraError::descriptor(
            "outer and inner lengths must be positive",
        ));
    }
    let len = a.trunc().len() as u32;
    if len + 1 < r + s {
        return Err(AlgebraError::Precision(format!(
            "outer length {r} and inner length {s} need a vector of length {}, got {len}",
            r + s - 1
        )));
    }
    let ring = a.ring();
    let inner = TruncationSet::p_typical(p, s)?;
    let ghost_a = a.ghost();
    let p_big = BigInt::from(p);

    // inner ghost coordinates of each b_i; the ghost map is injective here
    let mut ghosts: Vec<Vec<_>> = Vec::with_capacity(r as usize);
    let mut components = Vec::with_capacity(r as usize);
    for n in 0..r {
        let entries = (0..s)
            .map(|j| {
                let target = ghost_a.values()[(n + j) as usize].clone();
                let numer =
                    ghosts
                        .iter()
                        .enumerate()
                        .fold(target, |acc, (i, g): (usize, &Vec<_>)| {
                            let e = p.pow(n - i as u32) as u64;
                            let t =
                                ring.scale(&ring.pow(&g[j as usize], e), &(&p_big).pow(i as u32));
                            ring.sub(&acc, &t)
                        });
                let d = (&p_big).pow(n);
                ring.div_exact_int(&numer, &d).ok_or_else(|| {
                    AlgebraError::integrality(
                        format!("{} (outer {n}, inner ghost {j})", ring.format_value(&numer)),
                        &d,
                    )
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let b = from_ghost(&GhostVector::new(
            inner.clone(),
            ring.clone(),
            entries.clone(),
        )?)?;
        ghosts.push(entries);
        components.push(b);
    }
    Ok(NestedWittVector {
        p,
        outer: TruncationSet::p_typical(p, r)?,
        components,
    })
}
