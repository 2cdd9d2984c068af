use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, OnceLock, PoisonError, RwLock};

use num_bigint::BigInt;

use super::trunc::TruncationSet;
use crate::error::Result;
use crate::exactalg::{Monomial, MultiPoly, RingDescriptor, Var};

/// Integral polynomials giving addition, multiplication and negation on
/// `W_T`, one per member of `T`.
///
/// Component `n` involves only the variables `x_d`, `y_d` with `d | n`.
/// Variables are named by member: `x1, x2, x4, …` for a 2-typical set.
#[derive(Debug)]
pub struct StructPolys {
    trunc: TruncationSet,
    sum: Vec<MultiPoly>,
    product: Vec<MultiPoly>,
    negation: Vec<MultiPoly>,
}

impl StructPolys {
    pub fn trunc(&self) -> &TruncationSet {
        &self.trunc
    }

    pub fn sum(&self, n: u32) -> Option<&MultiPoly> {
        self.trunc.position(n).map(|i| &self.sum[i])
    }

    pub fn product(&self, n: u32) -> Option<&MultiPoly> {
        self.trunc.position(n).map(|i| &self.product[i])
    }

    pub fn negation(&self, n: u32) -> Option<&MultiPoly> {
        self.trunc.position(n).map(|i| &self.negation[i])
    }

    pub(crate) fn sums(&self) -> &[MultiPoly] {
        &self.sum
    }

    pub(crate) fn products(&self) -> &[MultiPoly] {
        &self.product
    }

    pub(crate) fn negations(&self) -> &[MultiPoly] {
        &self.negation
    }
}

/// The `x` or `y` variable attached to member `n`.
pub fn witt_var(prefix: &str, n: u32) -> Var {
    Var::indexed(prefix, n)
}

/// `Σ_{d | n} d·x_d^{n/d}` over the members of `t`, with variables named by
/// `prefix`.
pub fn ghost_poly(t: &TruncationSet, prefix: &str, n: u32) -> MultiPoly {
    let zz = RingDescriptor::Integer;
    let mut out = MultiPoly::zero(&zz);
    for d in t.divisors_of(n) {
        let m = Monomial::power(witt_var(prefix, d), n / d);
        out = &out + &MultiPoly::monomial(&zz, m, zz.from_i64(d as i64));
    }
    out
}

/// Solves `Σ_{d | n} d·W_d^{n/d} = target(n)` for `W` over ℤ, member by
/// member. Each division by `n` is exact or fails with an integrality error.
pub(crate) fn invert_ghost(
    t: &TruncationSet,
    mut target: impl FnMut(u32) -> MultiPoly,
) -> Result<Vec<MultiPoly>> {
    let mut out: Vec<MultiPoly> = Vec::with_capacity(t.len());
    let mut powers: HashMap<(usize, u32), MultiPoly> = HashMap::new();
    for &n in t.members() {
        let mut numer = target(n);
        for d in t.divisors_of(n).filter(|&d| d < n) {
            let i = t.position(d).expect("divisor-closed");
            let pw = power_cached(&mut powers, &out[i], i, n / d);
            numer = &numer - &pw.scale_int(d as i64);
        }
        out.push(numer.exact_div_int(&BigInt::from(n))?);
    }
    Ok(out)
}

fn power_cached(
    cache: &mut HashMap<(usize, u32), MultiPoly>,
    base: &MultiPoly,
    key: usize,
    exp: u32,
) -> MultiPoly {
    if let Some(p) = cache.get(&(key, exp)) {
        return p.clone();
    }
    // reuse the largest cached smaller power of the same base
    let (start, mut acc) = (1..exp)
        .rev()
        .find_map(|e| cache.get(&(key, e)).map(|p| (e, p.clone())))
        .unwrap_or((1, base.clone()));
    cache.insert((key, start), acc.clone());
    for e in start + 1..=exp {
        acc = &acc * base;
        cache.insert((key, e), acc.clone());
    }
    acc
}

/// Computes the structure polynomials of `t` afresh, bypassing the cache
/// behind [`structure_polys`].
pub fn compute_structure_polys(t: &TruncationSet) -> Result<StructPolys> {
    let sum = invert_ghost(t, |n| &ghost_poly(t, "x", n) + &ghost_poly(t, "y", n))?;
    let product = invert_ghost(t, |n| &ghost_poly(t, "x", n) * &ghost_poly(t, "y", n))?;
    let negation = invert_ghost(t, |n| -&ghost_poly(t, "x", n))?;
    Ok(StructPolys {
        trunc: t.clone(),
        sum,
        product,
        negation,
    })
}

type Cell<V> = Arc<OnceLock<V>>;
type Table<K, V> = OnceLock<RwLock<HashMap<K, Cell<V>>>>;

/// Looks `key` up in a process-wide table, computing the value at most once
/// per key. Readers never block on an unrelated key's computation.
fn cached<K: Hash + Eq + Clone, V: Clone>(
    table: &Table<K, V>,
    key: &K,
    init: impl FnOnce() -> V,
) -> V {
    let map = table.get_or_init(Default::default);
    let existing = map
        .read()
        .unwrap_or_else(PoisonError::into_inner)
        .get(key)
        .cloned();
    let cell = existing.unwrap_or_else(|| {
        map.write()
            .unwrap_or_else(PoisonError::into_inner)
            .entry(key.clone())
            .or_default()
            .clone()
    });
    cell.get_or_init(init).clone()
}

/// Structure polynomials for `t`, computed once per truncation set and
/// shared thereafter.
pub fn structure_polys(t: &TruncationSet) -> Result<Arc<StructPolys>> {
    static TABLE: Table<TruncationSet, Result<Arc<StructPolys>>> = OnceLock::new();
    cached(&TABLE, t, || compute_structure_polys(t).map(Arc::new))
}

/// Integral polynomials for `F_k : W_t → W_{t/k}`, indexed by the members
/// of `t.quotient(k)`, in the variables `x_d` of `t`.
pub fn frobenius_polys(t: &TruncationSet, k: u32) -> Result<Arc<Vec<MultiPoly>>> {
    static TABLE: Table<(TruncationSet, u32), Result<Arc<Vec<MultiPoly>>>> = OnceLock::new();
    cached(&TABLE, &(t.clone(), k), || {
        let q = t.quotient(k);
        invert_ghost(&q, |m| ghost_poly(t, "x", m * k)).map(Arc::new)
    })
}
