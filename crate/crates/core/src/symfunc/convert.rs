//! Base change between the m, e, p and w bases.
//!
//! Multiplicative bases convert by substituting each generator's expression
//! in the target basis. The generator tables come from
//! * Newton's identities between `e` and `p`,
//! * the divisor-sum relation `p_n = Σ_{d|n} d·w_d^{n/d}` between `p` and `w`,
//! * `Σ(-1)^n e_n t^n = Π(1 - w_n t^n)` between `e` and `w`.
//!
//! The monomial basis is reached from `e` and `p` by counting 0-1 matrices
//! and part-to-column assignments, and left through `e` by triangular
//! elimination against the dominance order.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Basis, CoeffRing, SymFunc};
use crate::error::{AlgebraError, Result};
use crate::partitions::{partitions_of, Partition};

/// Re-expresses `f` in `target`.
///
/// Over ℤ the result stays over ℤ for integral targets (a non-integral
/// coefficient there would be an internal fault and is reported as an
/// [`AlgebraError::Integrality`]); conversion into `p` yields ℚ coefficients
/// when needed. Functions over ℚ stay over ℚ.
pub fn change_basis(f: &SymFunc, target: Basis) -> Result<SymFunc> {
    if f.basis == target {
        return Ok(f.clone());
    }
    let converted = match (f.basis, target) {
        (Basis::Monomial, Basis::Elementary) => monomial_to_elementary(f),
        (Basis::Monomial, _) => convert_multiplicative(&monomial_to_elementary(f), target),
        (Basis::Witt, Basis::Monomial) => {
            to_monomial(&convert_multiplicative(f, Basis::Elementary))
        }
        (_, Basis::Monomial) => to_monomial(f),
        _ => convert_multiplicative(f, target),
    };
    match f.ring {
        CoeffRing::Rational => Ok(converted.to_rational()),
        CoeffRing::Integer if target.is_integral() => converted.integralize(),
        CoeffRing::Integer => Ok(converted.with_derived_ring()),
    }
}

type Table = Arc<Vec<SymFunc>>;

fn table_cache() -> &'static RwLock<HashMap<(Basis, Basis), Table>> {
    static CACHE: OnceLock<RwLock<HashMap<(Basis, Basis), Table>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `table[n]` is the source generator of degree `n` written in `target`
/// (`table[0]` is 1). Results are memoised; recomputation yields the same
/// values, so a lost race is harmless.
fn generators(source: Basis, target: Basis, upto: u32) -> Table {
    let key = (source, target);
    if let Some(t) = table_cache().read().expect("cache lock").get(&key) {
        if t.len() > upto as usize {
            return t.clone();
        }
    }
    let table = Arc::new(build_table(source, target, upto));
    let mut cache = table_cache().write().expect("cache lock");
    let entry = cache.entry(key).or_insert_with(|| table.clone());
    if entry.len() < table.len() {
        *entry = table.clone();
    }
    table
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn build_table(source: Basis, target: Basis, upto: u32) -> Vec<SymFunc> {
    let n_max = upto as usize;
    let one = SymFunc::constant(target, 1);
    let mut g: Vec<SymFunc> = vec![one];
    let gen = |k: u32| SymFunc::generator(target, k);
    for k in 1..=upto {
        let next = match (source, target) {
            (Basis::Elementary, Basis::PowerSum) => {
                // k e_k = Σ_{i=1}^k (-1)^{i-1} p_i e_{k-i}
                let mut acc = SymFunc::zero(target, CoeffRing::Rational);
                for i in 1..=k {
                    let sign = if i % 2 == 1 { 1 } else { -1 };
                    let t = gen(i)
                        .mul_multiplicative(&g[(k - i) as usize])
                        .scale_int(sign);
                    acc = acc.try_add(&t).expect("same basis");
                }
                acc.scale(&BigRational::new(BigInt::one(), BigInt::from(k)))
            }
            (Basis::PowerSum, Basis::Elementary) => {
                // p_k = Σ_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
                let sign_k = if k % 2 == 1 { 1 } else { -1 };
                let mut acc = gen(k).scale_int(sign_k * k as i64);
                for i in 1..k {
                    let sign = if i % 2 == 1 { 1 } else { -1 };
                    let t = gen(i)
                        .mul_multiplicative(&g[(k - i) as usize])
                        .scale_int(sign);
                    acc = acc.try_add(&t).expect("same basis");
                }
                acc
            }
            (Basis::PowerSum, Basis::Witt) => {
                let mut acc = SymFunc::zero(target, CoeffRing::Integer);
                for d in divisors(k) {
                    let lambda = Partition::new(vec![d; (k / d) as usize]).expect("positive");
                    acc.add_term(lambda, rat(d as i64));
                }
                acc
            }
            (Basis::Witt, Basis::PowerSum) | (Basis::Witt, Basis::Elementary) => {
                // k w_k = p_k - Σ_{d|k, d<k} d w_d^{k/d}
                let p_k = if target == Basis::PowerSum {
                    gen(k)
                } else {
                    generators(Basis::PowerSum, Basis::Elementary, k)[k as usize].clone()
                };
                let mut numer = p_k;
                for d in divisors(k).into_iter().filter(|&d| d < k) {
                    let pw = power(&g[d as usize], k / d).scale_int(d as i64);
                    numer = numer.try_sub(&pw).expect("same basis");
                }
                if target == Basis::PowerSum {
                    numer.scale(&BigRational::new(BigInt::one(), BigInt::from(k)))
                } else {
                    exact_div(&numer, k).expect("Witt generators are integral in e")
                }
            }
            (Basis::Elementary, Basis::Witt) => {
                // e_k = (-1)^k [t^k] Π_j (1 - w_j t^j): sum over partitions of
                // k into distinct parts.
                let mut acc = SymFunc::zero(target, CoeffRing::Integer);
                for lambda in partitions_of(k) {
                    let parts = lambda.parts();
                    if parts.windows(2).any(|w| w[0] == w[1]) {
                        continue;
                    }
                    let sign = if (k as usize + parts.len()) % 2 == 0 {
                        1
                    } else {
                        -1
                    };
                    acc.add_term(lambda, rat(sign));
                }
                acc
            }
            _ => unreachable!("no direct table from {source} to {target}"),
        };
        g.push(next);
    }
    debug_assert_eq!(g.len(), n_max + 1);
    g
}

fn power(f: &SymFunc, k: u32) -> SymFunc {
    let mut acc = SymFunc::constant(f.basis, 1);
    for _ in 0..k {
        acc = acc.mul_multiplicative(f);
    }
    acc
}

pub(crate) fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Divides every coefficient by `n`, asserting integrality.
fn exact_div(f: &SymFunc, n: u32) -> Result<SymFunc> {
    let n_big = BigInt::from(n);
    let mut out = SymFunc::zero(f.basis, f.ring);
    for (lambda, c) in f.terms() {
        let q = c / BigRational::from_integer(n_big.clone());
        if f.ring == CoeffRing::Integer && !q.is_integer() {
            let term = SymFunc::term(f.basis, lambda.clone(), c.clone());
            return Err(AlgebraError::integrality(term, n));
        }
        out.add_term(lambda.clone(), q);
    }
    Ok(out)
}

/// Substitutes generator expressions; both bases multiplicative.
fn convert_multiplicative(f: &SymFunc, target: Basis) -> SymFunc {
    if f.basis == target {
        return f.clone();
    }
    let table = generators(f.basis, target, f.degree());
    let mut powers: HashMap<(u32, u32), SymFunc> = HashMap::new();
    let mut out = SymFunc::zero(target, f.ring);
    for (lambda, c) in f.terms() {
        let mut term = SymFunc::constant(target, 1);
        for (part, mult) in lambda.multiplicities() {
            let pw = powers
                .entry((part, mult))
                .or_insert_with(|| power(&table[part as usize], mult));
            term = term.mul_multiplicative(pw);
        }
        for (l, v) in term.terms {
            out.add_term(l, v * c);
        }
    }
    out
}

/// Expresses an `e`- or `p`-basis function in the monomial basis.
fn to_monomial(f: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(Basis::Monomial, f.ring);
    for (mu, c) in f.terms() {
        for (lambda, count) in monomial_expansion(f.basis, mu) {
            out.add_term(lambda, c * BigRational::from_integer(count.into()));
        }
    }
    out
}

/// Coefficients of `b_μ` on the monomial basis, for `b ∈ {e, p}`.
pub(crate) fn monomial_expansion(basis: Basis, mu: &Partition) -> Vec<(Partition, u128)> {
    let mut memo = HashMap::new();
    partitions_of(mu.weight())
        .into_iter()
        .filter_map(|lambda| {
            let cols = lambda.parts().to_vec();
            let n = match basis {
                Basis::Elementary => count_01_matrices(mu.parts(), cols, &mut memo),
                Basis::PowerSum => count_assignments(mu.parts(), cols, &mut memo),
                _ => unreachable!(),
            };
            (n != 0).then_some((lambda, n))
        })
        .collect()
}

/// Number of 0-1 matrices with the given row sums and column sums.
fn count_01_matrices(
    rows: &[u32],
    mut cols: Vec<u32>,
    memo: &mut HashMap<(usize, Vec<u32>), u128>,
) -> u128 {
    cols.retain(|&c| c > 0);
    cols.sort_unstable_by(|a, b| b.cmp(a));
    let Some((&row, rest)) = rows.split_first() else {
        return u128::from(cols.is_empty());
    };
    if (row as usize) > cols.len() {
        return 0;
    }
    let key = (rows.len(), cols.clone());
    if let Some(&n) = memo.get(&key) {
        return n;
    }
    let mut total = 0;
    let mut chosen = Vec::with_capacity(row as usize);
    choose_columns(row as usize, 0, &cols, &mut chosen, &mut |picked| {
        let mut next = cols.clone();
        for &j in picked {
            next[j] -= 1;
        }
        total += count_01_matrices(rest, next, memo);
    });
    memo.insert(key, total);
    total
}

fn choose_columns(
    k: usize,
    start: usize,
    cols: &[u32],
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if chosen.len() == k {
        visit(chosen);
        return;
    }
    for j in start..cols.len() {
        if cols.len() - j < k - chosen.len() {
            break;
        }
        chosen.push(j);
        choose_columns(k, j + 1, cols, chosen, visit);
        chosen.pop();
    }
}

/// Number of ways to place each (labelled) part into a column so that the
/// column totals match `cols`.
fn count_assignments(
    parts: &[u32],
    mut cols: Vec<u32>,
    memo: &mut HashMap<(usize, Vec<u32>), u128>,
) -> u128 {
    cols.retain(|&c| c > 0);
    cols.sort_unstable_by(|a, b| b.cmp(a));
    let Some((&part, rest)) = parts.split_first() else {
        return u128::from(cols.is_empty());
    };
    let key = (parts.len(), cols.clone());
    if let Some(&n) = memo.get(&key) {
        return n;
    }
    let mut total = 0;
    for j in 0..cols.len() {
        if cols[j] >= part {
            let mut next = cols.clone();
            next[j] -= part;
            total += count_assignments(rest, next, memo);
        }
    }
    memo.insert(key, total);
    total
}

/// Triangular elimination: the leading monomial of `e_{λ'}` is `m_λ`.
fn monomial_to_elementary(f: &SymFunc) -> SymFunc {
    let mut remaining = f.clone();
    let mut out = SymFunc::zero(Basis::Elementary, f.ring);
    let mut cache: HashMap<Partition, Vec<(Partition, u128)>> = HashMap::new();
    while let Some((lambda, c)) = remaining
        .terms
        .iter()
        .next_back()
        .map(|(l, c)| (l.clone(), c.clone()))
    {
        let conj = lambda.conjugate();
        let expansion = cache
            .entry(conj.clone())
            .or_insert_with(|| monomial_expansion(Basis::Elementary, &conj));
        for (mu, count) in expansion.iter() {
            remaining.add_term(
                mu.clone(),
                -(&c * BigRational::from_integer((*count).into())),
            );
        }
        debug_assert!(remaining.coeff(&lambda).is_zero());
        out.add_term(conj, c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::test_support::*;
    use super::*;

    #[test]
    fn power_sum_two_in_elementary() {
        let p2 = SymFunc::generator(Basis::PowerSum, 2);
        let e = change_basis(&p2, Basis::Elementary).unwrap();
        assert_eq!(e, sf(Basis::Elementary, &[(1, &[1, 1]), (-2, &[2])]));
        assert_eq!(e.to_string(), "e[1]^2 - 2*e[2]");
    }

    #[test]
    fn power_sum_two_in_witt() {
        let p2 = SymFunc::generator(Basis::PowerSum, 2);
        let w = change_basis(&p2, Basis::Witt).unwrap();
        assert_eq!(w.to_string(), "w[1]^2 + 2*w[2]");
    }

    #[test]
    fn degree_one_bases_coincide() {
        for b in Basis::ALL {
            let g = SymFunc::generator(b, 1);
            for t in Basis::ALL {
                assert_eq!(change_basis(&g, t).unwrap(), SymFunc::generator(t, 1));
            }
        }
    }

    #[test]
    fn witt_two_is_minus_e_two() {
        let w2 = SymFunc::generator(Basis::Witt, 2);
        assert_eq!(
            change_basis(&w2, Basis::Elementary).unwrap(),
            sf(Basis::Elementary, &[(-1, &[2])])
        );
        let p = change_basis(&w2, Basis::PowerSum).unwrap();
        assert_eq!(p.to_string(), "-1/2*p[1]^2 + 1/2*p[2]");
        assert_eq!(p.ring(), CoeffRing::Rational);
    }

    #[test]
    fn elementary_to_monomial() {
        // e_2 e_1 = m_{21} + 3 m_{111}
        let f = sf(Basis::Elementary, &[(1, &[2, 1])]);
        let m = change_basis(&f, Basis::Monomial).unwrap();
        assert_eq!(m, sf(Basis::Monomial, &[(1, &[2, 1]), (3, &[1, 1, 1])]));
        // p_2 p_1 = m_3 + m_21
        let g = sf(Basis::PowerSum, &[(1, &[2, 1])]);
        let m = change_basis(&g, Basis::Monomial).unwrap();
        assert_eq!(m, sf(Basis::Monomial, &[(1, &[3]), (1, &[2, 1])]));
    }

    #[test]
    fn monomial_round_trips_through_elementary() {
        for n in 0..=6 {
            for lambda in partitions_of(n) {
                let m = SymFunc::basis_element(Basis::Monomial, lambda);
                let e = change_basis(&m, Basis::Elementary).unwrap();
                assert_eq!(change_basis(&e, Basis::Monomial).unwrap(), m);
            }
        }
    }

    #[test]
    fn rational_input_stays_rational() {
        let half_p2 = SymFunc::term(
            Basis::PowerSum,
            part(&[2]),
            BigRational::new(1.into(), 2.into()),
        );
        let e = change_basis(&half_p2, Basis::Elementary).unwrap();
        assert_eq!(e.ring(), CoeffRing::Rational);
        assert!(matches!(
            e.integralize(),
            Err(AlgebraError::Integrality { .. })
        ));
    }
}
