#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use plethora::partitions::partitions_of;
use plethora::symfunc::{Basis, CoeffRing, SymFunc};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A random integral function of degree at most `max_deg`, with a few terms
/// of each degree and coefficients in `-3..=3`.
pub fn random_symfunc(rng: &mut impl Rng, basis: Basis, max_deg: u32, constant: bool) -> SymFunc {
    let mut terms = Vec::new();
    if constant {
        terms.push((plethora::Partition::empty(), rat(rng.gen_range(-3..=3))));
    }
    for d in 1..=max_deg {
        let parts = partitions_of(d);
        for _ in 0..rng.gen_range(0..=2) {
            let lambda = parts[rng.gen_range(0..parts.len())].clone();
            terms.push((lambda, rat(rng.gen_range(-3..=3))));
        }
    }
    // keep the stated degree
    let top = partitions_of(max_deg);
    terms.push((
        top[rng.gen_range(0..top.len())].clone(),
        rat(rng.gen_range(1..=3)),
    ));
    SymFunc::from_terms(basis, CoeffRing::Integer, terms).unwrap()
}

pub fn random_basis(rng: &mut impl Rng) -> Basis {
    [
        Basis::Elementary,
        Basis::PowerSum,
        Basis::Witt,
        Basis::Monomial,
    ][rng.gen_range(0..4)]
}

/// [`random_symfunc`] in a random basis.
pub fn random_any(rng: &mut impl Rng, max_deg: u32, constant: bool) -> SymFunc {
    let basis = random_basis(rng);
    random_symfunc(rng, basis, max_deg, constant)
}
