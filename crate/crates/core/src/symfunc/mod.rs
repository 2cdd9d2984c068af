//! The ring Λ of symmetric functions in countably many variables.
//!
//! A [`SymFunc`] is a finite linear combination of basis elements indexed by
//! partitions. Four bases are supported: monomial `m`, elementary `e`, power
//! sum `p` and Witt `w`. The last three are multiplicative (`b_λ = Π b_{λ_i}`);
//! `e` and `w` are integral bases, `p` only spans Λ over ℚ.

mod bialgebra;
mod convert;
mod expand;
mod plethysm;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, Result};
use crate::exactalg::{format_rational, RingDescriptor};
use crate::partitions::Partition;

pub use bialgebra::{
    additive_subspace, coaddition_image, comultiplication_image, cotangent_reduce, counit_plus,
    counit_times, is_additive,
};
pub use convert::change_basis;
pub use expand::{evaluate, expand, from_polynomial, EXACT_VARS_PER_DEGREE};
pub use plethysm::plethysm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Monomial,
    Elementary,
    PowerSum,
    Witt,
}

impl Basis {
    pub const ALL: [Basis; 4] = [
        Basis::Monomial,
        Basis::Elementary,
        Basis::PowerSum,
        Basis::Witt,
    ];

    pub fn symbol(self) -> char {
        match self {
            Basis::Monomial => 'm',
            Basis::Elementary => 'e',
            Basis::PowerSum => 'p',
            Basis::Witt => 'w',
        }
    }

    pub fn from_symbol(c: char) -> Option<Basis> {
        match c {
            'm' => Some(Basis::Monomial),
            'e' => Some(Basis::Elementary),
            'p' => Some(Basis::PowerSum),
            'w' => Some(Basis::Witt),
            _ => None,
        }
    }

    pub fn is_multiplicative(self) -> bool {
        self != Basis::Monomial
    }

    /// Whether the basis spans Λ over ℤ.
    pub fn is_integral(self) -> bool {
        self != Basis::PowerSum
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoeffRing {
    Integer,
    Rational,
}

impl CoeffRing {
    pub fn join(self, other: CoeffRing) -> CoeffRing {
        if self == CoeffRing::Integer && other == CoeffRing::Integer {
            CoeffRing::Integer
        } else {
            CoeffRing::Rational
        }
    }

    pub fn descriptor(self) -> RingDescriptor {
        match self {
            CoeffRing::Integer => RingDescriptor::Integer,
            CoeffRing::Rational => RingDescriptor::Rational,
        }
    }
}

/// A symmetric function written in one basis.
///
/// Coefficients are stored as rationals; when the coefficient ring is
/// [`CoeffRing::Integer`] every stored coefficient is an integer.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    ring: CoeffRing,
    terms: BTreeMap<Partition, BigRational>,
}

impl SymFunc {
    pub fn zero(basis: Basis, ring: CoeffRing) -> SymFunc {
        SymFunc {
            basis,
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(basis: Basis, c: impl Into<BigInt>) -> SymFunc {
        SymFunc::term(
            basis,
            Partition::empty(),
            BigRational::from_integer(c.into()),
        )
    }

    pub fn rational_constant(basis: Basis, c: BigRational) -> SymFunc {
        SymFunc::term(basis, Partition::empty(), c)
    }

    /// The basis element indexed by `lambda`, with coefficient 1.
    pub fn basis_element(basis: Basis, lambda: Partition) -> SymFunc {
        SymFunc::term(basis, lambda, BigRational::one())
    }

    /// `e_n`, `p_n`, `w_n` or `m_(n)`.
    pub fn generator(basis: Basis, n: u32) -> SymFunc {
        SymFunc::basis_element(basis, Partition::single(n))
    }

    /// A single term; the ring is ℤ when the coefficient is an integer.
    pub fn term(basis: Basis, lambda: Partition, c: BigRational) -> SymFunc {
        let ring = if c.is_integer() {
            CoeffRing::Integer
        } else {
            CoeffRing::Rational
        };
        let mut f = SymFunc::zero(basis, ring);
        f.add_term(lambda, c);
        f
    }

    /// Builds a symmetric function, rejecting non-integral coefficients
    /// when `ring` is ℤ.
    pub fn from_terms(
        basis: Basis,
        ring: CoeffRing,
        terms: impl IntoIterator<Item = (Partition, BigRational)>,
    ) -> Result<SymFunc> {
        let mut f = SymFunc::zero(basis, ring);
        for (lambda, c) in terms {
            if ring == CoeffRing::Integer && !c.is_integer() {
                return Err(AlgebraError::integrality(format_rational(&c), 1));
            }
            f.add_term(lambda, c);
        }
        Ok(f)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn ring(&self) -> CoeffRing {
        self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> BigRational {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Largest weight present; 0 for constants and zero.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Partition::weight).max().unwrap_or(0)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub(crate) fn add_term(&mut self, lambda: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Re-tags the coefficient ring: ℤ if every coefficient is an integer,
    /// otherwise ℚ.
    pub(crate) fn with_derived_ring(mut self) -> SymFunc {
        self.ring = if self.is_integral() {
            CoeffRing::Integer
        } else {
            CoeffRing::Rational
        };
        self
    }

    /// Views the function over ℚ.
    pub fn to_rational(&self) -> SymFunc {
        SymFunc {
            ring: CoeffRing::Rational,
            ..self.clone()
        }
    }

    /// Asserts integrality of all coefficients and views the function over ℤ.
    pub fn integralize(&self) -> Result<SymFunc> {
        if let Some((lambda, c)) = self.terms.iter().find(|(_, c)| !c.is_integer()) {
            let term = SymFunc::term(self.basis, lambda.clone(), c.clone());
            return Err(AlgebraError::integrality(term, c.denom()));
        }
        Ok(SymFunc {
            ring: CoeffRing::Integer,
            ..self.clone()
        })
    }

    /// Converts `other` into this function's basis if needed.
    fn aligned(&self, other: &SymFunc) -> Result<SymFunc> {
        if other.basis == self.basis {
            Ok(other.clone())
        } else {
            change_basis(other, self.basis)
        }
    }

    pub fn try_add(&self, other: &SymFunc) -> Result<SymFunc> {
        let other = self.aligned(other)?;
        let mut out = self.clone();
        out.ring = self.ring.join(other.ring);
        for (lambda, c) in other.terms {
            out.add_term(lambda, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> SymFunc {
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, c: &BigRational) -> SymFunc {
        let mut out = SymFunc::zero(self.basis, self.ring);
        if !c.is_integer() {
            out.ring = CoeffRing::Rational;
        }
        for (lambda, v) in &self.terms {
            out.add_term(lambda.clone(), v * c);
        }
        out
    }

    pub fn scale_int(&self, n: i64) -> SymFunc {
        self.scale(&BigRational::from_integer(n.into()))
    }

    /// Product. In a multiplicative basis this is convolution of terms under
    /// partition union; the monomial basis multiplies through `e`.
    pub fn try_mul(&self, other: &SymFunc) -> Result<SymFunc> {
        let other = self.aligned(other)?;
        if !self.basis.is_multiplicative() {
            let a = change_basis(self, Basis::Elementary)?;
            let b = change_basis(&other, Basis::Elementary)?;
            return change_basis(&a.try_mul(&b)?, self.basis);
        }
        Ok(self.mul_multiplicative(&other))
    }

    pub(crate) fn mul_multiplicative(&self, other: &SymFunc) -> SymFunc {
        debug_assert!(self.basis.is_multiplicative() && self.basis == other.basis);
        let mut out = SymFunc::zero(self.basis, self.ring.join(other.ring));
        for (la, ca) in &self.terms {
            for (lb, cb) in &other.terms {
                out.add_term(la.union(lb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Result<SymFunc> {
        let mut acc = SymFunc::constant(self.basis, 1);
        acc.ring = self.ring;
        for _ in 0..exp {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    /// Equality as elements of Λ ⊗ ℚ, independent of the basis used.
    pub fn same_element(&self, other: &SymFunc) -> Result<bool> {
        if self.basis == other.basis {
            return Ok(self.terms == other.terms);
        }
        let a = change_basis(self, Basis::PowerSum)?;
        let b = change_basis(other, Basis::PowerSum)?;
        Ok(a.terms == b.terms)
    }

    /// Degree-`d` homogeneous component.
    pub fn homogeneous(&self, d: u32) -> SymFunc {
        SymFunc {
            basis: self.basis,
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.weight() == d)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    fn format_basis_element(&self, lambda: &Partition) -> String {
        let b = self.basis.symbol();
        if !self.basis.is_multiplicative() {
            return format!("{b}{lambda}");
        }
        lambda
            .multiplicities()
            .into_iter()
            .map(|(part, mult)| {
                if mult == 1 {
                    format!("{b}[{part}]")
                } else {
                    format!("{b}[{part}]^{mult}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (lambda, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = format_rational(&c.abs());
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if lambda.is_empty() {
                f.write_str(&mag)?;
            } else if mag == "1" {
                f.write_str(&self.format_basis_element(lambda))?;
            } else {
                write!(f, "{mag}*{}", self.format_basis_element(lambda))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc<{:?}>({self})", self.ring)
    }
}

#[cfg(test)]
pub(crate) mod test_support {
    use super::*;

    pub fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// `Σ c·b_λ` from `(c, λ)` pairs with integer coefficients.
    pub fn sf(basis: Basis, terms: &[(i64, &[u32])]) -> SymFunc {
        SymFunc::from_terms(
            basis,
            CoeffRing::Integer,
            terms
                .iter()
                .map(|(c, l)| (part(l), BigRational::from_integer((*c).into()))),
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::test_support::*;
    use super::*;

    #[test]
    fn display_orders_by_weight_then_parts() {
        let f = sf(Basis::Elementary, &[(2, &[4]), (-2, &[3, 1]), (1, &[2, 2])]);
        assert_eq!(f.to_string(), "e[2]^2 - 2*e[1]*e[3] + 2*e[4]");
        let g = sf(Basis::Monomial, &[(3, &[2, 1]), (1, &[])]);
        assert_eq!(g.to_string(), "1 + 3*m[2,1]");
        let h = SymFunc::term(
            Basis::PowerSum,
            part(&[2]),
            BigRational::new((-1).into(), 2.into()),
        );
        assert_eq!(h.to_string(), "-1/2*p[2]");
        assert_eq!(h.ring(), CoeffRing::Rational);
    }

    #[test]
    fn multiplicative_product_is_union() {
        let e1 = SymFunc::generator(Basis::Elementary, 1);
        let e2 = SymFunc::generator(Basis::Elementary, 2);
        let prod = e1.try_add(&e2).unwrap().try_mul(&e1).unwrap();
        assert_eq!(prod, sf(Basis::Elementary, &[(1, &[1, 1]), (1, &[2, 1])]));
    }

    #[test]
    fn integral_ring_rejects_fractions() {
        let r = SymFunc::from_terms(
            Basis::Elementary,
            CoeffRing::Integer,
            [(part(&[1]), BigRational::new(1.into(), 2.into()))],
        );
        assert!(matches!(r, Err(AlgebraError::Integrality { .. })));
    }

    #[test]
    fn cancellation_removes_terms() {
        let f = sf(Basis::Witt, &[(1, &[2])]);
        assert!(f.try_sub(&f).unwrap().is_zero());
    }
}
