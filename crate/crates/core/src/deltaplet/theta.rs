use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{AlgebraError, Result};
use crate::exactalg::{Monomial, MultiPoly, RingDescriptor, Var};
use crate::partitions::Partition;
use crate::symfunc::{change_basis, Basis, CoeffRing, SymFunc};
use crate::witt::TruncationSet;

pub(crate) fn check_prime(p: u32) -> Result<()> {
    // p-typical truncation sets validate primality
    TruncationSet::p_typical(p, 1).map(|_| ())
}

/// `θ_n = w_{p^n}`.
pub fn theta_as_symfunc(n: u32, p: u32) -> Result<SymFunc> {
    check_prime(p)?;
    let q = p
        .checked_pow(n)
        .ok_or_else(|| AlgebraError::descriptor(format!("p^{n} overflows")))?;
    Ok(SymFunc::generator(Basis::Witt, q))
}

/// The exponent `k` with `n = p^k`, if any.
pub(crate) fn log_p(n: u32, p: u32) -> Option<u32> {
    let mut k = 0;
    let mut m = n;
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (m == 1).then_some(k)
}

/// An element of `Λ_p = ℤ[θ_0, θ_1, …]`, written as an integer polynomial in
/// the variables `theta0, theta1, …`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ThetaWord {
    p: u32,
    poly: MultiPoly,
}

impl ThetaWord {
    pub fn new(p: u32, poly: MultiPoly) -> Result<Self> {
        check_prime(p)?;
        if poly.ring() != &RingDescriptor::Integer {
            return Err(AlgebraError::descriptor(
                "theta words have integer coefficients",
            ));
        }
        if poly
            .vars()
            .iter()
            .any(|v| v.prefix() != "theta" || v.index().is_none())
        {
            return Err(AlgebraError::descriptor(
                "theta words use only theta0, theta1, ...",
            ));
        }
        Ok(ThetaWord { p, poly })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    /// The symmetric function obtained by `θ_i ↦ w_{p^i}`, in the w-basis.
    pub fn to_symfunc(&self) -> Result<SymFunc> {
        let mut out = SymFunc::zero(Basis::Witt, CoeffRing::Integer);
        for (m, c) in self.poly.iter() {
            let mut parts = Vec::new();
            for (v, e) in m.iter() {
                let q = self.p.pow(v.index().expect("indexed"));
                parts.extend(std::iter::repeat(q).take(e as usize));
            }
            let c = match c {
                crate::exactalg::Value::Int(n) => BigRational::from_integer(n.clone()),
                _ => unreachable!("integer coefficients"),
            };
            out = out.try_add(&SymFunc::term(Basis::Witt, Partition::new(parts)?, c))?;
        }
        Ok(out)
    }
}

impl fmt::Display for ThetaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.poly, f)
    }
}

/// Decides whether the integral function `f` lies in `Λ_p`: its w-basis
/// expansion may involve only the generators `w_{p^n}`. On success the
/// certificate is `f` as a polynomial in the `θ_n`.
pub fn lambda_p_membership(f: &SymFunc, p: u32) -> Result<Option<ThetaWord>> {
    check_prime(p)?;
    if !f.is_integral() {
        return Err(AlgebraError::integrality(f, 1));
    }
    let w = change_basis(f, Basis::Witt)?;
    let zz = RingDescriptor::Integer;
    let mut poly = MultiPoly::zero(&zz);
    for (lambda, c) in w.terms() {
        let mut pairs = Vec::with_capacity(lambda.len());
        for (part, mult) in lambda.multiplicities() {
            match log_p(part, p) {
                Some(k) => pairs.push((Var::indexed("theta", k), mult)),
                None => return Ok(None),
            }
        }
        let coeff = zz.from_int(&c.to_integer());
        poly = &poly + &MultiPoly::monomial(&zz, Monomial::from_pairs(pairs), coeff);
    }
    Ok(Some(ThetaWord { p, poly }))
}

/// `p^i` as a rational, for scaling symmetric functions.
pub(crate) fn p_power(p: u32, i: u32) -> BigRational {
    BigRational::from_integer(BigInt::from(p).pow(i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_poly;
    use crate::symfunc::plethysm;

    #[test]
    fn theta_generators() {
        assert_eq!(
            theta_as_symfunc(0, 2).unwrap(),
            SymFunc::generator(Basis::Witt, 1)
        );
        assert_eq!(
            theta_as_symfunc(2, 3).unwrap(),
            SymFunc::generator(Basis::Witt, 9)
        );
        let t1 = change_basis(&theta_as_symfunc(1, 2).unwrap(), Basis::Elementary).unwrap();
        assert_eq!(t1, SymFunc::generator(Basis::Elementary, 2).neg());
        assert!(theta_as_symfunc(1, 6).is_err());
    }

    #[test]
    fn iterated_frobenius_in_theta_coordinates() {
        for p in [2u32, 3] {
            let f = SymFunc::generator(Basis::PowerSum, p);
            let ff = plethysm(&f, &f).unwrap();
            let t0 = theta_as_symfunc(0, p).unwrap();
            let t1 = theta_as_symfunc(1, p).unwrap();
            let t2 = theta_as_symfunc(2, p).unwrap();
            let rhs = t0
                .pow(p * p)
                .unwrap()
                .try_add(&t1.pow(p).unwrap().scale(&p_power(p, 1)))
                .unwrap()
                .try_add(&t2.scale(&p_power(p, 2)))
                .unwrap();
            assert!(ff.same_element(&rhs).unwrap(), "p = {p}");
        }
    }

    #[test]
    fn membership() {
        let psi2 = SymFunc::generator(Basis::PowerSum, 2);
        let cert = lambda_p_membership(&psi2, 2).unwrap().unwrap();
        assert_eq!(cert.to_string(), "theta0^2 + 2*theta1");
        assert!(lambda_p_membership(&SymFunc::generator(Basis::Witt, 3), 2)
            .unwrap()
            .is_none());
        let psi4 = SymFunc::generator(Basis::PowerSum, 4);
        let cert = lambda_p_membership(&psi4, 2).unwrap().unwrap();
        let expected =
            parse_poly("theta0^4 + 2*theta1^2 + 4*theta2", &RingDescriptor::Integer).unwrap();
        assert_eq!(cert.poly(), &expected);
        assert!(cert.to_symfunc().unwrap().same_element(&psi4).unwrap());
    }
}
