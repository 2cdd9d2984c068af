use num_bigint::BigInt;

use crate::error::{AlgebraError, Result};
use crate::exactalg::{MultiPoly, RingElement};

/// The arithmetic Newton's recursion needs: a commutative ring with exact
/// division by positive integers where it exists.
pub trait NewtonRing: Clone {
    fn one_like(&self) -> Self;
    fn zero_like(&self) -> Self;
    fn add(&self, other: &Self) -> Result<Self>;
    fn sub(&self, other: &Self) -> Result<Self>;
    fn mul(&self, other: &Self) -> Result<Self>;
    fn div_int(&self, n: u32) -> Result<Self>;
}

impl NewtonRing for RingElement {
    fn one_like(&self) -> Self {
        RingElement::one(self.ring())
    }

    fn zero_like(&self) -> Self {
        RingElement::zero(self.ring())
    }

    fn add(&self, other: &Self) -> Result<Self> {
        self.try_add(other)
    }

    fn sub(&self, other: &Self) -> Result<Self> {
        self.try_sub(other)
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)
    }

    fn div_int(&self, n: u32) -> Result<Self> {
        self.exact_div_int(n)
    }
}

impl NewtonRing for MultiPoly {
    fn one_like(&self) -> Self {
        MultiPoly::one(self.ring())
    }

    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.ring())
    }

    fn add(&self, other: &Self) -> Result<Self> {
        self.try_add(other)
    }

    fn sub(&self, other: &Self) -> Result<Self> {
        self.try_sub(other)
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)
    }

    fn div_int(&self, n: u32) -> Result<Self> {
        self.exact_div_int(&BigInt::from(n))
    }
}

/// λ-operations from Adams operations by Newton's recursion
/// `n·λ_n = Σ_{i=1}^{n} (−1)^{i−1} ψ_i·λ_{n−i}`, `λ_0 = 1`.
///
/// `psi[i]` is `ψ_{i+1}`; the result holds `λ_0..=λ_N` with `N = psi.len()`.
pub fn lambda_from_adams<R: NewtonRing>(psi: &[R]) -> Result<Vec<R>> {
    let first = psi
        .first()
        .ok_or_else(|| AlgebraError::descriptor("need at least one Adams operation"))?;
    let mut lambda = vec![first.one_like()];
    for n in 1..=psi.len() {
        let mut acc = first.zero_like();
        for i in 1..=n {
            let t = psi[i - 1].mul(&lambda[n - i])?;
            acc = if i % 2 == 1 {
                acc.add(&t)?
            } else {
                acc.sub(&t)?
            };
        }
        lambda.push(acc.div_int(n as u32)?);
    }
    Ok(lambda)
}
