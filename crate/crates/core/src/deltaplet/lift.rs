use std::fmt;

use num_bigint::BigInt;

use super::theta::check_prime;
use crate::error::{AlgebraError, Result};
use crate::exactalg::{RingDescriptor, RingElement, Value};
use crate::witt::{from_ghost, GhostVector, TruncationSet, WittVector};

/// A lift of Frobenius on ℤ or ℤ[x]: an endomorphism `f` with
/// `f(x) ≡ x^p mod p` on every generator.
///
/// On ℤ the only endomorphism is the identity. On ℤ[x] the lift is given by
/// the image of `x`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FrobeniusLift {
    ring: RingDescriptor,
    p: u32,
    image: Option<Value>,
}

impl FrobeniusLift {
    /// The identity of ℤ, the unique lift there.
    pub fn integers(p: u32) -> Result<Self> {
        check_prime(p)?;
        Ok(FrobeniusLift {
            ring: RingDescriptor::Integer,
            p,
            image: None,
        })
    }

    /// `x ↦ image` on `ring = ℤ[x]`, checking `image ≡ x^p mod p`.
    pub fn polynomial(ring: &RingDescriptor, p: u32, image: &RingElement) -> Result<Self> {
        let lift = FrobeniusLift::unchecked_polynomial(ring, p, image)?;
        if let Some(g) = lift.violated_generator() {
            return Err(AlgebraError::Congruence(format!(
                "f({g}) = {image} is not congruent to {g}^{p} mod {p}"
            )));
        }
        Ok(lift)
    }

    /// As [`FrobeniusLift::polynomial`] without the congruence check, so that
    /// failures surface later as integrality errors.
    pub fn unchecked_polynomial(
        ring: &RingDescriptor,
        p: u32,
        image: &RingElement,
    ) -> Result<Self> {
        check_prime(p)?;
        match ring {
            RingDescriptor::Poly { base, .. } if **base == RingDescriptor::Integer => {}
            _ => {
                return Err(AlgebraError::descriptor(format!(
                    "Frobenius lifts are supported on Z and Z[x], not {ring}"
                )))
            }
        }
        if image.ring() != ring {
            return Err(AlgebraError::descriptor("image lies in a different ring"));
        }
        Ok(FrobeniusLift {
            ring: ring.clone(),
            p,
            image: Some(image.value().clone()),
        })
    }

    /// The standard lift `x ↦ x^p` on ℤ[x].
    pub fn power_map(ring: &RingDescriptor, p: u32) -> Result<Self> {
        let x = ring
            .generator()
            .ok_or_else(|| AlgebraError::descriptor(format!("{ring} has no generator")))?;
        let image = RingElement::new(ring.clone(), ring.pow(&x, p as u64))?;
        FrobeniusLift::polynomial(ring, p, &image)
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    fn generator_name(&self) -> Option<String> {
        match &self.ring {
            RingDescriptor::Poly { var, .. } => Some(var.clone()),
            _ => None,
        }
    }

    /// The generator whose image breaks the congruence, if any.
    fn violated_generator(&self) -> Option<String> {
        let (img, x) = (self.image.as_ref()?, self.ring.generator()?);
        let diff = self.ring.sub(img, &self.ring.pow(&x, self.p as u64));
        match self.ring.div_exact_int(&diff, &BigInt::from(self.p)) {
            Some(_) => None,
            None => self.generator_name(),
        }
    }

    pub fn apply(&self, r: &RingElement) -> Result<RingElement> {
        self.check(r)?;
        Ok(match &self.image {
            None => r.clone(),
            Some(img) => RingElement::new(self.ring.clone(), self.ring.compose(r.value(), img))?,
        })
    }

    fn check(&self, r: &RingElement) -> Result<()> {
        if r.ring() != &self.ring {
            return Err(AlgebraError::descriptor(format!(
                "element of {} given to a lift on {}",
                r.ring(),
                self.ring
            )));
        }
        Ok(())
    }

    /// Attaches the offending generator to an integrality failure.
    fn explain(&self, e: AlgebraError) -> AlgebraError {
        match (e, self.violated_generator()) {
            (AlgebraError::Integrality { term, divisor }, Some(g)) => AlgebraError::Integrality {
                term: format!(
                    "{term}; generator {g} violates f({g}) ≡ {g}^{} mod {}",
                    self.p, self.p
                ),
                divisor,
            },
            (e, _) => e,
        }
    }
}

impl fmt::Display for FrobeniusLift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.image, self.generator_name()) {
            (Some(img), Some(g)) => {
                write!(f, "{g} -> {} on {}", self.ring.format_value(img), self.ring)
            }
            _ => write!(f, "identity on {}", self.ring),
        }
    }
}

/// The ring map `R → W(R)` of a Frobenius lift: the p-typical Witt vector of
/// length `len` with ghost components `(r, f(r), f(f(r)), …)`.
pub fn dwork_action(lift: &FrobeniusLift, r: &RingElement, len: u32) -> Result<WittVector> {
    let t = TruncationSet::p_typical(lift.p, len)?;
    let mut entries = Vec::with_capacity(len as usize);
    let mut cur = r.clone();
    for _ in 0..len {
        let next = lift.apply(&cur)?;
        entries.push(cur.into_value());
        cur = next;
    }
    let g = GhostVector::new(t, lift.ring.clone(), entries)?;
    from_ghost(&g).map_err(|e| lift.explain(e))
}

/// `δ(r) = (f(r) − r^p)/p`.
pub fn delta_op(lift: &FrobeniusLift, r: &RingElement) -> Result<RingElement> {
    let numer = lift.apply(r)?.try_sub(&r.pow(lift.p as u64))?;
    numer.exact_div_int(lift.p).map_err(|e| lift.explain(e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zx() -> RingDescriptor {
        RingDescriptor::parse("Z[x]").unwrap()
    }

    fn el(ring: &RingDescriptor, text: &str) -> RingElement {
        RingElement::parse(ring, text).unwrap()
    }

    #[test]
    fn dwork_over_integers() {
        let l = FrobeniusLift::integers(2).unwrap();
        let w = dwork_action(&l, &RingElement::integer(2), 3).unwrap();
        assert_eq!(w.to_string(), "[2,-1,-4]");
        assert_eq!(
            dwork_action(&l, &RingElement::integer(0), 3)
                .unwrap()
                .to_string(),
            "[0,0,0]"
        );
        assert_eq!(
            dwork_action(&l, &RingElement::integer(1), 3)
                .unwrap()
                .to_string(),
            "[1,0,0]"
        );
    }

    #[test]
    fn dwork_over_polynomials() {
        let l = FrobeniusLift::power_map(&zx(), 2).unwrap();
        let w = dwork_action(&l, &el(&zx(), "x"), 2).unwrap();
        assert_eq!(w.to_string(), "[x,0]");
        let w = dwork_action(&l, &el(&zx(), "x + 1"), 2).unwrap();
        // ((x^2 + 1) - (x + 1)^2) / 2 = -x
        assert_eq!(w.to_string(), "[x + 1,-x]");
    }

    #[test]
    fn delta_values() {
        let l = FrobeniusLift::integers(2).unwrap();
        let d = |n: i64| delta_op(&l, &RingElement::integer(n)).unwrap().to_string();
        assert_eq!(d(3), "-3");
        assert_eq!(d(0), "0");
        assert_eq!(d(1), "0");
    }

    #[test]
    fn congruence_is_checked() {
        let bad = el(&zx(), "x^2 + x");
        let err = FrobeniusLift::polynomial(&zx(), 2, &bad).unwrap_err();
        assert!(matches!(err, AlgebraError::Congruence(ref m) if m.contains("f(x)")));
        let ok = el(&zx(), "x^2 + 2*x");
        assert!(FrobeniusLift::polynomial(&zx(), 2, &ok).is_ok());
        assert!(FrobeniusLift::polynomial(&RingDescriptor::Rational, 2, &ok).is_err());
    }

    #[test]
    fn violated_congruence_is_named_on_integrality_failure() {
        let l = FrobeniusLift::unchecked_polynomial(&zx(), 2, &el(&zx(), "x^2 + x")).unwrap();
        let err = dwork_action(&l, &el(&zx(), "x"), 2).unwrap_err();
        match err {
            AlgebraError::Integrality { term, .. } => assert!(term.contains("generator x")),
            other => panic!("unexpected {other:?}"),
        }
    }
}
