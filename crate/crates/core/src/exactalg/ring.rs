//! Coefficient rings: ℤ, ℚ, ℤ/m and one univariate polynomial layer over these.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, Result};

/// Describes a commutative coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    Integer,
    Rational,
    /// ℤ/m with m ≥ 2.
    Modular(BigInt),
    /// base[var]; the base is never itself a polynomial ring.
    Poly {
        base: Box<RingDescriptor>,
        var: String,
    },
}

/// Canonical payload of a ring element. Its meaning depends on the
/// [`RingDescriptor`] it is paired with: `Int` serves both ℤ and ℤ/m
/// (residue in `[0, m)`), `Poly` holds coefficients in increasing degree
/// with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Value {
    Int(BigInt),
    Rat(BigRational),
    Poly(Vec<Value>),
}

impl RingDescriptor {
    pub fn modular(m: impl Into<BigInt>) -> Result<Self> {
        let m = m.into();
        if m < BigInt::from(2) {
            return Err(AlgebraError::descriptor(format!(
                "modulus must be at least 2, got {m}"
            )));
        }
        Ok(RingDescriptor::Modular(m))
    }

    pub fn poly(base: RingDescriptor, var: impl Into<String>) -> Result<Self> {
        if matches!(base, RingDescriptor::Poly { .. }) {
            return Err(AlgebraError::descriptor(
                "only one univariate polynomial layer is supported",
            ));
        }
        let var = var.into();
        if var.is_empty() || !var.chars().all(|c| c.is_ascii_lowercase()) {
            return Err(AlgebraError::descriptor(format!(
                "polynomial variable must be lowercase letters, got `{var}`"
            )));
        }
        Ok(RingDescriptor::Poly {
            base: Box::new(base),
            var,
        })
    }

    /// Parses `Z`, `Q`, `Z/6`, `Z[x]`, `Q[t]`, `Z/4[x]`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if let Some(open) = text.find('[') {
            let close = text
                .strip_suffix(']')
                .ok_or_else(|| AlgebraError::parse(text.len(), "expected `]`"))?;
            let base = RingDescriptor::parse(&text[..open])?;
            return RingDescriptor::poly(base, &close[open + 1..]);
        }
        match text {
            "Z" | "ZZ" => Ok(RingDescriptor::Integer),
            "Q" | "QQ" => Ok(RingDescriptor::Rational),
            _ => {
                let m = text
                    .strip_prefix("Z/")
                    .and_then(|m| m.parse::<BigInt>().ok())
                    .ok_or_else(|| AlgebraError::parse(0, format!("unknown ring `{text}`")))?;
                RingDescriptor::modular(m)
            }
        }
    }

    /// True when multiplication by every nonzero integer is injective, which
    /// is what ghost-component inversion needs.
    pub fn is_torsion_free(&self) -> bool {
        match self {
            RingDescriptor::Integer | RingDescriptor::Rational => true,
            RingDescriptor::Modular(_) => false,
            RingDescriptor::Poly { base, .. } => base.is_torsion_free(),
        }
    }

    pub fn modulus(&self) -> Option<&BigInt> {
        match self {
            RingDescriptor::Modular(m) => Some(m),
            RingDescriptor::Poly { base, .. } => base.modulus(),
            _ => None,
        }
    }

    pub fn zero(&self) -> Value {
        match self {
            RingDescriptor::Integer | RingDescriptor::Modular(_) => Value::Int(BigInt::zero()),
            RingDescriptor::Rational => Value::Rat(BigRational::zero()),
            RingDescriptor::Poly { .. } => Value::Poly(Vec::new()),
        }
    }

    pub fn one(&self) -> Value {
        self.from_int(&BigInt::one())
    }

    pub fn from_i64(&self, n: i64) -> Value {
        self.from_int(&BigInt::from(n))
    }

    /// Image of an integer under the unique ring map ℤ → R.
    pub fn from_int(&self, n: &BigInt) -> Value {
        match self {
            RingDescriptor::Integer => Value::Int(n.clone()),
            RingDescriptor::Rational => Value::Rat(BigRational::from_integer(n.clone())),
            RingDescriptor::Modular(m) => Value::Int(n.mod_floor(m)),
            RingDescriptor::Poly { base, .. } => {
                let c = base.from_int(n);
                if base.is_zero(&c) {
                    Value::Poly(Vec::new())
                } else {
                    Value::Poly(vec![c])
                }
            }
        }
    }

    /// Image of a rational number; fails when the denominator is not a unit.
    pub fn from_rational(&self, q: &BigRational) -> Result<Value> {
        if q.is_integer() {
            return Ok(self.from_int(q.numer()));
        }
        match self {
            RingDescriptor::Rational => Ok(Value::Rat(q.clone())),
            RingDescriptor::Poly { base, .. } => {
                let c = base.from_rational(q)?;
                Ok(Value::Poly(vec![c]))
            }
            _ => {
                let num = self.from_int(q.numer());
                self.div_exact_int(&num, q.denom())
                    .ok_or_else(|| AlgebraError::integrality(q.numer(), q.denom()))
            }
        }
    }

    pub fn is_zero(&self, v: &Value) -> bool {
        match v {
            Value::Int(n) => n.is_zero(),
            Value::Rat(q) => q.is_zero(),
            Value::Poly(c) => c.is_empty(),
        }
    }

    pub fn is_one(&self, v: &Value) -> bool {
        *v == self.one()
    }

    /// Checks that `v` is a canonical payload for this ring.
    pub fn validate(&self, v: &Value) -> Result<()> {
        let ok = match (self, v) {
            (RingDescriptor::Integer, Value::Int(_)) => true,
            (RingDescriptor::Rational, Value::Rat(_)) => true,
            (RingDescriptor::Modular(m), Value::Int(n)) => !n.is_negative() && n < m,
            (RingDescriptor::Poly { base, .. }, Value::Poly(cs)) => {
                cs.last().map_or(true, |c| !base.is_zero(c))
                    && cs.iter().all(|c| base.validate(c).is_ok())
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(AlgebraError::descriptor(format!(
                "value {v:?} is not a canonical element of {self}"
            )))
        }
    }

    pub fn add(&self, a: &Value, b: &Value) -> Value {
        match (self, a, b) {
            (RingDescriptor::Integer, Value::Int(x), Value::Int(y)) => Value::Int(x + y),
            (RingDescriptor::Rational, Value::Rat(x), Value::Rat(y)) => Value::Rat(x + y),
            (RingDescriptor::Modular(m), Value::Int(x), Value::Int(y)) => {
                let mut s = x + y;
                if &s >= m {
                    s -= m;
                }
                Value::Int(s)
            }
            (RingDescriptor::Poly { base, .. }, Value::Poly(x), Value::Poly(y)) => {
                let n = x.len().max(y.len());
                let zero = base.zero();
                let out = (0..n)
                    .map(|i| base.add(x.get(i).unwrap_or(&zero), y.get(i).unwrap_or(&zero)))
                    .collect();
                Value::Poly(trim(base, out))
            }
            _ => panic!("value does not belong to {self}"),
        }
    }

    pub fn neg(&self, a: &Value) -> Value {
        match (self, a) {
            (RingDescriptor::Integer, Value::Int(x)) => Value::Int(-x),
            (RingDescriptor::Rational, Value::Rat(x)) => Value::Rat(-x),
            (RingDescriptor::Modular(m), Value::Int(x)) => {
                if x.is_zero() {
                    Value::Int(BigInt::zero())
                } else {
                    Value::Int(m - x)
                }
            }
            (RingDescriptor::Poly { base, .. }, Value::Poly(x)) => {
                Value::Poly(x.iter().map(|c| base.neg(c)).collect())
            }
            _ => panic!("value does not belong to {self}"),
        }
    }

    pub fn sub(&self, a: &Value, b: &Value) -> Value {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Value, b: &Value) -> Value {
        match (self, a, b) {
            (RingDescriptor::Integer, Value::Int(x), Value::Int(y)) => Value::Int(x * y),
            (RingDescriptor::Rational, Value::Rat(x), Value::Rat(y)) => Value::Rat(x * y),
            (RingDescriptor::Modular(m), Value::Int(x), Value::Int(y)) => {
                Value::Int((x * y).mod_floor(m))
            }
            (RingDescriptor::Poly { base, .. }, Value::Poly(x), Value::Poly(y)) => {
                if x.is_empty() || y.is_empty() {
                    return Value::Poly(Vec::new());
                }
                let mut out = vec![base.zero(); x.len() + y.len() - 1];
                for (i, a) in x.iter().enumerate() {
                    for (j, b) in y.iter().enumerate() {
                        out[i + j] = base.add(&out[i + j], &base.mul(a, b));
                    }
                }
                Value::Poly(trim(base, out))
            }
            _ => panic!("value does not belong to {self}"),
        }
    }

    pub fn pow(&self, a: &Value, mut exp: u64) -> Value {
        let mut result = self.one();
        let mut base = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.mul(&result, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul(&base, &base);
            }
        }
        result
    }

    /// Multiplication by an integer.
    pub fn scale(&self, a: &Value, n: &BigInt) -> Value {
        self.mul(a, &self.from_int(n))
    }

    /// Returns some `g` with `n·g = a`, or `None` when none exists.
    ///
    /// Over ℤ/m the solution need not be unique; the least residue is returned.
    pub fn div_exact_int(&self, a: &Value, n: &BigInt) -> Option<Value> {
        assert!(!n.is_zero(), "division by zero");
        match (self, a) {
            (RingDescriptor::Integer, Value::Int(x)) => {
                let (q, r) = x.div_rem(n);
                r.is_zero().then_some(Value::Int(q))
            }
            (RingDescriptor::Rational, Value::Rat(x)) => {
                Some(Value::Rat(x / BigRational::from_integer(n.clone())))
            }
            (RingDescriptor::Modular(m), Value::Int(x)) => {
                let n = n.mod_floor(m);
                let d = n.gcd(m);
                if !(x % &d).is_zero() {
                    return None;
                }
                let m_red = m / &d;
                if m_red.is_one() {
                    return Some(Value::Int(BigInt::zero()));
                }
                let inv = mod_inverse(&(&n / &d), &m_red)?;
                Some(Value::Int(((x / &d) * inv).mod_floor(&m_red)))
            }
            (RingDescriptor::Poly { base, .. }, Value::Poly(cs)) => cs
                .iter()
                .map(|c| base.div_exact_int(c, n))
                .collect::<Option<Vec<_>>>()
                .map(|v| Value::Poly(trim(base, v))),
            _ => panic!("value does not belong to {self}"),
        }
    }

    /// Evaluates a univariate polynomial value at `point` (both in this ring).
    /// For non-polynomial rings this is the identity on `a`.
    pub fn compose(&self, a: &Value, point: &Value) -> Value {
        match (self, a) {
            (RingDescriptor::Poly { base, .. }, Value::Poly(cs)) => {
                let mut acc = self.zero();
                for c in cs.iter().rev() {
                    acc = self.mul(&acc, point);
                    acc = self.add(&acc, &lift_const(base, c));
                }
                acc
            }
            _ => a.clone(),
        }
    }

    /// The generator `var` of a polynomial ring.
    pub fn generator(&self) -> Option<Value> {
        match self {
            RingDescriptor::Poly { base, .. } => Some(Value::Poly(vec![base.zero(), base.one()])),
            _ => None,
        }
    }

    /// Parses an element written in this ring's notation.
    pub fn parse_value(&self, text: &str) -> Result<Value> {
        let text = text.trim();
        match self {
            RingDescriptor::Integer | RingDescriptor::Modular(_) => {
                let n: BigInt = text.parse().map_err(|_| {
                    AlgebraError::parse(0, format!("expected an integer, got `{text}`"))
                })?;
                Ok(self.from_int(&n))
            }
            RingDescriptor::Rational => parse_rational(text).map(Value::Rat),
            RingDescriptor::Poly { .. } => {
                let p = super::text::parse_poly(text, self.poly_coeff_ring())?;
                super::poly::univariate_value(&p, self)
            }
        }
    }

    fn poly_coeff_ring(&self) -> &RingDescriptor {
        match self {
            RingDescriptor::Poly { base, .. } => base,
            other => other,
        }
    }

    pub fn format_value(&self, v: &Value) -> String {
        match (self, v) {
            (RingDescriptor::Rational, Value::Rat(q)) => format_rational(q),
            (_, Value::Int(n)) => n.to_string(),
            (RingDescriptor::Poly { base, var }, Value::Poly(cs)) => {
                if cs.is_empty() {
                    return "0".to_string();
                }
                let mut out = String::new();
                for (deg, c) in cs.iter().enumerate().rev() {
                    if base.is_zero(c) {
                        continue;
                    }
                    let text = base.format_value(c);
                    let (neg, mag) = match text.strip_prefix('-') {
                        Some(rest) => (true, rest.to_string()),
                        None => (false, text),
                    };
                    if out.is_empty() {
                        if neg {
                            out.push('-');
                        }
                    } else {
                        out.push_str(if neg { " - " } else { " + " });
                    }
                    let monomial = match deg {
                        0 => String::new(),
                        1 => var.clone(),
                        d => format!("{var}^{d}"),
                    };
                    if monomial.is_empty() {
                        out.push_str(&mag);
                    } else if mag == "1" {
                        out.push_str(&monomial);
                    } else {
                        out.push_str(&format!("{mag}*{monomial}"));
                    }
                }
                out
            }
            _ => format!("{v:?}"),
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Integer => write!(f, "Z"),
            RingDescriptor::Rational => write!(f, "Q"),
            RingDescriptor::Modular(m) => write!(f, "Z/{m}"),
            RingDescriptor::Poly { base, var } => write!(f, "{base}[{var}]"),
        }
    }
}

fn trim(base: &RingDescriptor, mut cs: Vec<Value>) -> Vec<Value> {
    while cs.last().is_some_and(|c| base.is_zero(c)) {
        cs.pop();
    }
    cs
}

fn lift_const(base: &RingDescriptor, c: &Value) -> Value {
    if base.is_zero(c) {
        Value::Poly(Vec::new())
    } else {
        Value::Poly(vec![c.clone()])
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

pub(crate) fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || AlgebraError::parse(0, format!("expected a rational number, got `{text}`"));
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(AlgebraError::parse(0, "zero denominator"));
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(text.parse().map_err(|_| bad())?)),
    }
}

pub(crate) fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// An element together with the ring it lives in.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    ring: RingDescriptor,
    value: Value,
}

impl RingElement {
    pub fn new(ring: RingDescriptor, value: Value) -> Result<Self> {
        ring.validate(&value)?;
        Ok(RingElement { ring, value })
    }

    pub(crate) fn from_parts(ring: RingDescriptor, value: Value) -> Self {
        debug_assert!(ring.validate(&value).is_ok());
        RingElement { ring, value }
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        RingElement {
            ring: RingDescriptor::Integer,
            value: Value::Int(n.into()),
        }
    }

    pub fn from_int(ring: &RingDescriptor, n: impl Into<BigInt>) -> Self {
        RingElement {
            value: ring.from_int(&n.into()),
            ring: ring.clone(),
        }
    }

    pub fn parse(ring: &RingDescriptor, text: &str) -> Result<Self> {
        Ok(RingElement {
            value: ring.parse_value(text)?,
            ring: ring.clone(),
        })
    }

    pub fn zero(ring: &RingDescriptor) -> Self {
        RingElement::from_int(ring, 0)
    }

    pub fn one(ring: &RingDescriptor) -> Self {
        RingElement::from_int(ring, 1)
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn value(&self) -> &Value {
        &self.value
    }

    pub fn into_value(self) -> Value {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.ring.is_zero(&self.value)
    }

    fn check(&self, other: &RingElement) -> Result<()> {
        if self.ring != other.ring {
            return Err(AlgebraError::descriptor(format!(
                "ring mismatch: {} vs {}",
                self.ring, other.ring
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &RingElement) -> Result<RingElement> {
        self.check(other)?;
        Ok(self.with(self.ring.add(&self.value, &other.value)))
    }

    pub fn try_sub(&self, other: &RingElement) -> Result<RingElement> {
        self.check(other)?;
        Ok(self.with(self.ring.sub(&self.value, &other.value)))
    }

    pub fn try_mul(&self, other: &RingElement) -> Result<RingElement> {
        self.check(other)?;
        Ok(self.with(self.ring.mul(&self.value, &other.value)))
    }

    pub fn neg(&self) -> RingElement {
        self.with(self.ring.neg(&self.value))
    }

    pub fn pow(&self, exp: u64) -> RingElement {
        self.with(self.ring.pow(&self.value, exp))
    }

    pub fn scale(&self, n: impl Into<BigInt>) -> RingElement {
        self.with(self.ring.scale(&self.value, &n.into()))
    }

    /// Exact division by a nonzero integer.
    pub fn exact_div_int(&self, n: impl Into<BigInt>) -> Result<RingElement> {
        let n = n.into();
        if n.is_zero() {
            return Err(AlgebraError::descriptor("division by zero"));
        }
        self.ring
            .div_exact_int(&self.value, &n)
            .map(|v| self.with(v))
            .ok_or_else(|| AlgebraError::integrality(self, &n))
    }

    fn with(&self, value: Value) -> RingElement {
        RingElement {
            ring: self.ring.clone(),
            value,
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.format_value(&self.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z_mod(m: i64) -> RingDescriptor {
        RingDescriptor::modular(m).unwrap()
    }

    #[test]
    fn modulus_below_two_is_rejected() {
        assert!(RingDescriptor::modular(1).is_err());
        assert!(RingDescriptor::modular(0).is_err());
    }

    #[test]
    fn nested_polynomial_rings_are_rejected() {
        let zx = RingDescriptor::poly(RingDescriptor::Integer, "x").unwrap();
        assert!(RingDescriptor::poly(zx, "y").is_err());
    }

    #[test]
    fn modular_residues_are_canonical() {
        let r = z_mod(6);
        assert_eq!(r.from_i64(-1), Value::Int(5.into()));
        assert_eq!(r.add(&r.from_i64(4), &r.from_i64(5)), Value::Int(3.into()));
        assert_eq!(r.neg(&r.from_i64(0)), Value::Int(0.into()));
    }

    #[test]
    fn modular_exact_division() {
        let r = z_mod(6);
        // 5·g = 1 mod 6 has g = 5
        assert_eq!(
            r.div_exact_int(&r.from_i64(1), &5.into()),
            Some(r.from_i64(5))
        );
        // 2·g = 3 mod 6 has no solution
        assert_eq!(r.div_exact_int(&r.from_i64(3), &2.into()), None);
        // 2·g = 4 mod 6: least solution is 2
        assert_eq!(
            r.div_exact_int(&r.from_i64(4), &2.into()),
            Some(r.from_i64(2))
        );
    }

    #[test]
    fn integer_exact_division() {
        let three = RingElement::integer(3);
        assert!(matches!(
            three.exact_div_int(2),
            Err(AlgebraError::Integrality { .. })
        ));
        assert_eq!(
            RingElement::integer(-8).exact_div_int(4).unwrap(),
            RingElement::integer(-2)
        );
    }

    #[test]
    fn polynomial_values_parse_and_print() {
        let zx = RingDescriptor::parse("Z[x]").unwrap();
        let v = RingElement::parse(&zx, "x^2 - 2*x + 1").unwrap();
        assert_eq!(v.to_string(), "x^2 - 2*x + 1");
        let sq = v.try_mul(&v).unwrap();
        assert_eq!(sq.to_string(), "x^4 - 4*x^3 + 6*x^2 - 4*x + 1");
        let g = zx.generator().unwrap();
        let composed = zx.compose(v.value(), &zx.mul(&g, &g));
        assert_eq!(zx.format_value(&composed), "x^4 - 2*x^2 + 1");
    }

    #[test]
    fn ring_descriptor_text_round_trip() {
        for text in ["Z", "Q", "Z/6", "Z[x]", "Q[t]", "Z/4[x]"] {
            assert_eq!(RingDescriptor::parse(text).unwrap().to_string(), text);
        }
    }

    #[test]
    fn rational_display_is_reduced() {
        let q = RingDescriptor::Rational;
        let v = q.parse_value("6/-4").unwrap();
        assert_eq!(q.format_value(&v), "-3/2");
    }
}
