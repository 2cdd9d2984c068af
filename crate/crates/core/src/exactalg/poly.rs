use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::monomial::{Monomial, Var};
use super::ring::{RingDescriptor, RingElement, Value};
use crate::error::{AlgebraError, Result};

/// Sparse multivariate polynomial over a [`RingDescriptor`].
///
/// Terms are kept in a map from exponent vector to nonzero coefficient; two
/// polynomials are equal exactly when their term maps are.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    ring: RingDescriptor,
    terms: BTreeMap<Monomial, Value>,
}

impl MultiPoly {
    pub fn zero(ring: &RingDescriptor) -> MultiPoly {
        MultiPoly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &RingDescriptor) -> MultiPoly {
        MultiPoly::constant(ring, ring.one())
    }

    pub fn constant(ring: &RingDescriptor, c: Value) -> MultiPoly {
        MultiPoly::monomial(ring, Monomial::one(), c)
    }

    pub fn integer(ring: &RingDescriptor, n: i64) -> MultiPoly {
        MultiPoly::constant(ring, ring.from_i64(n))
    }

    pub fn from_element(e: &RingElement) -> MultiPoly {
        MultiPoly::constant(e.ring(), e.value().clone())
    }

    pub fn var(ring: &RingDescriptor, v: Var) -> MultiPoly {
        MultiPoly::monomial(ring, Monomial::var(v), ring.one())
    }

    pub fn monomial(ring: &RingDescriptor, m: Monomial, c: Value) -> MultiPoly {
        let mut p = MultiPoly::zero(ring);
        p.add_term(m, c);
        p
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, summing repeats.
    pub fn from_terms(
        ring: &RingDescriptor,
        terms: impl IntoIterator<Item = (Monomial, Value)>,
    ) -> Result<MultiPoly> {
        let mut p = MultiPoly::zero(ring);
        for (m, c) in terms {
            ring.validate(&c)?;
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Value)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> RingElement {
        RingElement::from_parts(
            self.ring.clone(),
            self.terms
                .get(m)
                .cloned()
                .unwrap_or_else(|| self.ring.zero()),
        )
    }

    pub fn constant_term(&self) -> RingElement {
        self.coeff(&Monomial::one())
    }

    /// Total degree; the zero polynomial has degree 0.
    pub fn degree(&self) -> u64 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.iter().map(|(v, _)| v))
            .collect()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Value) {
        if self.ring.is_zero(&c) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = self.ring.add(e.get(), &c);
                if self.ring.is_zero(&s) {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check(&self, other: &MultiPoly) -> Result<()> {
        if self.ring != other.ring {
            return Err(AlgebraError::descriptor(format!(
                "polynomial rings differ: {} vs {}",
                self.ring, other.ring
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), self.ring.neg(c));
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        let mut acc: HashMap<Monomial, Value> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = self.ring.mul(ca, cb);
                let m = ma.mul(mb);
                match acc.get_mut(&m) {
                    Some(v) => *v = self.ring.add(v, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !self.ring.is_zero(c))
            .collect();
        Ok(MultiPoly {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        if exp == 0 {
            return MultiPoly::one(&self.ring);
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            return MultiPoly::monomial(&self.ring, m.pow(exp), self.ring.pow(c, exp as u64));
        }
        let mut result = self.clone();
        for _ in 1..exp {
            result = &result * self;
        }
        result
    }

    pub fn scale(&self, c: &Value) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.ring);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), self.ring.mul(v, c));
        }
        out
    }

    pub fn scale_int(&self, n: i64) -> MultiPoly {
        self.scale(&self.ring.from_i64(n))
    }

    /// Returns `g` with `n·g = self`, failing on the first coefficient that
    /// does not divide; the error names the offending term.
    pub fn exact_div_int(&self, n: &BigInt) -> Result<MultiPoly> {
        if n.is_zero() {
            return Err(AlgebraError::descriptor("division by zero"));
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let q = self.ring.div_exact_int(c, n).ok_or_else(|| {
                let term = MultiPoly::monomial(&self.ring, m.clone(), c.clone());
                AlgebraError::integrality(term, n)
            })?;
            if !self.ring.is_zero(&q) {
                terms.insert(m.clone(), q);
            }
        }
        Ok(MultiPoly {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Substitutes a polynomial for every variable of `self`.
    pub fn substitute(&self, bindings: &BTreeMap<Var, MultiPoly>) -> Result<MultiPoly> {
        for b in bindings.values() {
            self.check(b)?;
        }
        let mut powers: HashMap<(Var, u32), MultiPoly> = HashMap::new();
        let mut out = MultiPoly::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(&self.ring, c.clone());
            for (v, e) in m.iter() {
                let base = bindings
                    .get(&v)
                    .ok_or_else(|| AlgebraError::Substitution(v.to_string()))?;
                let pw = powers.entry((v, e)).or_insert_with(|| base.pow(e));
                term = &term * pw;
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Evaluates an integer or rational polynomial in `target`, reading the
    /// value of each variable from `lookup`.
    pub fn eval_in<'a>(
        &self,
        target: &RingDescriptor,
        lookup: impl Fn(Var) -> Option<&'a Value>,
    ) -> Result<Value> {
        let mut powers: HashMap<(Var, u32), Value> = HashMap::new();
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut term = self.coeff_into(c, target)?;
            for (v, e) in m.iter() {
                if !powers.contains_key(&(v, e)) {
                    let x = lookup(v).ok_or_else(|| AlgebraError::Substitution(v.to_string()))?;
                    powers.insert((v, e), target.pow(x, e as u64));
                }
                term = target.mul(&term, &powers[&(v, e)]);
            }
            acc = target.add(&acc, &term);
        }
        Ok(acc)
    }

    fn coeff_into(&self, c: &Value, target: &RingDescriptor) -> Result<Value> {
        match (&self.ring, c) {
            (RingDescriptor::Integer, Value::Int(n)) => Ok(target.from_int(n)),
            (RingDescriptor::Rational, Value::Rat(q)) => target.from_rational(q),
            _ if &self.ring == target => Ok(c.clone()),
            _ => Err(AlgebraError::descriptor(format!(
                "cannot map coefficients of {} into {target}",
                self.ring
            ))),
        }
    }

    /// Pushes the coefficients through the ring map ℤ → `target` (or ℚ → `target`).
    pub fn map_ring(&self, target: &RingDescriptor) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), self.coeff_into(c, target)?);
        }
        Ok(out)
    }

    pub fn rename(&self, f: impl Fn(Var) -> Var) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.ring);
        for (m, c) in &self.terms {
            out.add_term(m.rename(&f), c.clone());
        }
        out
    }

    /// JSON form: a list of `{"coeff": "...", "exps": {"x0": 2}}` in display order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .rev()
                .map(|(m, c)| {
                    let exps: serde_json::Map<String, serde_json::Value> =
                        m.iter().map(|(v, e)| (v.to_string(), e.into())).collect();
                    serde_json::json!({
                        "coeff": self.ring.format_value(c),
                        "exps": exps,
                    })
                })
                .collect(),
        )
    }

    pub fn from_json(ring: &RingDescriptor, json: &serde_json::Value) -> Result<MultiPoly> {
        let bad = |msg: &str| AlgebraError::parse(0, format!("polynomial JSON: {msg}"));
        let items = json.as_array().ok_or_else(|| bad("expected a list"))?;
        let mut out = MultiPoly::zero(ring);
        for item in items {
            let coeff = item
                .get("coeff")
                .and_then(|c| c.as_str())
                .ok_or_else(|| bad("missing `coeff` string"))?;
            let exps = item
                .get("exps")
                .and_then(|e| e.as_object())
                .ok_or_else(|| bad("missing `exps` object"))?;
            let mut pairs = Vec::new();
            for (name, e) in exps {
                let e = e
                    .as_u64()
                    .and_then(|e| e.to_u32())
                    .ok_or_else(|| bad("exponents must be nonnegative integers"))?;
                pairs.push((Var::parse(name)?, e));
            }
            out.add_term(Monomial::from_pairs(pairs), ring.parse_value(coeff)?);
        }
        Ok(out)
    }
}

/// Converts a polynomial in the single variable of a `Poly` ring into a ring value.
pub(crate) fn univariate_value(p: &MultiPoly, ring: &RingDescriptor) -> Result<Value> {
    let RingDescriptor::Poly { base, var } = ring else {
        return Err(AlgebraError::descriptor("not a polynomial ring"));
    };
    let x = Var::new(var, None)?;
    let mut coeffs: Vec<Value> = Vec::new();
    for (m, c) in p.iter() {
        let e = m.exponent(x);
        if m.degree() != e as u64 {
            return Err(AlgebraError::descriptor(format!(
                "unexpected variable in element of {ring}: {m}"
            )));
        }
        let e = e as usize;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, base.zero());
        }
        coeffs[e] = base.add(&coeffs[e], c);
    }
    while coeffs.last().is_some_and(|c| base.is_zero(c)) {
        coeffs.pop();
    }
    Ok(Value::Poly(coeffs))
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_add(rhs).expect("polynomial ring mismatch")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), self.ring.neg(c)))
            .collect();
        MultiPoly {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let compound = matches!(self.ring, RingDescriptor::Poly { .. });
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mut text = self.ring.format_value(c);
            if compound && (text.contains(" + ") || text.contains(" - ")) {
                text = format!("({text})");
            }
            let (neg, mag) = match text.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, text.as_str()),
            };
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                f.write_str(mag)?;
            } else if mag == "1" {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({self})", self.ring)
    }
}
