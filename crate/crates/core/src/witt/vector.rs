use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;

use super::structpolys::{frobenius_polys, structure_polys, witt_var};
use super::trunc::TruncationSet;
use crate::error::{AlgebraError, Result};
use crate::exactalg::{MultiPoly, RingDescriptor, RingElement, Value, Var};

/// A Witt vector: one component in `ring` per member of `trunc`.
#[derive(Clone, PartialEq, Eq)]
pub struct WittVector {
    trunc: TruncationSet,
    ring: RingDescriptor,
    components: Vec<Value>,
}

/// Ghost components of a Witt vector, laid out like the vector itself.
#[derive(Clone, PartialEq, Eq)]
pub struct GhostVector {
    trunc: TruncationSet,
    ring: RingDescriptor,
    entries: Vec<Value>,
}

fn check_len(t: &TruncationSet, n: usize) -> Result<()> {
    if t.len() != n {
        return Err(AlgebraError::descriptor(format!(
            "truncation {t} needs {} components, got {n}",
            t.len()
        )));
    }
    Ok(())
}

impl WittVector {
    pub fn new(trunc: TruncationSet, ring: RingDescriptor, components: Vec<Value>) -> Result<Self> {
        check_len(&trunc, components.len())?;
        for c in &components {
            ring.validate(c)?;
        }
        Ok(WittVector {
            trunc,
            ring,
            components,
        })
    }

    pub fn from_elements(trunc: TruncationSet, elements: &[RingElement]) -> Result<Self> {
        let ring = match elements.first() {
            Some(e) => e.ring().clone(),
            None => RingDescriptor::Integer,
        };
        if elements.iter().any(|e| e.ring() != &ring) {
            return Err(AlgebraError::descriptor(
                "components lie in different rings",
            ));
        }
        let values = elements.iter().map(|e| e.value().clone()).collect();
        WittVector::new(trunc, ring, values)
    }

    pub fn from_i64s(trunc: TruncationSet, ring: &RingDescriptor, values: &[i64]) -> Result<Self> {
        let values = values.iter().map(|&n| ring.from_i64(n)).collect();
        WittVector::new(trunc, ring.clone(), values)
    }

    /// Parses each component in `ring`'s notation.
    pub fn parse(trunc: TruncationSet, ring: &RingDescriptor, texts: &[&str]) -> Result<Self> {
        let values = texts
            .iter()
            .map(|t| ring.parse_value(t))
            .collect::<Result<Vec<_>>>()?;
        WittVector::new(trunc, ring.clone(), values)
    }

    pub fn zero(trunc: &TruncationSet, ring: &RingDescriptor) -> Self {
        WittVector {
            trunc: trunc.clone(),
            ring: ring.clone(),
            components: vec![ring.zero(); trunc.len()],
        }
    }

    /// The unit `[1]`.
    pub fn one(trunc: &TruncationSet, ring: &RingDescriptor) -> Self {
        teichmuller(&RingElement::one(ring), trunc)
    }

    /// The image of the integer `n` under `ℤ → W(ring)`.
    pub fn from_integer(
        n: impl Into<BigInt>,
        trunc: &TruncationSet,
        ring: &RingDescriptor,
    ) -> Self {
        let n = n.into();
        let zz = RingDescriptor::Integer;
        let g = GhostVector {
            trunc: trunc.clone(),
            ring: zz.clone(),
            entries: vec![Value::Int(n); trunc.len()],
        };
        let w = from_ghost(&g).expect("integers lie in W(Z)");
        WittVector {
            trunc: trunc.clone(),
            ring: ring.clone(),
            components: w
                .components
                .iter()
                .map(|v| match v {
                    Value::Int(k) => ring.from_int(k),
                    _ => unreachable!("integer components"),
                })
                .collect(),
        }
    }

    pub fn trunc(&self) -> &TruncationSet {
        &self.trunc
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn values(&self) -> &[Value] {
        &self.components
    }

    pub fn component(&self, n: u32) -> Option<RingElement> {
        let i = self.trunc.position(n)?;
        Some(RingElement::from_parts(
            self.ring.clone(),
            self.components[i].clone(),
        ))
    }

    pub fn components(&self) -> Vec<RingElement> {
        self.components
            .iter()
            .map(|v| RingElement::from_parts(self.ring.clone(), v.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| self.ring.is_zero(c))
    }

    /// Projection `W_T → W_S` for `S ⊆ T`.
    pub fn restrict(&self, sub: &TruncationSet) -> Result<Self> {
        if !sub.is_subset(&self.trunc) {
            return Err(AlgebraError::descriptor(format!(
                "{sub} is not contained in {}",
                self.trunc
            )));
        }
        let components = sub
            .members()
            .iter()
            .map(|&n| self.components[self.trunc.position(n).unwrap()].clone())
            .collect();
        Ok(WittVector {
            trunc: sub.clone(),
            ring: self.ring.clone(),
            components,
        })
    }

    /// Applies the ring map `ℤ → target` (or `ℚ → target`) componentwise.
    pub fn map_ring(&self, target: &RingDescriptor) -> Result<Self> {
        let components = self
            .components
            .iter()
            .map(|c| match (&self.ring, c) {
                (RingDescriptor::Integer, Value::Int(n)) => Ok(target.from_int(n)),
                (RingDescriptor::Rational, Value::Rat(q)) => target.from_rational(q),
                _ if &self.ring == target => Ok(c.clone()),
                _ => Err(AlgebraError::descriptor(format!(
                    "no ring map from {} to {target}",
                    self.ring
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(WittVector {
            trunc: self.trunc.clone(),
            ring: target.clone(),
            components,
        })
    }

    /// `ghost_n = Σ_{d | n} d·a_d^{n/d}`.
    pub fn ghost(&self) -> GhostVector {
        let r = &self.ring;
        let entries = self
            .trunc
            .members()
            .iter()
            .map(|&n| {
                self.trunc.divisors_of(n).fold(r.zero(), |acc, d| {
                    let a = &self.components[self.trunc.position(d).unwrap()];
                    let term = r.scale(&r.pow(a, (n / d) as u64), &BigInt::from(d));
                    r.add(&acc, &term)
                })
            })
            .collect();
        GhostVector {
            trunc: self.trunc.clone(),
            ring: r.clone(),
            entries,
        }
    }

    fn check(&self, other: &WittVector) -> Result<()> {
        if self.trunc != other.trunc {
            return Err(AlgebraError::descriptor(format!(
                "truncations differ: {} vs {}",
                self.trunc, other.trunc
            )));
        }
        if self.ring != other.ring {
            return Err(AlgebraError::descriptor(format!(
                "coefficient rings differ: {} vs {}",
                self.ring, other.ring
            )));
        }
        Ok(())
    }

    fn bindings<'a>(&'a self, prefix: &str, into: &mut HashMap<Var, &'a Value>) {
        for (i, &n) in self.trunc.members().iter().enumerate() {
            into.insert(witt_var(prefix, n), &self.components[i]);
        }
    }

    fn apply(&self, polys: &[MultiPoly], other: Option<&WittVector>) -> Result<WittVector> {
        let mut env = HashMap::new();
        self.bindings("x", &mut env);
        if let Some(b) = other {
            b.bindings("y", &mut env);
        }
        let components = polys
            .iter()
            .map(|p| p.eval_in(&self.ring, |v| env.get(&v).copied()))
            .collect::<Result<Vec<_>>>()?;
        Ok(WittVector {
            trunc: self.trunc.clone(),
            ring: self.ring.clone(),
            components,
        })
    }

    pub fn try_add(&self, other: &WittVector) -> Result<WittVector> {
        self.check(other)?;
        let s = structure_polys(&self.trunc)?;
        self.apply(s.sums(), Some(other))
    }

    pub fn try_mul(&self, other: &WittVector) -> Result<WittVector> {
        self.check(other)?;
        let s = structure_polys(&self.trunc)?;
        self.apply(s.products(), Some(other))
    }

    pub fn neg(&self) -> Result<WittVector> {
        let s = structure_polys(&self.trunc)?;
        self.apply(s.negations(), None)
    }

    pub fn try_sub(&self, other: &WittVector) -> Result<WittVector> {
        self.try_add(&other.neg()?)
    }

    pub fn pow(&self, exp: u32) -> Result<WittVector> {
        let mut acc = WittVector::one(&self.trunc, &self.ring);
        for _ in 0..exp {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    /// `n·a`, computed as the product with the image of `n`.
    pub fn scale_int(&self, n: impl Into<BigInt>) -> Result<WittVector> {
        WittVector::from_integer(n, &self.trunc, &self.ring).try_mul(self)
    }

    /// The Witt vector `c` with `n·c = self`, for torsion-free rings.
    pub fn exact_div_int(&self, n: impl Into<BigInt>) -> Result<WittVector> {
        let n = n.into();
        let g = self.ghost();
        let entries = g
            .entries
            .iter()
            .map(|e| {
                self.ring
                    .div_exact_int(e, &n)
                    .ok_or_else(|| AlgebraError::integrality(self.ring.format_value(e), &n))
            })
            .collect::<Result<Vec<_>>>()?;
        from_ghost(&GhostVector { entries, ..g })
    }

    /// `F_k : W_T → W_{T/k}`, characterised by `ghost_m(F_k a) = ghost_{mk}(a)`.
    ///
    /// Torsion-free rings go through the ghost map; every other ring uses the
    /// integral Frobenius polynomials.
    pub fn frobenius(&self, k: u32) -> Result<WittVector> {
        if self.ring.is_torsion_free() {
            self.frobenius_via_ghost(k)
        } else {
            self.frobenius_via_polys(k)
        }
    }

    fn check_frobenius_index(&self, k: u32) -> Result<TruncationSet> {
        if k == 0 || !self.trunc.contains(k) {
            return Err(AlgebraError::descriptor(format!(
                "F_{k} needs {k} in the truncation set {}",
                self.trunc
            )));
        }
        Ok(self.trunc.quotient(k))
    }

    pub fn frobenius_via_ghost(&self, k: u32) -> Result<WittVector> {
        let q = self.check_frobenius_index(k)?;
        let g = self.ghost();
        let entries = q
            .members()
            .iter()
            .map(|&m| g.entries[self.trunc.position(m * k).unwrap()].clone())
            .collect();
        from_ghost(&GhostVector {
            trunc: q,
            ring: self.ring.clone(),
            entries,
        })
    }

    pub fn frobenius_via_polys(&self, k: u32) -> Result<WittVector> {
        let q = self.check_frobenius_index(k)?;
        let polys = frobenius_polys(&self.trunc, k)?;
        let w = self.apply(&polys, None)?;
        Ok(WittVector { trunc: q, ..w })
    }

    /// `V_k : W_T → W_target`, with `b_m = a_{m/k}` when `k | m` and zero
    /// otherwise. Every `m/k` needed must lie in `T`.
    pub fn verschiebung(&self, k: u32, target: &TruncationSet) -> Result<WittVector> {
        if k == 0 {
            return Err(AlgebraError::descriptor("V_0 is undefined"));
        }
        let components = target
            .members()
            .iter()
            .map(|&m| {
                if m % k != 0 {
                    return Ok(self.ring.zero());
                }
                self.trunc
                    .position(m / k)
                    .map(|i| self.components[i].clone())
                    .ok_or_else(|| {
                        AlgebraError::Precision(format!(
                            "component {m} of V_{k} needs component {} of a vector on {}",
                            m / k,
                            self.trunc
                        ))
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(WittVector {
            trunc: target.clone(),
            ring: self.ring.clone(),
            components,
        })
    }

    /// The smallest truncation set containing `T` and `k·T`.
    pub fn verschiebung_target(t: &TruncationSet, k: u32) -> TruncationSet {
        let mut ms: Vec<u32> = t.members().to_vec();
        for &n in t.members() {
            let kn = k * n;
            ms.extend((1..=kn).filter(|d| kn % d == 0));
        }
        TruncationSet::new(ms).expect("closure is divisor-closed")
    }

    /// `{"trunc": [..], "mod": m, "components": [..]}`, with `mod` 0 for ℤ.
    pub fn to_json(&self) -> serde_json::Value {
        let modulus = match &self.ring {
            RingDescriptor::Integer => serde_json::json!(0),
            // moduli beyond u64 fall back to the ring string, which reads back too
            RingDescriptor::Modular(m) => match u64::try_from(m) {
                Ok(m) => serde_json::json!(m),
                Err(_) => serde_json::json!(self.ring.to_string()),
            },
            other => serde_json::json!(other.to_string()),
        };
        serde_json::json!({
            "trunc": self.trunc.members(),
            "mod": modulus,
            "components": self.components.iter().map(|c| self.ring.format_value(c)).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(json: &serde_json::Value) -> Result<WittVector> {
        let bad = |what: &str| AlgebraError::descriptor(format!("Witt vector JSON: {what}"));
        let trunc = json["trunc"]
            .as_array()
            .ok_or_else(|| bad("missing `trunc`"))?
            .iter()
            .map(|v| {
                v.as_u64()
                    .map(|n| n as u32)
                    .ok_or_else(|| bad("bad member"))
            })
            .collect::<Result<Vec<_>>>()?;
        let ring = match &json["mod"] {
            serde_json::Value::Number(n) => match n.as_u64() {
                Some(0) => RingDescriptor::Integer,
                Some(m) => RingDescriptor::modular(m)?,
                None => return Err(bad("bad `mod`")),
            },
            serde_json::Value::String(s) => RingDescriptor::parse(s)?,
            serde_json::Value::Null => RingDescriptor::Integer,
            _ => return Err(bad("bad `mod`")),
        };
        let texts = json["components"]
            .as_array()
            .ok_or_else(|| bad("missing `components`"))?
            .iter()
            .map(|v| match v {
                serde_json::Value::String(s) => Ok(s.clone()),
                serde_json::Value::Number(n) => Ok(n.to_string()),
                _ => Err(bad("bad component")),
            })
            .collect::<Result<Vec<_>>>()?;
        let refs: Vec<&str> = texts.iter().map(String::as_str).collect();
        WittVector::parse(TruncationSet::new(trunc)?, &ring, &refs)
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, ring: &RingDescriptor, values: &[Value]) -> fmt::Result {
    f.write_str("[")?;
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        f.write_str(&ring.format_value(v))?;
    }
    f.write_str("]")
}

impl fmt::Display for WittVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.ring, &self.components)
    }
}

impl fmt::Debug for WittVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W{}({}) ", self.trunc, self.ring)?;
        fmt::Display::fmt(self, f)
    }
}

impl GhostVector {
    pub fn new(trunc: TruncationSet, ring: RingDescriptor, entries: Vec<Value>) -> Result<Self> {
        check_len(&trunc, entries.len())?;
        for e in &entries {
            ring.validate(e)?;
        }
        Ok(GhostVector {
            trunc,
            ring,
            entries,
        })
    }

    pub fn from_i64s(trunc: TruncationSet, ring: &RingDescriptor, values: &[i64]) -> Result<Self> {
        let values = values.iter().map(|&n| ring.from_i64(n)).collect();
        GhostVector::new(trunc, ring.clone(), values)
    }

    pub fn trunc(&self) -> &TruncationSet {
        &self.trunc
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn values(&self) -> &[Value] {
        &self.entries
    }

    pub fn entry(&self, n: u32) -> Option<RingElement> {
        let i = self.trunc.position(n)?;
        Some(RingElement::from_parts(
            self.ring.clone(),
            self.entries[i].clone(),
        ))
    }

    fn zip(
        &self,
        other: &GhostVector,
        op: impl Fn(&Value, &Value) -> Value,
    ) -> Result<GhostVector> {
        if self.trunc != other.trunc || self.ring != other.ring {
            return Err(AlgebraError::descriptor(
                "ghost vectors have different shapes",
            ));
        }
        Ok(GhostVector {
            trunc: self.trunc.clone(),
            ring: self.ring.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| op(a, b))
                .collect(),
        })
    }

    pub fn try_add(&self, other: &GhostVector) -> Result<GhostVector> {
        self.zip(other, |a, b| self.ring.add(a, b))
    }

    pub fn try_mul(&self, other: &GhostVector) -> Result<GhostVector> {
        self.zip(other, |a, b| self.ring.mul(a, b))
    }
}

impl fmt::Display for GhostVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.ring, &self.entries)
    }
}

impl fmt::Debug for GhostVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ghost{}({}) ", self.trunc, self.ring)?;
        fmt::Display::fmt(self, f)
    }
}

/// Inverts the ghost map over a torsion-free ring:
/// `w_n = (g_n − Σ_{d | n, d < n} d·w_d^{n/d}) / n`.
///
/// Over ℤ an [`AlgebraError::Integrality`] means `g` has no preimage.
pub fn from_ghost(g: &GhostVector) -> Result<WittVector> {
    let r = &g.ring;
    if !r.is_torsion_free() {
        return Err(AlgebraError::descriptor(format!(
            "ghost components do not determine Witt vectors over {r}"
        )));
    }
    let t = &g.trunc;
    let mut w: Vec<Value> = Vec::with_capacity(t.len());
    for (i, &n) in t.members().iter().enumerate() {
        let mut numer = g.entries[i].clone();
        for d in t.divisors_of(n).filter(|&d| d < n) {
            let wd = &w[t.position(d).unwrap()];
            numer = r.sub(
                &numer,
                &r.scale(&r.pow(wd, (n / d) as u64), &BigInt::from(d)),
            );
        }
        let n_big = BigInt::from(n);
        let wn = r.div_exact_int(&numer, &n_big).ok_or_else(|| {
            AlgebraError::integrality(
                format!("{} (component {n})", r.format_value(&numer)),
                &n_big,
            )
        })?;
        w.push(wn);
    }
    Ok(WittVector {
        trunc: t.clone(),
        ring: r.clone(),
        components: w,
    })
}

/// The Teichmüller lift `[b] = (b, 0, 0, …)`.
pub fn teichmuller(b: &RingElement, t: &TruncationSet) -> WittVector {
    let ring = b.ring().clone();
    let mut components = vec![ring.zero(); t.len()];
    if let Some(i) = t.position(1) {
        components[i] = b.value().clone();
    }
    WittVector {
        trunc: t.clone(),
        ring,
        components,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zz() -> RingDescriptor {
        RingDescriptor::Integer
    }

    fn typ(p: u32, len: u32) -> TruncationSet {
        TruncationSet::p_typical(p, len).unwrap()
    }

    #[test]
    fn ghost_components() {
        let t = TruncationSet::big(2);
        let a = WittVector::from_i64s(t.clone(), &zz(), &[3, 5]).unwrap();
        assert_eq!(a.ghost().to_string(), "[3,19]");
        let b = teichmuller(&RingElement::integer(2), &typ(3, 3));
        assert_eq!(b.ghost().to_string(), "[2,8,512]");
        assert_eq!(WittVector::zero(&t, &zz()).ghost().to_string(), "[0,0]");
    }

    #[test]
    fn ghost_inversion() {
        let t = typ(2, 3);
        let g = GhostVector::from_i64s(t.clone(), &zz(), &[2, 2, 2]).unwrap();
        assert_eq!(from_ghost(&g).unwrap().to_string(), "[2,-1,-4]");
        let g = GhostVector::from_i64s(t.clone(), &zz(), &[5, 25, 625]).unwrap();
        assert_eq!(from_ghost(&g).unwrap().to_string(), "[5,0,0]");
        let g = GhostVector::from_i64s(t.clone(), &zz(), &[0, 1, 0]).unwrap();
        assert!(matches!(
            from_ghost(&g),
            Err(AlgebraError::Integrality { .. })
        ));
        let z4 = RingDescriptor::modular(4).unwrap();
        let g = GhostVector::from_i64s(t, &z4, &[0, 0, 0]).unwrap();
        assert!(matches!(from_ghost(&g), Err(AlgebraError::Descriptor(_))));
    }

    #[test]
    fn addition_of_teichmuller_pair_matches_series() {
        let t = TruncationSet::big(2);
        let a = WittVector::from_i64s(t.clone(), &zz(), &[4, 0]).unwrap();
        let b = WittVector::from_i64s(t, &zz(), &[7, 0]).unwrap();
        // (1 - 4t)(1 - 7t) = 1 - 11t + 28t^2 = (1 - 11t)(1 + 28t^2) mod t^3
        assert_eq!(a.try_add(&b).unwrap().to_string(), "[11,-28]");
    }

    #[test]
    fn unit_and_zero() {
        let t = typ(2, 3);
        let a = WittVector::from_i64s(t.clone(), &zz(), &[3, -2, 7]).unwrap();
        assert_eq!(a.try_add(&WittVector::zero(&t, &zz())).unwrap(), a);
        assert_eq!(a.try_mul(&WittVector::one(&t, &zz())).unwrap(), a);
        assert!(a.try_add(&a.neg().unwrap()).unwrap().is_zero());
    }

    #[test]
    fn integers_have_constant_ghosts() {
        let t = TruncationSet::big(6);
        let three = WittVector::from_integer(3, &t, &zz());
        assert_eq!(three.ghost().to_string(), "[3,3,3,3,3,3]");
        let sum = WittVector::one(&t, &zz())
            .try_add(&WittVector::one(&t, &zz()))
            .unwrap()
            .try_add(&WittVector::one(&t, &zz()))
            .unwrap();
        assert_eq!(sum, three);
    }

    #[test]
    fn mismatched_shapes_are_rejected() {
        let a = WittVector::zero(&typ(2, 2), &zz());
        let b = WittVector::zero(&typ(3, 2), &zz());
        assert!(matches!(a.try_add(&b), Err(AlgebraError::Descriptor(_))));
        let c = WittVector::zero(&typ(2, 2), &RingDescriptor::modular(4).unwrap());
        assert!(matches!(a.try_mul(&c), Err(AlgebraError::Descriptor(_))));
        assert!(WittVector::from_i64s(typ(2, 2), &zz(), &[1]).is_err());
    }

    #[test]
    fn teichmuller_products() {
        let t = typ(2, 3);
        let two = teichmuller(&RingElement::integer(2), &t);
        let three = teichmuller(&RingElement::integer(3), &t);
        assert_eq!(
            two.try_mul(&three).unwrap(),
            teichmuller(&RingElement::integer(6), &t)
        );
        assert!(teichmuller(&RingElement::integer(0), &t).is_zero());
    }

    #[test]
    fn frobenius_routes_agree() {
        let t = typ(2, 3);
        let a = WittVector::from_i64s(t.clone(), &zz(), &[3, 5, -2]).unwrap();
        assert_eq!(
            a.frobenius_via_ghost(2).unwrap(),
            a.frobenius_via_polys(2).unwrap()
        );
        assert_eq!(a.frobenius(1).unwrap(), a);
        let b = teichmuller(&RingElement::integer(5), &t);
        assert_eq!(
            b.frobenius(2).unwrap(),
            teichmuller(&RingElement::integer(25), &typ(2, 2))
        );
        assert!(a.frobenius(3).is_err());
    }

    #[test]
    fn frobenius_is_congruent_to_pth_power() {
        let t = typ(2, 2);
        let a = WittVector::from_i64s(t, &zz(), &[3, 5]).unwrap();
        let fa = a.frobenius(2).unwrap();
        let a2 = a.pow(2).unwrap().restrict(fa.trunc()).unwrap();
        let diff = fa.try_sub(&a2).unwrap();
        assert!(diff.exact_div_int(2).is_ok());
    }

    #[test]
    fn frobenius_over_modular_ring() {
        let t = typ(2, 3);
        let a = WittVector::from_i64s(t.clone(), &zz(), &[3, 5, -2]).unwrap();
        let z4 = RingDescriptor::modular(4).unwrap();
        let lhs = a.map_ring(&z4).unwrap().frobenius(2).unwrap();
        let rhs = a.frobenius(2).unwrap().map_ring(&z4).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn verschiebung_shifts_components() {
        let t1 = TruncationSet::big(1);
        let a = WittVector::from_i64s(t1.clone(), &zz(), &[7]).unwrap();
        let v = a.verschiebung(2, &TruncationSet::big(2)).unwrap();
        assert_eq!(v.to_string(), "[0,7]");
        assert_eq!(v.ghost().to_string(), "[0,14]");
        let target = WittVector::verschiebung_target(&t1, 2);
        assert_eq!(target.members(), &[1, 2]);
        assert!(a.verschiebung(2, &TruncationSet::big(4)).is_err());
    }

    #[test]
    fn frobenius_after_verschiebung_multiplies() {
        let t = TruncationSet::big(3);
        let a = WittVector::from_i64s(t.clone(), &zz(), &[2, -1, 4]).unwrap();
        let target = WittVector::verschiebung_target(&t, 2);
        let fv = a.verschiebung(2, &target).unwrap().frobenius(2).unwrap();
        assert_eq!(fv.restrict(&t).unwrap(), a.scale_int(2).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let a = WittVector::from_i64s(typ(2, 3), &zz(), &[2, -1, -4]).unwrap();
        let j = a.to_json();
        assert_eq!(
            j.to_string(),
            r#"{"components":["2","-1","-4"],"mod":0,"trunc":[1,2,4]}"#
        );
        assert_eq!(WittVector::from_json(&j).unwrap(), a);
        let m = WittVector::from_i64s(typ(2, 2), &RingDescriptor::modular(6).unwrap(), &[5, 1])
            .unwrap();
        assert_eq!(WittVector::from_json(&m.to_json()).unwrap(), m);
    }

    #[test]
    fn polynomial_coefficients() {
        let zx = RingDescriptor::parse("Z[x]").unwrap();
        let t = typ(2, 2);
        let a = WittVector::parse(t.clone(), &zx, &["x", "0"]).unwrap();
        let b = WittVector::parse(t, &zx, &["1", "x"]).unwrap();
        let s = a.try_add(&b).unwrap();
        assert_eq!(s.to_string(), "[x + 1,0]");
    }
}
