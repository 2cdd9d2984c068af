//! Passing between Λ and polynomials in finitely many variables.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;

use super::convert::change_basis;
use super::{Basis, CoeffRing, SymFunc};
use crate::error::{AlgebraError, Result};
use crate::exactalg::{MultiPoly, RingDescriptor, Value, Var};
use crate::partitions::Partition;

/// Variables needed per unit of degree for the map Λ_d → ℤ[x_1..x_N] to be
/// injective. Every identity of degree `d` is checked with at least
/// `d · EXACT_VARS_PER_DEGREE` variables in each group.
pub const EXACT_VARS_PER_DEGREE: u32 = 1;

pub(crate) fn exact_nvars(degree: u32) -> u32 {
    (degree * EXACT_VARS_PER_DEGREE).max(1)
}

fn coeff_value(ring: &RingDescriptor, c: &BigRational) -> Value {
    ring.from_rational(c).expect("coefficient fits the ring")
}

/// Evaluates `f` at the finite argument list `args`, all other variables
/// being set to zero. With monomial arguments this is the substitution that
/// defines plethysm; with `x_1..x_N` it is [`expand`].
pub fn evaluate(f: &SymFunc, args: &[MultiPoly]) -> Result<MultiPoly> {
    let ring = f.ring().descriptor();
    let args: Vec<MultiPoly> = args
        .iter()
        .map(|a| {
            if a.ring() == &ring {
                Ok(a.clone())
            } else {
                a.map_ring(&ring)
            }
        })
        .collect::<Result<_>>()?;
    match f.basis() {
        Basis::Monomial => Ok(evaluate_monomial(f, &args, &ring)),
        Basis::PowerSum => {
            let mut sums: HashMap<u32, MultiPoly> = HashMap::new();
            Ok(evaluate_multiplicative(f, &ring, |k| {
                sums.entry(k)
                    .or_insert_with(|| {
                        args.iter()
                            .fold(MultiPoly::zero(&ring), |acc, a| &acc + &a.pow(k))
                    })
                    .clone()
            }))
        }
        Basis::Elementary => {
            let elementary = elementary_values(&args, f.degree(), &ring);
            Ok(evaluate_multiplicative(f, &ring, |k| {
                elementary[k as usize].clone()
            }))
        }
        Basis::Witt => evaluate(&change_basis(f, Basis::Elementary)?, &args),
    }
}

/// `e_0..e_deg` of the arguments, from `Π (1 + a t)`.
fn elementary_values(args: &[MultiPoly], deg: u32, ring: &RingDescriptor) -> Vec<MultiPoly> {
    let deg = deg as usize;
    let mut e = vec![MultiPoly::zero(ring); deg + 1];
    e[0] = MultiPoly::one(ring);
    for (i, a) in args.iter().enumerate() {
        for k in (1..=deg.min(i + 1)).rev() {
            e[k] = &e[k] + &(a * &e[k - 1]);
        }
    }
    e
}

fn evaluate_multiplicative(
    f: &SymFunc,
    ring: &RingDescriptor,
    mut generator: impl FnMut(u32) -> MultiPoly,
) -> MultiPoly {
    let mut powers: HashMap<(u32, u32), MultiPoly> = HashMap::new();
    let mut out = MultiPoly::zero(ring);
    for (lambda, c) in f.terms() {
        let mut term = MultiPoly::constant(ring, coeff_value(ring, c));
        for (part, mult) in lambda.multiplicities() {
            if !powers.contains_key(&(part, mult)) {
                let g = generator(part).pow(mult);
                powers.insert((part, mult), g);
            }
            term = &term * &powers[&(part, mult)];
        }
        out = &out + &term;
    }
    out
}

/// `m_λ(args)`: sum over distinct placements of the parts onto arguments.
fn evaluate_monomial(f: &SymFunc, args: &[MultiPoly], ring: &RingDescriptor) -> MultiPoly {
    let mut powers: HashMap<(usize, u32), MultiPoly> = HashMap::new();
    let mut out = MultiPoly::zero(ring);
    for (lambda, c) in f.terms() {
        let parts = lambda.parts();
        if parts.len() > args.len() {
            continue;
        }
        let mut sum = MultiPoly::zero(ring);
        let mut used = vec![false; args.len()];
        place_parts(
            parts,
            0,
            0,
            MultiPoly::one(ring),
            args,
            &mut used,
            &mut powers,
            &mut sum,
        );
        out = &out + &sum.scale(&coeff_value(ring, c));
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn place_parts(
    parts: &[u32],
    idx: usize,
    min_arg: usize,
    acc: MultiPoly,
    args: &[MultiPoly],
    used: &mut [bool],
    powers: &mut HashMap<(usize, u32), MultiPoly>,
    sum: &mut MultiPoly,
) {
    if idx == parts.len() {
        *sum = &*sum + &acc;
        return;
    }
    let part = parts[idx];
    // equal parts are placed on increasing argument indices
    let start = if idx > 0 && parts[idx - 1] == part {
        min_arg
    } else {
        0
    };
    for j in start..args.len() {
        if used[j] {
            continue;
        }
        used[j] = true;
        let pw = powers
            .entry((j, part))
            .or_insert_with(|| args[j].pow(part))
            .clone();
        place_parts(parts, idx + 1, j + 1, &acc * &pw, args, used, powers, sum);
        used[j] = false;
    }
}

/// Image of `f` in the polynomial ring on `{prefix}1 .. {prefix}N`.
pub fn expand(f: &SymFunc, nvars: u32, prefix: &str) -> Result<MultiPoly> {
    if nvars == 0 {
        return Err(AlgebraError::Precision(
            "at least one variable is required".into(),
        ));
    }
    let ring = f.ring().descriptor();
    let vars = (1..=nvars)
        .map(|i| Ok(MultiPoly::var(&ring, Var::new(prefix, Some(i))?)))
        .collect::<Result<Vec<_>>>()?;
    evaluate(f, &vars)
}

/// The unique monomial-basis function whose image in `nvars` variables is `g`.
///
/// The variables of `g` must share one prefix and carry indices `1..=nvars`.
pub fn from_polynomial(g: &MultiPoly, nvars: u32) -> Result<SymFunc> {
    let ring = match g.ring() {
        RingDescriptor::Integer => CoeffRing::Integer,
        RingDescriptor::Rational => CoeffRing::Rational,
        other => {
            return Err(AlgebraError::Descriptor(format!(
                "symmetric functions have coefficients in Z or Q, not {other}"
            )))
        }
    };
    if g.degree() > nvars as u64 {
        return Err(AlgebraError::Precision(format!(
            "degree {} exceeds the {nvars} available variables",
            g.degree()
        )));
    }
    let vars = g.vars();
    let prefix = match vars.iter().next() {
        Some(v) => v.prefix(),
        None => "x".to_string(),
    };
    for v in &vars {
        let in_range = v.index().is_some_and(|i| (1..=nvars).contains(&i));
        if v.prefix() != prefix || !in_range {
            return Err(AlgebraError::Symmetry(format!(
                "variable {v} is outside {prefix}1..{prefix}{nvars}"
            )));
        }
    }
    let var = |i: u32| Var::new(&prefix, Some(i)).expect("validated prefix");
    let mut candidate = BTreeMap::new();
    for (m, c) in g.iter() {
        let exps: Vec<u32> = (1..=nvars).map(|i| m.exponent(var(i))).collect();
        if exps.windows(2).all(|w| w[0] >= w[1]) {
            let parts: Vec<u32> = exps.into_iter().filter(|&e| e > 0).collect();
            let q = match c {
                Value::Int(n) => BigRational::from_integer(n.clone()),
                Value::Rat(q) => q.clone(),
                Value::Poly(_) => unreachable!("checked ring"),
            };
            candidate.insert(Partition::new(parts)?, q);
        }
    }
    let result = SymFunc::from_terms(Basis::Monomial, ring, candidate)?;
    if &expand(&result, nvars, &prefix)? != g {
        return Err(AlgebraError::Symmetry(
            "polynomial is not invariant under permutations of its variables".into(),
        ));
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::super::test_support::*;
    use super::*;
    use crate::exactalg::parse_poly;

    fn zz(t: &str) -> MultiPoly {
        parse_poly(t, &RingDescriptor::Integer).unwrap()
    }

    #[test]
    fn elementary_two_in_three_variables() {
        let e2 = SymFunc::generator(Basis::Elementary, 2);
        assert_eq!(expand(&e2, 3, "x").unwrap(), zz("x1*x2 + x1*x3 + x2*x3"));
    }

    #[test]
    fn power_sum_two_in_two_variables() {
        let p2 = SymFunc::generator(Basis::PowerSum, 2);
        assert_eq!(expand(&p2, 2, "x").unwrap(), zz("x1^2 + x2^2"));
    }

    #[test]
    fn witt_two_in_two_variables() {
        let w2 = SymFunc::generator(Basis::Witt, 2);
        assert_eq!(expand(&w2, 2, "x").unwrap(), zz("-x1*x2"));
    }

    #[test]
    fn monomial_orbit_sums() {
        let m21 = sf(Basis::Monomial, &[(1, &[2, 1])]);
        assert_eq!(
            expand(&m21, 3, "x").unwrap(),
            zz("x1^2*x2 + x1^2*x3 + x2^2*x1 + x2^2*x3 + x3^2*x1 + x3^2*x2")
        );
        let m22 = sf(Basis::Monomial, &[(1, &[2, 2])]);
        assert_eq!(
            expand(&m22, 3, "x").unwrap(),
            zz("x1^2*x2^2 + x1^2*x3^2 + x2^2*x3^2")
        );
    }

    #[test]
    fn from_polynomial_examples() {
        assert_eq!(
            from_polynomial(&zz("x1 + x2 + x3"), 3).unwrap(),
            sf(Basis::Monomial, &[(1, &[1])])
        );
        let orbit = zz("x1^2*x2^2 + x1^2*x3^2 + x1^2*x4^2 + x2^2*x3^2 + x2^2*x4^2 + x3^2*x4^2");
        assert_eq!(
            from_polynomial(&orbit, 4).unwrap(),
            sf(Basis::Monomial, &[(1, &[2, 2])])
        );
        let g = &zz("x1^2 + x2^2") - &zz("(x1 + x2)^2");
        assert_eq!(
            from_polynomial(&g, 2).unwrap(),
            sf(Basis::Monomial, &[(-2, &[1, 1])])
        );
    }

    #[test]
    fn from_polynomial_errors() {
        assert!(matches!(
            from_polynomial(&zz("x1^2 + x2"), 2),
            Err(AlgebraError::Symmetry(_))
        ));
        assert!(matches!(
            from_polynomial(&zz("x1^3 + x2^3"), 2),
            Err(AlgebraError::Precision(_))
        ));
    }
}
