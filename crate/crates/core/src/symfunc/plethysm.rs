use std::collections::HashMap;

use super::convert::change_basis;
use super::{Basis, CoeffRing, SymFunc};
use crate::error::Result;

/// Plethysm `f ∘ g`, returned in the basis of `g`.
///
/// Both arguments are moved to the power-sum basis over ℚ, where
/// `p_n ∘ p_m = p_{nm}`, `p_n ∘ (u + v) = p_n ∘ u + p_n ∘ v`,
/// `p_n ∘ (uv) = (p_n ∘ u)(p_n ∘ v)` and `p_n ∘ c = c` for constants.
/// When both inputs are integral the result is converted back with an
/// integrality assertion.
pub fn plethysm(f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
    let fp = change_basis(&f.to_rational(), Basis::PowerSum)?;
    let gp = change_basis(&g.to_rational(), Basis::PowerSum)?;

    let mut adams: HashMap<u32, SymFunc> = HashMap::new();
    let mut powers: HashMap<(u32, u32), SymFunc> = HashMap::new();
    let mut out = SymFunc::zero(Basis::PowerSum, CoeffRing::Rational);
    for (lambda, c) in fp.terms() {
        let mut term = SymFunc::rational_constant(Basis::PowerSum, c.clone());
        for (part, mult) in lambda.multiplicities() {
            if !powers.contains_key(&(part, mult)) {
                let base = adams
                    .entry(part)
                    .or_insert_with(|| apply_adams(part, &gp))
                    .clone();
                let mut pw = SymFunc::constant(Basis::PowerSum, 1);
                for _ in 0..mult {
                    pw = pw.mul_multiplicative(&base);
                }
                powers.insert((part, mult), pw);
            }
            term = term.mul_multiplicative(&powers[&(part, mult)]);
        }
        for (l, v) in term.terms {
            out.add_term(l, v);
        }
    }

    let integral_inputs = f.ring() == CoeffRing::Integer && g.ring() == CoeffRing::Integer;
    let result = change_basis(&out, g.basis())?;
    if integral_inputs && g.basis().is_integral() {
        result.integralize()
    } else if integral_inputs {
        Ok(result.with_derived_ring())
    } else {
        Ok(result)
    }
}

/// `p_k ∘ g` for `g` in the power-sum basis.
fn apply_adams(k: u32, g: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(Basis::PowerSum, g.ring());
    for (mu, c) in g.terms() {
        out.add_term(mu.scale(k), c.clone());
    }
    out
}
