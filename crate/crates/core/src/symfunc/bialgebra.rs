//! Coaddition, comultiplication and counits of Λ realised at finite level,
//! plus the linearisation tests built on them.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::convert::change_basis;
use super::expand::{evaluate, exact_nvars, expand};
use super::{Basis, CoeffRing, SymFunc};
use crate::error::{AlgebraError, Result};
use crate::exactalg::{Monomial, MultiPoly, Value, Var};
use crate::partitions::partitions_of;

fn check_degree(f: &SymFunc, n: u32) -> Result<()> {
    if f.degree() > n {
        return Err(AlgebraError::Precision(format!(
            "degree {} exceeds the truncation {n}",
            f.degree()
        )));
    }
    Ok(())
}

fn group(f: &SymFunc, prefix: &str, n: u32) -> Result<Vec<MultiPoly>> {
    let ring = f.ring().descriptor();
    (1..=n)
        .map(|i| Ok(MultiPoly::var(&ring, Var::new(prefix, Some(i))?)))
        .collect()
}

/// `Δ⁺(f)` as a polynomial in `x1..xN, y1..yN`: `f` evaluated on the
/// disjoint union of the two variable groups.
pub fn coaddition_image(f: &SymFunc, n: u32) -> Result<MultiPoly> {
    check_degree(f, n)?;
    let mut args = group(f, "x", n)?;
    args.extend(group(f, "y", n)?);
    evaluate(f, &args)
}

/// `Δ×(f)` as a polynomial in `x1..xN, y1..yN`: `f` evaluated on the `N²`
/// products `x_i·y_j`.
pub fn comultiplication_image(f: &SymFunc, n: u32) -> Result<MultiPoly> {
    check_degree(f, n)?;
    let xs = group(f, "x", n)?;
    let ys = group(f, "y", n)?;
    let args: Vec<MultiPoly> = xs
        .iter()
        .flat_map(|x| ys.iter().map(move |y| x * y))
        .collect();
    evaluate(f, &args)
}

/// `ε⁺(f) = f(0, 0, …)`.
pub fn counit_plus(f: &SymFunc) -> BigRational {
    // every basis element other than the empty one vanishes at the origin
    f.coeff(&crate::partitions::Partition::empty())
}

/// `ε×(f) = f(1, 0, 0, …)`.
pub fn counit_times(f: &SymFunc) -> Result<BigRational> {
    let ring = f.ring().descriptor();
    let value = evaluate(f, &[MultiPoly::one(&ring)])?;
    Ok(match value.constant_term().value() {
        Value::Int(n) => BigRational::from_integer(n.clone()),
        Value::Rat(q) => q.clone(),
        Value::Poly(_) => unreachable!("coefficients are in Z or Q"),
    })
}

/// Whether `Δ⁺(f) = f ⊗ 1 + 1 ⊗ f`, checked with `deg f` variables per group.
pub fn is_additive(f: &SymFunc) -> Result<bool> {
    let n = exact_nvars(f.degree());
    let lhs = coaddition_image(f, n)?;
    let rhs = &expand(f, n, "x")? + &expand(f, n, "y")?;
    Ok(lhs == rhs)
}

/// A ℚ-basis (in the monomial basis) of the additive elements of degree `d`,
/// found as the kernel of `f ↦ Δ⁺(f) - f⊗1 - 1⊗f` on `Λ_d`.
pub fn additive_subspace(d: u32) -> Result<Vec<SymFunc>> {
    let basis = partitions_of(d);
    let n = exact_nvars(d);
    // columns: defects of each m_λ, as coefficient maps over monomials
    let mut columns: Vec<BTreeMap<Monomial, BigRational>> = Vec::new();
    for lambda in &basis {
        let m = SymFunc::basis_element(Basis::Monomial, lambda.clone()).to_rational();
        let defect = &(&coaddition_image(&m, n)? - &expand(&m, n, "x")?) - &expand(&m, n, "y")?;
        columns.push(
            defect
                .iter()
                .map(|(mono, c)| match c {
                    Value::Rat(q) => (mono.clone(), q.clone()),
                    _ => unreachable!("rational ring"),
                })
                .collect(),
        );
    }
    let rows: Vec<Monomial> = {
        let mut all: Vec<Monomial> = columns.iter().flat_map(|c| c.keys().cloned()).collect();
        all.sort();
        all.dedup();
        all
    };
    let mut matrix: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            columns
                .iter()
                .map(|c| c.get(r).cloned().unwrap_or_else(BigRational::zero))
                .collect()
        })
        .collect();
    let kernel = nullspace(&mut matrix, basis.len());
    Ok(kernel
        .into_iter()
        .map(|v| {
            SymFunc::from_terms(
                Basis::Monomial,
                CoeffRing::Rational,
                basis.iter().cloned().zip(v),
            )
            .expect("rational coefficients")
        })
        .collect())
}

/// Kernel of a rational matrix by reduction to row echelon form.
fn nullspace(m: &mut [Vec<BigRational>], ncols: usize) -> Vec<Vec<BigRational>> {
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = BigRational::one() / &m[row][col];
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in 0..ncols {
                    let delta = &factor * &m[row][c];
                    m[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![BigRational::zero(); ncols];
            v[free] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][free].clone();
            }
            v
        })
        .collect()
}

/// Image of `f` in the cotangent space `Λ₊/Λ₊²`: its linear part as a
/// polynomial in the generators of the multiplicative basis `basis`.
pub fn cotangent_reduce(f: &SymFunc, basis: Basis) -> Result<SymFunc> {
    if !basis.is_multiplicative() || !basis.is_integral() {
        return Err(AlgebraError::Descriptor(format!(
            "cotangent reduction needs an integral multiplicative basis (e or w), got {basis}"
        )));
    }
    let g = change_basis(f, basis)?;
    let constant = counit_plus(&g);
    if !constant.is_zero() {
        return Err(AlgebraError::NotAugmented(
            crate::exactalg::format_rational(&constant),
        ));
    }
    let mut out = SymFunc::zero(basis, g.ring());
    for (lambda, c) in g.terms() {
        if lambda.len() == 1 {
            out.add_term(lambda.clone(), c.clone());
        }
    }
    Ok(out)
}
