mod common;

use common::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use plethora::exactalg::{MultiPoly, RingDescriptor, Var};
use plethora::partitions::partitions_of;
use plethora::symfunc::{
    change_basis, evaluate, expand, from_polynomial, plethysm, Basis, CoeffRing, SymFunc,
};
use plethora::Partition;
use rand::Rng;

const N: usize = 8;

/// Truncated power series with symmetric-function coefficients, all kept in
/// the power-sum basis over ℚ.
type Series = Vec<SymFunc>;

fn p_basis(f: &SymFunc) -> SymFunc {
    change_basis(&f.to_rational(), Basis::PowerSum).unwrap()
}

fn series_mul(a: &Series, b: &Series) -> Series {
    (0..=N)
        .map(|k| {
            (0..=k).fold(
                SymFunc::zero(Basis::PowerSum, CoeffRing::Rational),
                |acc, i| acc.try_add(&a[i].try_mul(&b[k - i]).unwrap()).unwrap(),
            )
        })
        .collect()
}

fn series_one() -> Series {
    let mut s = vec![SymFunc::zero(Basis::PowerSum, CoeffRing::Rational); N + 1];
    s[0] = SymFunc::constant(Basis::PowerSum, 1).to_rational();
    s
}

/// `exp(-Σ p_k t^k / k)`, summed as the exponential series.
fn exponential_side() -> Series {
    let mut x = vec![SymFunc::zero(Basis::PowerSum, CoeffRing::Rational); N + 1];
    for k in 1..=N {
        x[k] = SymFunc::generator(Basis::PowerSum, k as u32)
            .scale(&BigRational::new(BigInt::from(-1), BigInt::from(k)));
    }
    let mut total = series_one();
    let mut power = series_one();
    let mut factorial = BigInt::one();
    for j in 1..=N {
        power = series_mul(&power, &x);
        factorial *= j;
        let inv = BigRational::new(BigInt::one(), factorial.clone());
        for k in 0..=N {
            total[k] = total[k].try_add(&power[k].scale(&inv)).unwrap();
        }
    }
    total
}

fn witt_product_side() -> Series {
    let mut acc = series_one();
    for k in 1..=N {
        let mut factor = series_one();
        factor[k] = p_basis(&SymFunc::generator(Basis::Witt, k as u32)).neg();
        acc = series_mul(&acc, &factor);
    }
    acc
}

/// `Π_{i ≤ N} (1 - x_i t)` as polynomials in `x_1..x_N`.
fn variable_product_side() -> Vec<MultiPoly> {
    let zz = RingDescriptor::Integer;
    let mut coeffs = vec![MultiPoly::zero(&zz); N + 1];
    coeffs[0] = MultiPoly::one(&zz);
    for i in 1..=N {
        let x = MultiPoly::var(&zz, Var::indexed("x", i as u32));
        for k in (1..=N).rev() {
            coeffs[k] = &coeffs[k] - &(&x * &coeffs[k - 1]);
        }
    }
    coeffs
}

#[test]
fn four_way_product_identity() {
    let exp_side = exponential_side();
    let witt_side = witt_product_side();
    let var_side = variable_product_side();
    for n in 0..=N {
        let e_side = match n {
            0 => SymFunc::constant(Basis::Elementary, 1),
            _ => SymFunc::generator(Basis::Elementary, n as u32).scale_int(if n % 2 == 0 {
                1
            } else {
                -1
            }),
        };
        assert_eq!(p_basis(&e_side), exp_side[n], "e vs exp at t^{n}");
        assert_eq!(witt_side[n], exp_side[n], "w vs exp at t^{n}");
        let from_vars = from_polynomial(&var_side[n], N as u32).unwrap();
        assert_eq!(
            p_basis(&from_vars),
            exp_side[n],
            "variables vs exp at t^{n}"
        );
    }
}

/// `w_n` by stripping the factors `1 - w_k t^k` off `exp(-Σ p_k t^k / k)`.
fn witt_by_factor_stripping() -> Vec<SymFunc> {
    let mut cur = exponential_side();
    let mut w = vec![SymFunc::zero(Basis::PowerSum, CoeffRing::Rational)];
    for n in 1..=N {
        let wn = cur[n].neg();
        // divide by (1 - wn t^n)
        for k in n..=N {
            let delta = wn.try_mul(&cur[k - n]).unwrap();
            cur[k] = cur[k].try_add(&delta).unwrap();
        }
        w.push(wn);
    }
    w
}

#[test]
fn witt_generators_match_factor_stripping() {
    let w = witt_by_factor_stripping();
    for n in 1..=N {
        assert_eq!(
            p_basis(&SymFunc::generator(Basis::Witt, n as u32)),
            w[n],
            "w_{n}"
        );
        // ψ_n = Σ_{d | n} d w_d^{n/d}
        let mut rhs = SymFunc::zero(Basis::PowerSum, CoeffRing::Rational);
        for d in (1..=n).filter(|d| n % d == 0) {
            rhs = rhs
                .try_add(&w[d].pow((n / d) as u32).unwrap().scale_int(d as i64))
                .unwrap();
        }
        assert_eq!(
            rhs,
            SymFunc::generator(Basis::PowerSum, n as u32).to_rational(),
            "psi_{n}"
        );
        let in_w =
            change_basis(&SymFunc::generator(Basis::PowerSum, n as u32), Basis::Witt).unwrap();
        let expected: Vec<(Partition, BigRational)> = (1..=n as u32)
            .filter(|d| n as u32 % d == 0)
            .map(|d| {
                (
                    Partition::new(vec![d; n / d as usize]).unwrap(),
                    rat(d as i64),
                )
            })
            .collect();
        assert_eq!(
            in_w,
            SymFunc::from_terms(Basis::Witt, CoeffRing::Integer, expected).unwrap()
        );
    }
}

#[test]
fn base_change_round_trips() {
    let mut r = rng(11);
    for _ in 0..12 {
        let d = r.gen_range(1..=8);
        let src = random_basis(&mut r);
        let f = random_symfunc(&mut r, src, d, true);
        for tgt in Basis::ALL {
            let there = change_basis(&f, tgt).unwrap();
            let back = change_basis(&there, src).unwrap();
            assert_eq!(
                back.to_rational(),
                f.to_rational(),
                "{src} -> {tgt} -> {src}: {f}"
            );
            if tgt.is_integral() {
                assert!(there.is_integral(), "{f} in {tgt}");
            }
        }
    }
}

#[test]
fn monomial_expansion_matches_variable_substitution() {
    let mut r = rng(12);
    for _ in 0..10 {
        let d = r.gen_range(1..=6);
        let f = random_any(&mut r, d, false);
        let by_vars = from_polynomial(&expand(&f, d, "x").unwrap(), d).unwrap();
        assert_eq!(change_basis(&f, Basis::Monomial).unwrap(), by_vars, "{f}");
    }
}

#[test]
fn wilkerson_congruence() {
    for p in [2u32, 3, 5] {
        let psi = SymFunc::generator(Basis::PowerSum, p);
        let e1p = SymFunc::generator(Basis::Elementary, 1).pow(p).unwrap();
        let diff = change_basis(&psi, Basis::Elementary)
            .unwrap()
            .try_sub(&e1p)
            .unwrap();
        assert!(!diff.is_zero());
        assert_eq!(diff.homogeneous(p), diff, "degree-exact");
        let modulus = rat(p as i64);
        for (lambda, c) in diff.terms() {
            assert!(
                (c / &modulus).is_integer(),
                "p = {p}: coefficient {c} of e{lambda}"
            );
        }
    }
}

#[test]
fn adams_operations_compose() {
    for m in 1..=12u32 {
        for n in (1..=12u32).filter(|n| m * n <= 12) {
            let lhs = plethysm(
                &SymFunc::generator(Basis::PowerSum, m),
                &SymFunc::generator(Basis::PowerSum, n),
            )
            .unwrap();
            assert_eq!(lhs, SymFunc::generator(Basis::PowerSum, m * n));
        }
    }
}

fn random_triple_degrees(r: &mut impl Rng) -> (u32, u32, u32) {
    loop {
        let t = (r.gen_range(1..=4), r.gen_range(1..=4), r.gen_range(1..=4));
        if t.0 * t.1 * t.2 <= 12 {
            return t;
        }
    }
}

#[test]
fn plethysm_is_associative_and_distributive() {
    let mut r = rng(13);
    for _ in 0..8 {
        let (a, b, c) = random_triple_degrees(&mut r);
        let f = random_any(&mut r, a, true);
        let g = random_any(&mut r, b, false);
        let h = random_any(&mut r, c, false);
        let left = plethysm(&plethysm(&f, &g).unwrap(), &h).unwrap();
        let right = plethysm(&f, &plethysm(&g, &h).unwrap()).unwrap();
        assert!(left.same_element(&right).unwrap(), "({f}) @ ({g}) @ ({h})");

        let sum = f.try_add(&g).unwrap();
        let lhs = plethysm(&sum, &h).unwrap();
        let rhs = plethysm(&f, &h)
            .unwrap()
            .try_add(&plethysm(&g, &h).unwrap())
            .unwrap();
        assert!(lhs.same_element(&rhs).unwrap());
        let prod = f.try_mul(&g).unwrap();
        let lhs = plethysm(&prod, &h).unwrap();
        let rhs = plethysm(&f, &h)
            .unwrap()
            .try_mul(&plethysm(&g, &h).unwrap())
            .unwrap();
        assert!(lhs.same_element(&rhs).unwrap());
    }
}

/// `f ∘ g` by definition: write `g` as a sum of monomials with coefficient 1
/// (repeated as needed) and substitute them into `f`.
fn plethysm_by_substitution(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let nvars = (f.degree() * g.degree()).max(1);
    let g_m = change_basis(g, Basis::Monomial)
        .unwrap()
        .integralize()
        .unwrap();
    let g_poly = expand(&g_m, nvars, "x").unwrap();
    let zz = RingDescriptor::Integer;
    let mut args = Vec::new();
    for (m, c) in g_poly.iter() {
        let copies: u32 = match c {
            plethora::Value::Int(n) => n.try_into().expect("nonnegative monomial coefficients"),
            _ => unreachable!(),
        };
        for _ in 0..copies {
            args.push(MultiPoly::monomial(&zz, m.clone(), zz.one()));
        }
    }
    let image = evaluate(f, &args).unwrap();
    from_polynomial(&image, nvars).unwrap()
}

#[test]
fn plethysm_agrees_with_monomial_substitution() {
    let mut r = rng(14);
    let mut checked = 0;
    while checked < 20 {
        let (a, b) = (r.gen_range(1..=4u32), r.gen_range(1..=4u32));
        if a * b > 8 {
            continue;
        }
        let f = random_any(&mut r, a, true);
        // monomial-positive g: a nonnegative combination of m_λ
        let mut g = SymFunc::zero(Basis::Monomial, CoeffRing::Integer);
        for d in 1..=b {
            let parts = partitions_of(d);
            let lambda = parts[r.gen_range(0..parts.len())].clone();
            let c = if d == b {
                r.gen_range(1..=2)
            } else {
                r.gen_range(0..=2)
            };
            g = g
                .try_add(&SymFunc::term(Basis::Monomial, lambda, rat(c)))
                .unwrap();
        }
        let target = random_basis(&mut r);
        let g = change_basis(&g, target).unwrap();
        let fast = plethysm(&f, &g).unwrap();
        let slow = plethysm_by_substitution(&f, &g);
        assert!(fast.same_element(&slow).unwrap(), "({f}) @ ({g})");
        checked += 1;
    }
}

#[test]
fn integral_inputs_give_integral_plethysm() {
    let mut r = rng(15);
    for _ in 0..10 {
        let (a, b) = (r.gen_range(1..=3), r.gen_range(1..=3));
        let f = random_symfunc(&mut r, Basis::Witt, a, true);
        let g = random_symfunc(&mut r, Basis::Elementary, b, false);
        let h = plethysm(&f, &g).unwrap();
        assert!(h.is_integral());
        assert_eq!(h.basis(), Basis::Elementary);
    }
}
