mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::*;
use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use plethora::deltaplet::{
    delta_op, dwork_action, lambda_from_adams, lambda_p_membership, linearization_report,
    FrobeniusLift,
};
use plethora::exactalg::{RingDescriptor, RingElement};
use plethora::partitions::partitions_of;
use plethora::symfunc::{change_basis, Basis, SymFunc};
use plethora::Partition;
use rand::Rng;

fn zx() -> RingDescriptor {
    RingDescriptor::parse("Z[x]").unwrap()
}

fn random_poly(r: &mut impl Rng, ring: &RingDescriptor) -> RingElement {
    let text = (0..=r.gen_range(0..=3))
        .map(|k| format!("({})*x^{k}", r.gen_range(-4..=4)))
        .collect::<Vec<_>>()
        .join(" + ");
    RingElement::parse(ring, &text).unwrap()
}

/// Some lifts on ℤ[x]: `x ↦ x^p + p·h(x)` for a few `h`.
fn lifts(p: u32) -> Vec<FrobeniusLift> {
    let ring = zx();
    let mut out = vec![FrobeniusLift::power_map(&ring, p).unwrap()];
    for h in ["1", "x", "x^2 - 3", "-x^3 + 2*x"] {
        let image = RingElement::parse(&ring, &format!("x^{p} + {p}*({h})")).unwrap();
        out.push(FrobeniusLift::polynomial(&ring, p, &image).unwrap());
    }
    out
}

#[test]
fn dwork_is_a_ring_map() {
    let mut r = rng(31);
    for p in [2, 3] {
        let on_z = FrobeniusLift::integers(p).unwrap();
        for _ in 0..10 {
            let (a, b) = (
                RingElement::integer(r.gen_range(-40..=40)),
                RingElement::integer(r.gen_range(-40..=40)),
            );
            let (da, db) = (
                dwork_action(&on_z, &a, 3).unwrap(),
                dwork_action(&on_z, &b, 3).unwrap(),
            );
            let sum = dwork_action(&on_z, &a.try_add(&b).unwrap(), 3).unwrap();
            let prod = dwork_action(&on_z, &a.try_mul(&b).unwrap(), 3).unwrap();
            assert_eq!(sum, da.try_add(&db).unwrap());
            assert_eq!(prod, da.try_mul(&db).unwrap());
        }
        for lift in lifts(p) {
            for _ in 0..3 {
                let (a, b) = (random_poly(&mut r, &zx()), random_poly(&mut r, &zx()));
                let da = dwork_action(&lift, &a, 3).unwrap();
                let db = dwork_action(&lift, &b, 3).unwrap();
                let sum = dwork_action(&lift, &a.try_add(&b).unwrap(), 3).unwrap();
                let prod = dwork_action(&lift, &a.try_mul(&b).unwrap(), 3).unwrap();
                assert_eq!(sum, da.try_add(&db).unwrap(), "{lift}");
                assert_eq!(prod, da.try_mul(&db).unwrap(), "{lift}");
            }
        }
    }
}

#[test]
fn dwork_ghost_components_are_frobenius_iterates() {
    let mut r = rng(32);
    for p in [2, 3] {
        for lift in lifts(p) {
            let a = random_poly(&mut r, &zx());
            let g = dwork_action(&lift, &a, 3).unwrap().ghost();
            let mut cur = a.clone();
            for (k, entry) in g.values().iter().enumerate() {
                assert_eq!(entry, cur.value(), "{lift}, iterate {k}");
                cur = lift.apply(&cur).unwrap();
            }
        }
    }
}

#[test]
fn dwork_first_components_are_r_and_delta() {
    let mut r = rng(33);
    for lift in lifts(2) {
        let a = random_poly(&mut r, &zx());
        let w = dwork_action(&lift, &a, 2).unwrap();
        assert_eq!(w.values()[0], *a.value());
        assert_eq!(w.values()[1], *delta_op(&lift, &a).unwrap().value());
    }
}

fn cross_terms(p: u32, a: &RingElement, b: &RingElement) -> RingElement {
    let mut acc = RingElement::zero(a.ring());
    for i in 1..p {
        let c = binomial(BigInt::from(p), BigInt::from(i)) / BigInt::from(p);
        let t = a
            .pow(i as u64)
            .try_mul(&b.pow((p - i) as u64))
            .unwrap()
            .scale(c);
        acc = acc.try_add(&t).unwrap();
    }
    acc
}

#[test]
fn delta_sum_and_product_rules() {
    let mut r = rng(34);
    for p in [2, 3, 5] {
        let on_z = FrobeniusLift::integers(p).unwrap();
        let mut all = vec![on_z];
        if p < 5 {
            all.extend(lifts(p));
        }
        for lift in all {
            for _ in 0..5 {
                let (a, b) = if lift.ring() == &RingDescriptor::Integer {
                    (
                        RingElement::integer(r.gen_range(-30..=30)),
                        RingElement::integer(r.gen_range(-30..=30)),
                    )
                } else {
                    (random_poly(&mut r, &zx()), random_poly(&mut r, &zx()))
                };
                let d = |x: &RingElement| delta_op(&lift, x).unwrap();
                let sum = d(&a)
                    .try_add(&d(&b))
                    .unwrap()
                    .try_sub(&cross_terms(p, &a, &b))
                    .unwrap();
                assert_eq!(d(&a.try_add(&b).unwrap()), sum, "{lift}");
                let prod = a
                    .pow(p as u64)
                    .try_mul(&d(&b))
                    .unwrap()
                    .try_add(&b.pow(p as u64).try_mul(&d(&a)).unwrap())
                    .unwrap()
                    .try_add(&d(&a).try_mul(&d(&b)).unwrap().scale(p))
                    .unwrap();
                assert_eq!(d(&a.try_mul(&b).unwrap()), prod, "{lift}");
            }
        }
    }
}

/// Products `θ^α` of total degree `d`: partitions of `d` into powers of `p`.
fn theta_monomials(p: u32, d: u32) -> Vec<Partition> {
    partitions_of(d)
        .into_iter()
        .filter(|l| l.parts().iter().all(|&k| p.pow(k.ilog(p)) == k))
        .collect()
}

/// Solves `target = Σ c_i cols_i` over ℚ by elimination; `None` if the
/// system is inconsistent.
fn solve(
    cols: &[BTreeMap<Partition, BigRational>],
    target: &BTreeMap<Partition, BigRational>,
) -> Option<Vec<BigRational>> {
    let rows: Vec<Partition> = cols
        .iter()
        .flat_map(|c| c.keys())
        .chain(target.keys())
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let n = cols.len();
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|row| {
            let get = |c: &BTreeMap<Partition, BigRational>| {
                c.get(row).cloned().unwrap_or_else(BigRational::zero)
            };
            cols.iter().map(get).chain([get(target)]).collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r0 = 0;
    for c in 0..n {
        let Some(pr) = (r0..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r0, pr);
        let inv = BigRational::one() / &m[r0][c];
        for x in m[r0].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r0 && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..=n {
                    let sub = &f * &m[r0][j];
                    m[i][j] -= sub;
                }
            }
        }
        pivots.push(c);
        r0 += 1;
    }
    if m[r0..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut sol = vec![BigRational::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = m[i][n].clone();
    }
    Some(sol)
}

fn power_sum_terms(f: &SymFunc) -> BTreeMap<Partition, BigRational> {
    change_basis(f, Basis::PowerSum)
        .unwrap()
        .terms()
        .map(|(l, c)| (l.clone(), c.clone()))
        .collect()
}

/// `f ∈ Λ_p` by definition: in each degree, an integer combination of the
/// products of `θ_n` in the power-sum basis.
fn member_by_brute_force(f: &SymFunc, p: u32) -> bool {
    (0..=f.degree()).all(|d| {
        let part = f.homogeneous(d);
        if part.is_zero() {
            return true;
        }
        let cols: Vec<_> = theta_monomials(p, d)
            .into_iter()
            .map(|l| power_sum_terms(&SymFunc::term(Basis::Witt, l, rat(1))))
            .collect();
        match solve(&cols, &power_sum_terms(&part)) {
            Some(c) => c.iter().all(BigRational::is_integer),
            None => false,
        }
    })
}

#[test]
fn membership_agrees_with_definition() {
    let mut r = rng(35);
    for p in [2u32, 3] {
        let max = p * p;
        let (mut yes, mut no) = (0, 0);
        for trial in 0..24 {
            let f = if trial % 2 == 0 {
                // a random integer polynomial in the θ_n
                let mut f = SymFunc::constant(Basis::Witt, r.gen_range(-3..=3));
                for d in 1..=max {
                    let mons = theta_monomials(p, d);
                    if !mons.is_empty() && r.gen_bool(0.5) {
                        let l = mons[r.gen_range(0..mons.len())].clone();
                        f = f
                            .try_add(&SymFunc::term(Basis::Witt, l, rat(r.gen_range(-3..=3))))
                            .unwrap();
                    }
                }
                let integral = [Basis::Elementary, Basis::Witt, Basis::Monomial];
                change_basis(&f, integral[r.gen_range(0..3)])
                    .unwrap()
                    .integralize()
                    .unwrap()
            } else {
                let (basis, deg) = (random_basis(&mut r), r.gen_range(1..=max));
                random_symfunc(&mut r, basis, deg, true)
            };
            let cert = lambda_p_membership(&f, p).unwrap();
            assert_eq!(cert.is_some(), member_by_brute_force(&f, p), "p = {p}: {f}");
            match cert {
                Some(word) => {
                    assert!(word.to_symfunc().unwrap().same_element(&f).unwrap());
                    yes += 1;
                }
                None => no += 1,
            }
        }
        assert!(yes > 0 && no > 0, "both outcomes exercised for p = {p}");
    }
}

#[test]
fn non_integral_rational_membership_is_detected() {
    // (p_1^2 + p_2)/2 = h_2 is integral, while p_1^2/2 is not
    let h2 = SymFunc::term(Basis::PowerSum, Partition::new(vec![1, 1]).unwrap(), rat(1))
        .try_add(&SymFunc::generator(Basis::PowerSum, 2).to_rational())
        .unwrap()
        .scale(&BigRational::new(1.into(), 2.into()));
    assert!(member_by_brute_force(&h2, 2));
    let half = SymFunc::term(Basis::PowerSum, Partition::new(vec![1, 1]).unwrap(), rat(1))
        .scale(&BigRational::new(1.into(), 2.into()));
    assert!(!member_by_brute_force(&half, 2));
}

#[test]
fn lambda_operations_of_integers_are_binomials() {
    for m in -10i64..=10 {
        let psi = vec![RingElement::integer(m); 6];
        let lambda = lambda_from_adams(&psi).unwrap();
        for (n, l) in lambda.iter().enumerate() {
            // C(m, n) = m (m-1) ... (m-n+1) / n!, valid for negative m too
            let mut falling = BigInt::one();
            let mut fact = BigInt::one();
            for i in 0..n as i64 {
                falling *= m - i;
                fact *= i + 1;
            }
            assert_eq!(*l, RingElement::integer(falling / fact), "lambda_{n}({m})");
        }
    }
}

#[test]
fn linearization_reports_pass() {
    for p in [2, 3, 5] {
        let report = linearization_report(p).unwrap();
        assert!(report.iter().all(|c| c.passed()), "p = {p}: {report:?}");
    }
}
