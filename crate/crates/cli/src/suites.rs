//! Identity suites run by `plethora check`.
//!
//! Each suite is an exact check with a fixed random seed, so runs are
//! reproducible. Suites share no state beyond the structure-polynomial cache
//! and may run concurrently.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use plethora::deltaplet::{dwork_action, lambda_from_adams, linearization_report, FrobeniusLift};
use plethora::partitions::partitions_of;
use plethora::symfunc::{
    additive_subspace, change_basis, evaluate, expand, from_polynomial, is_additive, plethysm,
    Basis, CoeffRing, SymFunc,
};
use plethora::witt::{artin_hasse, structure_polys, teichmuller};
use plethora::{
    parse_poly, MultiPoly, Partition, RingDescriptor, RingElement, TruncationSet, Value, Var,
    WittVector,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::expr;

type Outcome = Result<String, String>;

pub struct Suite {
    pub id: u32,
    pub name: &'static str,
    pub run: fn() -> Outcome,
}

pub struct Report {
    pub id: u32,
    pub name: &'static str,
    pub outcome: Outcome,
    pub elapsed: Duration,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }

    /// One line: status, id, name, wall time in whole milliseconds, detail.
    pub fn line(&self) -> String {
        let (status, detail) = match &self.outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        format!(
            "{status} {:>2} {} ({} ms): {detail}",
            self.id,
            self.name,
            self.elapsed.as_millis()
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        let (status, detail) = match &self.outcome {
            Ok(d) => ("pass", d),
            Err(d) => ("fail", d),
        };
        serde_json::json!({
            "check": format!("{} {}", self.id, self.name),
            "status": status,
            "witness": detail,
            "millis": self.elapsed.as_millis() as u64,
        })
    }
}

pub const SUITES: &[Suite] = &[
    Suite {
        id: 1,
        name: "witt structure polynomials p=2 length 2",
        run: structure_exact,
    },
    Suite {
        id: 2,
        name: "structure polynomial integrality",
        run: structure_integral,
    },
    Suite {
        id: 3,
        name: "ghost map is a ring homomorphism",
        run: ghost_homomorphism,
    },
    Suite {
        id: 4,
        name: "ring axioms of W(Z/4) and W(Z/6)",
        run: ring_axioms,
    },
    Suite {
        id: 5,
        name: "teichmuller multiplicativity",
        run: teichmuller_multiplicative,
    },
    Suite {
        id: 6,
        name: "dwork action is a ring homomorphism",
        run: dwork_homomorphism,
    },
    Suite {
        id: 7,
        name: "symmetric function identities",
        run: symfunc_identities,
    },
    Suite {
        id: 8,
        name: "linearization",
        run: linearization,
    },
    Suite {
        id: 9,
        name: "binomial lambda operations",
        run: binomial,
    },
    Suite {
        id: 10,
        name: "wilkerson congruence",
        run: wilkerson,
    },
    Suite {
        id: 11,
        name: "artin-hasse laws",
        run: artin_hasse_laws,
    },
    Suite {
        id: 12,
        name: "expression corpus round trip",
        run: corpus_round_trip,
    },
];

/// The suites whose id or name contains `key`.
pub fn select(key: &str) -> Vec<&'static Suite> {
    SUITES
        .iter()
        .filter(|s| s.id.to_string() == key || s.name.contains(key))
        .collect()
}

pub fn run_one(suite: &Suite) -> Report {
    let start = Instant::now();
    let outcome = (suite.run)();
    Report {
        id: suite.id,
        name: suite.name,
        outcome,
        elapsed: start.elapsed(),
    }
}

/// Runs suites on scoped threads; reports come back in input order.
pub fn run_parallel(suites: &[&Suite]) -> Vec<Report> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = suites.iter().map(|s| scope.spawn(|| run_one(s))).collect();
        handles
            .into_iter()
            .zip(suites)
            .map(|(h, s)| {
                h.join().unwrap_or_else(|_| Report {
                    id: s.id,
                    name: s.name,
                    outcome: Err("suite panicked".into()),
                    elapsed: Duration::ZERO,
                })
            })
            .collect()
    })
}

fn ok<T>(r: plethora::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn zm(m: i64) -> RingDescriptor {
    RingDescriptor::modular(m).expect("positive modulus")
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn structure_exact() -> Outcome {
    let t = ok(TruncationSet::p_typical(2, 2))?;
    let s = ok(structure_polys(&t))?;
    let zz = RingDescriptor::Integer;
    let expected = [
        (s.sum(1), "x1 + y1"),
        (s.sum(2), "x2 + y2 - x1*y1"),
        (s.product(1), "x1*y1"),
        (s.product(2), "x1^2*y2 + y1^2*x2 + 2*x2*y2"),
    ];
    for (got, want) in expected {
        let got = got.ok_or("missing component")?;
        ensure(*got == ok(parse_poly(want, &zz))?, || {
            format!("{got} != {want}")
        })?;
    }
    Ok(format!(
        "S2 = {}, P2 = {}",
        s.sum(2).unwrap(),
        s.product(2).unwrap()
    ))
}

fn structure_integral() -> Outcome {
    let start = Instant::now();
    let mut sets = Vec::new();
    for p in [2, 3, 5] {
        sets.push(ok(TruncationSet::p_typical(p, 3))?);
    }
    sets.push(TruncationSet::big(8));
    for t in &sets {
        ok(structure_polys(t))?;
    }
    let ms = start.elapsed().as_millis();
    ensure(ms < 10_000, || format!("took {ms} ms, budget 10000 ms"))?;
    Ok(format!("{} truncation sets certified integral", sets.len()))
}

fn random_rational_vector(r: &mut impl Rng, t: &TruncationSet) -> Result<WittVector, String> {
    let vals = (0..t.len())
        .map(|_| {
            Value::Rat(BigRational::new(
                r.gen_range(-9i64..=9).into(),
                r.gen_range(1i64..=6).into(),
            ))
        })
        .collect();
    ok(WittVector::new(t.clone(), RingDescriptor::Rational, vals))
}

fn ghost_homomorphism() -> Outcome {
    let t = ok(TruncationSet::new([1, 2, 3, 6]))?;
    let mut r = rng(3);
    for _ in 0..100 {
        let a = random_rational_vector(&mut r, &t)?;
        let b = random_rational_vector(&mut r, &t)?;
        let (ga, gb) = (a.ghost(), b.ghost());
        let sum = ok(a.try_add(&b))?.ghost();
        let prod = ok(a.try_mul(&b))?.ghost();
        ensure(sum == ok(ga.try_add(&gb))?, || {
            format!("ghost of {a} + {b}")
        })?;
        ensure(prod == ok(ga.try_mul(&gb))?, || {
            format!("ghost of {a} * {b}")
        })?;
    }
    Ok("100 random pairs over Q on [1,2,3,6]".into())
}

fn ring_axioms() -> Outcome {
    let t = TruncationSet::big(2);
    let mut triples = 0usize;
    for m in [4i64, 6] {
        let ring = zm(m);
        let mut all = Vec::new();
        for a in 0..m {
            for b in 0..m {
                all.push(ok(WittVector::from_i64s(t.clone(), &ring, &[a, b]))?);
            }
        }
        let n = all.len();
        let mut add = vec![vec![None; n]; n];
        let mut mul = vec![vec![None; n]; n];
        // tabulate once, then compare indices
        let index = |w: &WittVector| all.iter().position(|v| v == w);
        for i in 0..n {
            for j in 0..n {
                add[i][j] = index(&ok(all[i].try_add(&all[j]))?);
                mul[i][j] = index(&ok(all[i].try_mul(&all[j]))?);
            }
        }
        let (add, mul): (Vec<Vec<usize>>, Vec<Vec<usize>>) = (
            add.into_iter()
                .map(|r| r.into_iter().map(Option::unwrap).collect())
                .collect(),
            mul.into_iter()
                .map(|r| r.into_iter().map(Option::unwrap).collect())
                .collect(),
        );
        for a in 0..n {
            for b in 0..n {
                ensure(add[a][b] == add[b][a], || {
                    format!("addition commutes, Z/{m}")
                })?;
                ensure(mul[a][b] == mul[b][a], || {
                    format!("multiplication commutes, Z/{m}")
                })?;
                for c in 0..n {
                    let ctx = || format!("Z/{m}: {} {} {}", all[a], all[b], all[c]);
                    ensure(add[add[a][b]][c] == add[a][add[b][c]], ctx)?;
                    ensure(mul[mul[a][b]][c] == mul[a][mul[b][c]], ctx)?;
                    ensure(mul[a][add[b][c]] == add[mul[a][b]][mul[a][c]], ctx)?;
                    triples += 1;
                }
            }
        }
    }
    Ok(format!("{triples} triples on [1,2]"))
}

fn teichmuller_multiplicative() -> Outcome {
    let t = TruncationSet::big(2);
    let z6 = zm(6);
    for a in 0..6 {
        for b in 0..6 {
            let tm = |x: i64| teichmuller(&RingElement::from_int(&z6, x), &t);
            ensure(ok(tm(a).try_mul(&tm(b)))? == tm(a * b), || {
                format!("[{a}][{b}] over Z/6")
            })?;
        }
    }
    let mut r = rng(5);
    for p in [2, 3] {
        let t = ok(TruncationSet::p_typical(p, 3))?;
        for _ in 0..50 {
            let (a, b) = (r.gen_range(-1000i64..=1000), r.gen_range(-1000i64..=1000));
            let tm = |x: i64| teichmuller(&RingElement::integer(x), &t);
            ensure(ok(tm(a).try_mul(&tm(b)))? == tm(a * b), || {
                format!("[{a}][{b}] at p={p}")
            })?;
        }
    }
    Ok("all pairs in Z/6, 50 integer pairs at p=2,3".into())
}

fn random_zx(r: &mut impl Rng, ring: &RingDescriptor) -> Result<RingElement, String> {
    let text = (0..=r.gen_range(0..=3))
        .map(|k| format!("({})*x^{k}", r.gen_range(-5..=5)))
        .collect::<Vec<_>>()
        .join(" + ");
    ok(RingElement::parse(ring, &text))
}

fn dwork_homomorphism() -> Outcome {
    let zx = ok(RingDescriptor::parse("Z[x]"))?;
    let mut r = rng(6);
    for p in [2, 3] {
        let lifts = [
            ok(FrobeniusLift::integers(p))?,
            ok(FrobeniusLift::power_map(&zx, p))?,
        ];
        for lift in &lifts {
            for _ in 0..50 {
                let (a, b) = if lift.ring() == &RingDescriptor::Integer {
                    (
                        RingElement::integer(r.gen_range(-100..=100)),
                        RingElement::integer(r.gen_range(-100..=100)),
                    )
                } else {
                    (random_zx(&mut r, &zx)?, random_zx(&mut r, &zx)?)
                };
                let d = |x: &RingElement| ok(dwork_action(lift, x, 3));
                let (da, db) = (d(&a)?, d(&b)?);
                let ctx = || format!("{lift}: a = {a}, b = {b}");
                ensure(d(&ok(a.try_add(&b))?)? == ok(da.try_add(&db))?, ctx)?;
                ensure(d(&ok(a.try_mul(&b))?)? == ok(da.try_mul(&db))?, ctx)?;
            }
        }
    }
    let two = ok(dwork_action(
        &ok(FrobeniusLift::integers(2))?,
        &RingElement::integer(2),
        3,
    ))?;
    ensure(two.to_string() == "[2,-1,-4]", || {
        format!("dwork(2) = {two}")
    })?;
    Ok(format!("50 pairs per lift at p=2,3; dwork(2) = {two}"))
}

const N: usize = 8;

fn p_basis(f: &SymFunc) -> Result<SymFunc, String> {
    ok(change_basis(&f.to_rational(), Basis::PowerSum))
}

/// Power series truncated at `t^{N+1}` with coefficients in the p-basis.
fn series_mul(a: &[SymFunc], b: &[SymFunc]) -> Result<Vec<SymFunc>, String> {
    (0..=N)
        .map(|k| {
            (0..=k).try_fold(
                SymFunc::zero(Basis::PowerSum, CoeffRing::Rational),
                |acc, i| ok(acc.try_add(&ok(a[i].try_mul(&b[k - i]))?)),
            )
        })
        .collect()
}

fn series_one() -> Vec<SymFunc> {
    let mut s = vec![SymFunc::zero(Basis::PowerSum, CoeffRing::Rational); N + 1];
    s[0] = SymFunc::constant(Basis::PowerSum, 1).to_rational();
    s
}

fn four_way_product() -> Result<(), String> {
    // exp(-Σ p_k t^k / k)
    let mut x = vec![SymFunc::zero(Basis::PowerSum, CoeffRing::Rational); N + 1];
    for (k, xk) in x.iter_mut().enumerate().skip(1) {
        *xk = SymFunc::generator(Basis::PowerSum, k as u32)
            .scale(&BigRational::new((-1).into(), (k as i64).into()));
    }
    let mut exp_side = series_one();
    let mut power = series_one();
    let mut factorial = BigInt::one();
    for j in 1..=N {
        power = series_mul(&power, &x)?;
        factorial *= j;
        let inv = BigRational::new(BigInt::one(), factorial.clone());
        for k in 0..=N {
            exp_side[k] = ok(exp_side[k].try_add(&power[k].scale(&inv)))?;
        }
    }
    // Π (1 - w_k t^k)
    let mut witt_side = series_one();
    for k in 1..=N {
        let mut factor = series_one();
        factor[k] = p_basis(&SymFunc::generator(Basis::Witt, k as u32))?.neg();
        witt_side = series_mul(&witt_side, &factor)?;
    }
    // Π_{i ≤ N} (1 - x_i t)
    let zz = RingDescriptor::Integer;
    let mut vars = vec![MultiPoly::zero(&zz); N + 1];
    vars[0] = MultiPoly::one(&zz);
    for i in 1..=N {
        let xi = MultiPoly::var(&zz, Var::indexed("x", i as u32));
        for k in (1..=N).rev() {
            vars[k] = &vars[k] - &(&xi * &vars[k - 1]);
        }
    }
    for n in 0..=N {
        let e_side = match n {
            0 => SymFunc::constant(Basis::Elementary, 1),
            _ => SymFunc::generator(Basis::Elementary, n as u32).scale_int(if n % 2 == 0 {
                1
            } else {
                -1
            }),
        };
        let from_vars = ok(from_polynomial(&vars[n], N as u32))?;
        ensure(p_basis(&e_side)? == exp_side[n], || {
            format!("e-side at t^{n}")
        })?;
        ensure(witt_side[n] == exp_side[n], || format!("w-side at t^{n}"))?;
        ensure(p_basis(&from_vars)? == exp_side[n], || {
            format!("variable side at t^{n}")
        })?;
    }
    Ok(())
}

fn random_p_function(r: &mut impl Rng, deg: u32) -> SymFunc {
    let mut f = SymFunc::zero(Basis::PowerSum, CoeffRing::Integer);
    for d in 1..=deg {
        let parts = partitions_of(d);
        let k = if d == deg { 1 } else { r.gen_range(0..=1) };
        for _ in 0..k {
            let lambda = parts[r.gen_range(0..parts.len())].clone();
            let c = [-2, -1, 1, 2][r.gen_range(0..4)];
            f = f
                .try_add(&SymFunc::term(Basis::PowerSum, lambda, rat(c)))
                .expect("same basis");
        }
    }
    f
}

/// `f ∘ g` restricted to `n` variables by substituting the monomials of `g`
/// into the power sums of `f`.
fn substitution_oracle(f: &SymFunc, g: &SymFunc, n: u32) -> Result<MultiPoly, String> {
    let g_m = ok(ok(change_basis(g, Basis::Monomial))?.integralize())?;
    let g_poly = ok(expand(&g_m, n, "x"))?;
    let zz = RingDescriptor::Integer;
    let mut args = Vec::new();
    for (m, c) in g_poly.iter() {
        let Value::Int(c) = c else {
            return Err("non-integral monomial coefficient".into());
        };
        let copies = u32::try_from(c).map_err(|_| "g must be monomial-positive".to_string())?;
        for _ in 0..copies {
            args.push(MultiPoly::monomial(&zz, m.clone(), zz.one()));
        }
    }
    ok(ok(evaluate(f, &args))?.map_ring(&RingDescriptor::Rational))
}

fn symfunc_identities() -> Outcome {
    for n in 1..=8u32 {
        let mut rhs = SymFunc::zero(Basis::Witt, CoeffRing::Integer);
        for d in (1..=n).filter(|d| n % d == 0) {
            let w = ok(SymFunc::generator(Basis::Witt, d).pow(n / d))?;
            rhs = ok(rhs.try_add(&w.scale_int(d as i64)))?;
        }
        let psi = SymFunc::generator(Basis::PowerSum, n);
        ensure(ok(rhs.same_element(&psi))?, || {
            format!("psi_{n} in the w-basis")
        })?;
    }
    four_way_product()?;

    for m in 1..=12u32 {
        for n in (1..=12u32).filter(|n| m * n <= 12) {
            let got = ok(plethysm(
                &SymFunc::generator(Basis::PowerSum, m),
                &SymFunc::generator(Basis::PowerSum, n),
            ))?;
            ensure(got == SymFunc::generator(Basis::PowerSum, m * n), || {
                format!("psi_{m} o psi_{n}")
            })?;
        }
    }

    let mut r = rng(7);
    for _ in 0..10 {
        let (a, b, c) = (r.gen_range(1..=4), r.gen_range(1..=4), r.gen_range(1..=4));
        let (f, g, h) = (
            random_p_function(&mut r, a),
            random_p_function(&mut r, b),
            random_p_function(&mut r, c),
        );
        let left = ok(plethysm(&ok(plethysm(&f, &g))?, &h))?;
        let right = ok(plethysm(&f, &ok(plethysm(&g, &h))?))?;
        ensure(left == right, || format!("({f}) @ ({g}) @ ({h})"))?;
    }

    for _ in 0..20 {
        let (a, b) = (r.gen_range(1..=4u32), r.gen_range(1..=4u32));
        let basis = [Basis::Elementary, Basis::Witt, Basis::PowerSum][r.gen_range(0..3)];
        let f = ok(change_basis(&random_p_function(&mut r, a), basis))?;
        let f = if basis.is_integral() {
            ok(f.integralize())?
        } else {
            f
        };
        // an integral, monomial-positive g
        let mut g = SymFunc::zero(Basis::Monomial, CoeffRing::Integer);
        for d in 1..=b {
            let parts = partitions_of(d);
            let lambda = parts[r.gen_range(0..parts.len())].clone();
            let c = if d == b {
                r.gen_range(1..=2)
            } else {
                r.gen_range(0..=1)
            };
            g = ok(g.try_add(&SymFunc::term(Basis::Monomial, lambda, rat(c))))?;
        }
        // enough variables to see every term, up to six
        let n = (a * b).min(6);
        let fast = ok(plethysm(&f, &g))?;
        let fast = ok(expand(&fast.to_rational(), n, "x"))?;
        let slow = substitution_oracle(&f, &g, n)?;
        ensure(fast == slow, || format!("({f}) @ ({g}) in {n} variables"))?;
    }
    Ok("psi/w relation, four-way product mod t^9, psi composition, associativity, substitution oracle".into())
}

fn linearization() -> Outcome {
    for n in 2..=8u32 {
        ensure(
            ok(is_additive(&SymFunc::generator(Basis::PowerSum, n)))?,
            || format!("psi_{n} additive"),
        )?;
        ensure(
            !ok(is_additive(&SymFunc::generator(Basis::Elementary, n)))?,
            || format!("e_{n} not additive"),
        )?;
    }
    for d in 1..=6u32 {
        let space = ok(additive_subspace(d))?;
        ensure(space.len() == 1, || {
            format!("additive space in degree {d} has dimension {}", space.len())
        })?;
        let v = p_basis(&space[0])?;
        let single = v.terms().count() == 1 && !v.coeff(&Partition::single(d)).is_zero();
        ensure(single, || {
            format!("degree {d}: {v} is not a multiple of p[{d}]")
        })?;
    }
    let mut witnesses = Vec::new();
    for p in [2, 3] {
        let report = ok(linearization_report(p))?;
        for c in &report {
            ensure(c.passed(), || {
                format!("p={p}: {} (witness {})", c.check, c.witness)
            })?;
        }
        witnesses.push(format!("p={p}: ct F = {}", report[2].witness));
    }
    Ok(witnesses.join("; "))
}

fn binomial() -> Outcome {
    for m in -10i64..=10 {
        let lambda = ok(lambda_from_adams(&vec![RingElement::integer(m); 6]))?;
        for (n, l) in lambda.iter().enumerate() {
            let mut falling = BigInt::one();
            let mut fact = BigInt::one();
            for i in 0..n as i64 {
                falling *= m - i;
                fact *= i + 1;
            }
            ensure(*l == RingElement::integer(falling / fact), || {
                format!("lambda_{n}({m}) = {l}")
            })?;
        }
    }
    Ok("|m| <= 10, n <= 6".into())
}

fn wilkerson() -> Outcome {
    let mut shown = Vec::new();
    for p in [2u32, 3, 5] {
        let psi = ok(change_basis(
            &SymFunc::generator(Basis::PowerSum, p),
            Basis::Elementary,
        ))?;
        let diff = ok(psi.try_sub(&ok(SymFunc::generator(Basis::Elementary, 1).pow(p))?))?;
        ensure(diff.homogeneous(p) == diff, || {
            format!("p={p}: not homogeneous")
        })?;
        let modulus = rat(p as i64);
        for (lambda, c) in diff.terms() {
            ensure((c / &modulus).is_integer(), || {
                format!("p={p}: coefficient {c} of e{lambda}")
            })?;
        }
        shown.push(format!("psi_{p} - e1^{p} = {diff}"));
    }
    Ok(shown.join("; "))
}

fn artin_hasse_laws() -> Outcome {
    let mut r = rng(11);
    let mut count = 0;
    for outer in 1..=2u32 {
        for inner in 1..=2u32 {
            let t = ok(TruncationSet::p_typical(2, outer + inner - 1))?;
            let inner_t = ok(TruncationSet::p_typical(2, inner))?;
            for _ in 0..10 {
                let vals: Vec<i64> = (0..t.len()).map(|_| r.gen_range(-20..=20)).collect();
                let a = ok(WittVector::from_i64s(
                    t.clone(),
                    &RingDescriptor::Integer,
                    &vals,
                ))?;
                let d = ok(artin_hasse(&a, 2, outer, inner))?;
                ensure(d.components()[0] == ok(a.restrict(&inner_t))?, || {
                    format!("counit at {a}")
                })?;
                let b = RingElement::integer(r.gen_range(-20..=20));
                let d = ok(artin_hasse(&teichmuller(&b, &t), 2, outer, inner))?;
                let ok_teich = d.components()[0] == teichmuller(&b, &inner_t)
                    && d.components()[1..].iter().all(WittVector::is_zero);
                ensure(ok_teich, || format!("naturality at [{b}]: {d}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} samples at p=2, lengths <= 2"))
}

/// The golden corpus: one `expression<TAB>value` pair per line.
pub const CORPUS: &str = include_str!("../tests/data/corpus.tsv");

pub fn corpus_entries() -> impl Iterator<Item = (&'static str, &'static str)> {
    CORPUS
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| l.split_once('\t').unwrap_or((l, "")))
}

fn corpus_round_trip() -> Outcome {
    let mut count = 0;
    for (input, want) in corpus_entries() {
        let e = ok(expr::parse(input))?;
        let printed = e.to_string();
        ensure(ok(expr::parse(&printed))? == e, || {
            format!("print/parse of `{input}` gave `{printed}`")
        })?;
        let value = ok(e.eval())?;
        let shown = value.to_string();
        ensure(shown == want, || {
            format!("`{input}` evaluated to `{shown}`, expected `{want}`")
        })?;
        let again = ok(expr::eval_str(&shown))?;
        ensure(ok(again.same_element(&value))?, || {
            format!("`{shown}` does not evaluate to itself")
        })?;
        count += 1;
    }
    ensure(count == 50, || {
        format!("corpus has {count} entries, expected 50")
    })?;
    Ok(format!("{count} expressions"))
}
