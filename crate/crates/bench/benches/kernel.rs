use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use plethora::symfunc::{change_basis, plethysm, Basis, SymFunc};
use plethora::witt::compute_structure_polys;
use plethora::{RingDescriptor, TruncationSet, WittVector};

fn structure_polynomials(c: &mut Criterion) {
    let mut group = c.benchmark_group("structure_polys");
    group.sample_size(10);
    let sets = [
        ("p2_len3", TruncationSet::p_typical(2, 3).unwrap()),
        ("p3_len3", TruncationSet::p_typical(3, 3).unwrap()),
        ("big6", TruncationSet::big(6)),
    ];
    for (name, t) in sets {
        group.bench_with_input(BenchmarkId::from_parameter(name), &t, |b, t| {
            b.iter(|| compute_structure_polys(black_box(t)).unwrap())
        });
    }
    group.finish();
}

fn witt_arithmetic(c: &mut Criterion) {
    let t = TruncationSet::big(8);
    let zz = RingDescriptor::Integer;
    let a = WittVector::from_i64s(t.clone(), &zz, &[3, -1, 4, 1, -5, 9, 2, -6]).unwrap();
    let b = WittVector::from_i64s(t, &zz, &[2, 7, -1, 8, 2, -8, 1, 8]).unwrap();
    // warm the structure-polynomial cache outside the timed loop
    a.try_mul(&b).unwrap();
    c.bench_function("witt_mul_big8", |bench| {
        bench.iter(|| black_box(&a).try_mul(&b).unwrap())
    });
    c.bench_function("witt_add_big8", |bench| {
        bench.iter(|| black_box(&a).try_add(&b).unwrap())
    });
}

fn plethysm_bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("plethysm");
    for (f, g) in [(2u32, 3u32), (3, 3), (4, 3)] {
        let fe = SymFunc::generator(Basis::Elementary, f);
        let ge = SymFunc::generator(Basis::Elementary, g);
        group.bench_function(format!("e{f}_of_e{g}"), |b| {
            b.iter(|| plethysm(black_box(&fe), black_box(&ge)).unwrap())
        });
    }
    group.finish();
}

fn base_change(c: &mut Criterion) {
    let mut group = c.benchmark_group("change_basis");
    for n in [6u32, 8, 10] {
        let p = SymFunc::generator(Basis::PowerSum, n);
        let e = SymFunc::generator(Basis::Elementary, n);
        group.bench_function(format!("p{n}_to_w"), |b| {
            b.iter(|| change_basis(black_box(&p), Basis::Witt).unwrap())
        });
        group.bench_function(format!("e{n}_to_m"), |b| {
            b.iter(|| change_basis(black_box(&e), Basis::Monomial).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    structure_polynomials,
    witt_arithmetic,
    plethysm_bench,
    base_change
);
criterion_main!(benches);
