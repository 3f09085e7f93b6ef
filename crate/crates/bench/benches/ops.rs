use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use num_bigint::{BigInt, BigUint};

use cutset_bench::{mid_band_profile, scattered_subset, BENCH_N};
use cutset_core::{
    boundary, cascade, feasibility, g, is_cutset, rank, two_level, unrank,
};

fn arithmetic(c: &mut Criterion) {
    let k = BigUint::from(3_759_525u64);
    let k_int = BigInt::from(3_759_525u64);

    c.bench_function("cascade 3759525 at index 4", |b| {
        b.iter(|| cascade(black_box(&k), black_box(4)).unwrap())
    });
    c.bench_function("boundary 3759525 at index 96", |b| {
        b.iter(|| boundary(black_box(&k_int), black_box(96)).unwrap())
    });
}

fn ranking(c: &mut Criterion) {
    let s = scattered_subset();
    let r = rank(&s);

    c.bench_function("rank a 6-set in [100]", |b| b.iter(|| rank(black_box(&s))));
    c.bench_function("unrank a 6-set in [100]", |b| {
        b.iter(|| unrank(black_box(&r), 6, BENCH_N).unwrap())
    });
}

fn sweeps(c: &mut Criterion) {
    let p = mid_band_profile();

    c.bench_function("feasibility sweep over [100]", |b| {
        b.iter(|| feasibility(black_box(&p)))
    });
    c.bench_function("g_100(4, 8) by bisection", |b| {
        b.iter(|| g(black_box(BENCH_N), black_box(4), black_box(8)).unwrap())
    });
}

fn reachability(c: &mut Criterion) {
    let family = two_level(20, 9).unwrap();

    c.bench_function("chain reachability over [20]", |b| {
        b.iter(|| is_cutset(black_box(&family)).unwrap())
    });
}

criterion_group!(benches, arithmetic, ranking, sweeps, reachability);
criterion_main!(benches);
