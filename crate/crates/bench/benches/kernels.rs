//! Benchmarks for the kernels that dominate wall time: monoid enumeration,
//! exact elimination, series fitting, and initial-algebra truncation.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hsdim_core::gallery::{partition_monoid, staircase_monoid};
use hsdim_core::sagbi::{
    hypersurface_three_generator_subalgebra, initial_algebra_truncation, DEFAULT_MAX_PRODUCTS,
};
use hsdim_core::series::{default_guard, fit_rational, partition_series};
use hsdim_core::{rational_rank, IntegerLattice, MonomialOrder, RationalMatrix};

fn bench_hilbert(c: &mut Criterion) {
    let mut group = c.benchmark_group("hilbert_function");
    group.sample_size(10);
    group.bench_function("staircase_n200", |b| {
        let m = staircase_monoid(200);
        b.iter(|| black_box(m.hilbert_function(200, 10_000_000).unwrap()));
    });
    group.bench_function("partition_n40", |b| {
        let m = partition_monoid(40);
        b.iter(|| black_box(m.hilbert_function(40, 10_000_000).unwrap()));
    });
    group.finish();
}

fn bench_linalg(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let rows: Vec<Vec<BigRational>> = (0..40)
        .map(|_| {
            (0..60)
                .map(|_| BigRational::from(BigInt::from(rng.random_range(-9..=9))))
                .collect()
        })
        .collect();
    let m = RationalMatrix::from_rows(rows).unwrap();
    c.bench_function("rational_rank_40x60", |b| {
        b.iter(|| black_box(rational_rank(&m)))
    });

    let gens: Vec<Vec<BigInt>> = (0..30)
        .map(|_| (0..8).map(|_| BigInt::from(rng.random_range(-50..=50i64))).collect())
        .collect();
    let lattice = IntegerLattice::new(8, gens).unwrap();
    c.bench_function("lattice_rank_30x8", |b| b.iter(|| black_box(lattice.rank())));
}

fn bench_series(c: &mut Criterion) {
    let h = staircase_monoid(400)
        .hilbert_function(400, 10_000_000)
        .unwrap();
    c.bench_function("fit_rational_n400", |b| {
        b.iter(|| black_box(fit_rational(&h, &[1, 1], default_guard(&[1, 1])).unwrap()))
    });
    c.bench_function("partition_series_n2000", |b| {
        b.iter(|| black_box(partition_series(2000)))
    });
}

fn bench_sagbi(c: &mut Criterion) {
    let mut group = c.benchmark_group("initial_algebra");
    group.sample_size(10);
    group.bench_function("hypersurface_d12", |b| {
        let s = hypersurface_three_generator_subalgebra(MonomialOrder::grlex(2)).unwrap();
        b.iter(|| black_box(initial_algebra_truncation(&s, 12, DEFAULT_MAX_PRODUCTS).unwrap()));
    });
    group.finish();
}

criterion_group!(benches, bench_hilbert, bench_linalg, bench_series, bench_sagbi);
criterion_main!(benches);
