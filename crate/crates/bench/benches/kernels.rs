use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use kdyck_core::formulas::dm_count;
use kdyck_core::oracle::{count_paths, PathSpec};
use kdyck_core::{fuss_catalan_sequence, generate_f, ubar_fixed_point, KParameter};

fn bench_dm_count(c: &mut Criterion) {
    let k = KParameter::new(3).unwrap();
    let mut group = c.benchmark_group("dm_count");
    for n in [100usize, 500, 2000] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| dm_count(k, black_box(n), black_box(3 * n / 2)))
        });
    }
    group.finish();
}

fn bench_routes(c: &mut Criterion) {
    let k = KParameter::new(2).unwrap();
    c.bench_function("generate_f k=2 m=12", |b| {
        b.iter(|| generate_f(k, black_box(12)))
    });
    c.bench_function("count_paths k=2 n=60 j=30", |b| {
        b.iter(|| count_paths(PathSpec::new(k, black_box(60), 30, true)))
    });
    c.bench_function("fuss_catalan_sequence k=2 1000", |b| {
        b.iter(|| fuss_catalan_sequence(k, black_box(1000)))
    });
    c.bench_function("ubar_fixed_point k=2 order=40", |b| {
        b.iter(|| ubar_fixed_point(k, black_box(40)))
    });
}

criterion_group!(benches, bench_dm_count, bench_routes);
criterion_main!(benches);
