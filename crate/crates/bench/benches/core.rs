use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use wepart_bench::{cograph, positive_cotree, prism, we_instance};
use wepart_core::cograph::has_nice_automorphism;
use wepart_core::equitability::{is_b_invariant, is_weight_equitable, is_weight_equitable_commute};
use wepart_core::oracle::{enumerate_weight_equitable, EnumerationBudget};
use wepart_core::spectral::{perron, DEFAULT_PERRON_TOL};
use wepart_core::Cotree;

fn bench_perron(c: &mut Criterion) {
    let mut group = c.benchmark_group("perron");
    for n in [64, 256, 1024] {
        let g = cograph(n, 1);
        group.bench_with_input(BenchmarkId::new("cograph", n), &g, |b, g| {
            b.iter(|| perron(black_box(g), DEFAULT_PERRON_TOL).unwrap())
        });
        let g = prism(n);
        group.bench_with_input(BenchmarkId::new("prism", n), &g, |b, g| {
            b.iter(|| perron(black_box(g), DEFAULT_PERRON_TOL).unwrap())
        });
    }
    group.finish();
}

fn bench_checks(c: &mut Criterion) {
    let mut group = c.benchmark_group("weight_equitable");
    for n in [32, 128] {
        let (g, nu, p) = we_instance(n, 3);
        group.bench_function(BenchmarkId::new("direct", n), |b| {
            b.iter(|| is_weight_equitable(&g, &nu, black_box(&p), 1e-8).unwrap())
        });
        group.bench_function(BenchmarkId::new("commute", n), |b| {
            b.iter(|| is_weight_equitable_commute(&g, &nu, black_box(&p), 1e-8).unwrap())
        });
        group.bench_function(BenchmarkId::new("b_invariant", n), |b| {
            b.iter(|| is_b_invariant(&g, &nu, black_box(&p), 1e-8).unwrap())
        });
    }
    group.finish();
}

fn bench_cotree(c: &mut Criterion) {
    let mut group = c.benchmark_group("cotree");
    group.sample_size(20);
    for n in [500, 1000, 2000, 4000] {
        let g = cograph(n, 7);
        group.bench_with_input(BenchmarkId::new("from_graph", n), &g, |b, g| {
            b.iter(|| Cotree::from_graph(black_box(g)).unwrap())
        });
        let t = positive_cotree(n / 4, 0);
        group.bench_with_input(BenchmarkId::new("nice_automorphism", n), &t, |b, t| {
            b.iter(|| has_nice_automorphism(black_box(t)))
        });
    }
    group.finish();
}

fn bench_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("we_enumeration");
    group.sample_size(10);
    for n in [6, 8] {
        let g = cograph(n, 2);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| enumerate_weight_equitable(g, 1e-8, &EnumerationBudget::partitions()).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_perron, bench_checks, bench_cotree, bench_enumeration);
criterion_main!(benches);
